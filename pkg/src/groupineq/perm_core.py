"""Permutation groups, subgroups as bitsets, and the subgroup lattice.

Permutations act on points 1..d (stored 0-based internally) with d <= 32.
A Group materializes its full element list plus multiplication and inverse
tables, so everything downstream is index arithmetic. A Subgroup is a plain
integer bitmask over the parent's element indices, which makes intersection
an AND plus a popcount; searches evaluate millions of those.

Composition convention: (a * b) applies b first, then a.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "MAX_DEGREE",
    "AMBIENT_ORDER_CAP",
    "LATTICE_ORDER_CAP",
    "Permutation",
    "Group",
    "Subgroup",
    "SubgroupLattice",
    "closure",
    "intersect",
    "set_product_order",
    "is_product_subgroup",
    "is_normal",
    "all_subgroups",
    "sylow_subgroups",
    "is_abelian",
    "is_isomorphic",
    "conjugate_tuple",
    "prime_factors",
    "int_valuation",
]

MAX_DEGREE = 32
AMBIENT_ORDER_CAP = 5040
LATTICE_ORDER_CAP = 1000


def prime_factors(n: int) -> Dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}, expected a positive integer")
    out: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def int_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n >= 1."""
    if n < 1:
        raise ValueError(f"valuation needs a positive integer, got {n}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..d}, stored as a tuple of 0-based images."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.images)
        if not 1 <= d <= MAX_DEGREE:
            raise ValueError(f"degree {d} outside supported range 1..{MAX_DEGREE}")
        if sorted(self.images) != list(range(d)):
            raise ValueError(f"images {self.images} are not a bijection on 0..{d - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for x, y in enumerate(self.images):
            out[y] = x
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles as tuples of 1-based points, each starting at
        its smallest point, listed by smallest point."""
        seen = [False] * self.degree
        out: List[Tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(pt + 1 for pt in cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(pt) for pt in cyc) + ")" for cyc in cycs)

    @staticmethod
    def from_cycles(text: str, degree: Optional[int] = None) -> "Permutation":
        """Parse cycle notation like "(1,2)(3,4)" into one permutation.

        Points are 1-based; commas or spaces separate points; cycles must be
        disjoint. "()" or an empty string is the identity. When `degree` is
        omitted the largest point mentioned is used.
        """
        cycles: List[List[int]] = []
        current: List[int] = []
        number = ""
        depth = 0
        for pos, ch in enumerate(text):
            if ch == "(":
                if depth != 0:
                    raise ValueError(f"nested '(' at position {pos} in {text!r}")
                depth = 1
                current = []
            elif ch == ")":
                if depth != 1:
                    raise ValueError(f"unmatched ')' at position {pos} in {text!r}")
                if number:
                    current.append(int(number))
                    number = ""
                depth = 0
                if current:
                    cycles.append(current)
            elif ch.isdigit():
                if depth != 1:
                    raise ValueError(f"digit outside cycle at position {pos} in {text!r}")
                number += ch
            elif ch in ", \t":
                if number:
                    current.append(int(number))
                    number = ""
            else:
                raise ValueError(f"unexpected character {ch!r} at position {pos} in {text!r}")
        if depth != 0:
            raise ValueError(f"unclosed '(' in {text!r}")
        top = max((pt for cyc in cycles for pt in cyc), default=1)
        if degree is None:
            degree = top
        if top > degree:
            raise ValueError(f"point {top} exceeds degree {degree} in {text!r}")
        if degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree} in {text!r}")
                if pt in seen:
                    raise ValueError(f"cycles are not disjoint at point {pt} in {text!r}")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                images[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
        return Permutation(tuple(images))


class Group:
    """A finite permutation group with precomputed multiplication tables.

    Elements are sorted canonically (identity first, then by image tuples),
    so two constructions of the same element set are identical. Immutable
    after construction and safe to share across worker processes.
    """

    def __init__(self, name: str, elements: Sequence[Permutation],
                 generator_indices: Sequence[int]) -> None:
        self.name = name
        self.elements: Tuple[Permutation, ...] = tuple(elements)
        self.degree = self.elements[0].degree
        self.order = len(self.elements)
        self.generator_indices: Tuple[int, ...] = tuple(generator_indices)
        self._index: Dict[Tuple[int, ...], int] = {
            p.images: i for i, p in enumerate(self.elements)
        }
        n = self.order
        mul = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(self.elements):
            ai = a.images
            for j, b in enumerate(self.elements):
                mul[i, j] = self._index[tuple(ai[x] for x in b.images)]
        self.mul_table = mul
        inv = np.empty(n, dtype=np.int32)
        for i, a in enumerate(self.elements):
            inv[i] = self._index[a.inverse().images]
        self.inv_table = inv
        self._element_orders: Optional[Tuple[int, ...]] = None
        self._conj_perms: Optional[np.ndarray] = None
        self.full_mask = (1 << n) - 1

    @staticmethod
    def from_generators(name: str, generators: Sequence[Permutation],
                        degree: Optional[int] = None,
                        max_order: int = AMBIENT_ORDER_CAP) -> "Group":
        """Close a generator list into a full Group, breadth-first."""
        if degree is None:
            degree = max((g.degree for g in generators), default=1)
        gens = []
        for g in generators:
            if g.degree > degree:
                raise ValueError(f"generator degree {g.degree} exceeds group degree {degree}")
            if g.degree < degree:
                g = Permutation(g.images + tuple(range(g.degree, degree)))
            gens.append(g)
        ident = Permutation.identity(degree)
        seen: Dict[Tuple[int, ...], Permutation] = {ident.images: ident}
        frontier = [ident]
        while frontier:
            nxt: List[Permutation] = []
            for a in frontier:
                for g in gens:
                    b = g * a
                    if b.images not in seen:
                        seen[b.images] = b
                        nxt.append(b)
                        if len(seen) > max_order:
                            raise ValueError(
                                f"group {name!r} exceeds the ambient order cap {max_order}")
            frontier = nxt
        ordered = [ident] + sorted(
            (p for p in seen.values() if not p.is_identity()), key=lambda p: p.images)
        index = {p.images: i for i, p in enumerate(ordered)}
        gen_idx = sorted({index[g.images] for g in gens if not g.is_identity()})
        return Group(name, ordered, gen_idx)

    def element_index(self, perm: Permutation) -> int:
        idx = self._index.get(perm.images)
        if idx is None:
            raise ValueError(f"{perm.cycle_string()} is not an element of {self.name}")
        return idx

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inv_table[i])

    def element_orders(self) -> Tuple[int, ...]:
        if self._element_orders is None:
            orders = []
            for i in range(self.order):
                n, x = 1, i
                while x != 0:
                    x = self.mul(x, i)
                    n += 1
                orders.append(n)
            self._element_orders = tuple(orders)
        return self._element_orders

    def conj_perms(self) -> np.ndarray:
        """Row x is the permutation i -> x i x^-1 of element indices."""
        if self._conj_perms is None:
            n = self.order
            out = np.empty((n, n), dtype=np.int32)
            for x in range(n):
                out[x] = self.mul_table[self.mul_table[x, :], self.inv_table[x]]
            self._conj_perms = out
        return self._conj_perms

    def subgroup(self, mask: int) -> "Subgroup":
        return Subgroup(self, mask, mask.bit_count())

    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup(1)

    def full_subgroup(self) -> "Subgroup":
        return self.subgroup(self.full_mask)

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of `parent`, stored as a bitmask over element indices."""

    parent: Group = field(compare=False)
    mask: int
    order: int

    def __post_init__(self) -> None:
        if not self.mask & 1:
            raise ValueError("subgroup mask must contain the identity (bit 0)")

    def member_indices(self) -> List[int]:
        m = self.mask
        out = []
        i = 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return out

    def contains(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def permutations(self) -> List[Permutation]:
        return [self.parent.elements[i] for i in self.member_indices()]

    def generator_indices(self) -> List[int]:
        """A small deterministic generating list (greedy, ascending indices)."""
        gens: List[int] = []
        current = 1
        for i in self.member_indices():
            if current >> i & 1:
                continue
            gens.append(i)
            current = closure(self.parent, gens).mask
            if current == self.mask:
                break
        return gens

    def generator_strings(self) -> List[str]:
        return [self.parent.elements[i].cycle_string() for i in self.generator_indices()]

    def same_parent(self, other: "Subgroup") -> bool:
        return self.parent is other.parent

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


def _require_same_parent(h: Subgroup, k: Subgroup, op: str) -> None:
    if not h.same_parent(k):
        raise ValueError(
            f"{op} needs subgroups of the same parent, got {h.parent.name!r} and {k.parent.name!r}")


def closure(parent: Group, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup of `parent` containing the given element indices."""
    mask = 1
    members = [0]
    queue = list(dict.fromkeys(g for g in generators))
    for g in queue:
        if not 0 <= g < parent.order:
            raise ValueError(f"element index {g} outside 0..{parent.order - 1}")
    mul = parent.mul_table
    while queue:
        t = queue.pop()
        if mask >> t & 1:
            continue
        mask |= 1 << t
        members.append(t)
        members_arr = np.array(members, dtype=np.int32)
        prods = np.concatenate([mul[t, members_arr], mul[members_arr, t]])
        for p in np.unique(prods):
            p = int(p)
            if not mask >> p & 1:
                queue.append(p)
    return parent.subgroup(mask)


def intersect(h: Subgroup, k: Subgroup) -> Subgroup:
    """Intersection of two subgroups; a bitwise AND, always a subgroup."""
    _require_same_parent(h, k, "intersect")
    return h.parent.subgroup(h.mask & k.mask)


def set_product_order(h: Subgroup, k: Subgroup) -> int:
    """Cardinality of the product set HK, which is |H||K| / |H n K|."""
    _require_same_parent(h, k, "set_product_order")
    inter = (h.mask & k.mask).bit_count()
    num = h.order * k.order
    assert num % inter == 0
    return num // inter


def product_set_mask(h: Subgroup, k: Subgroup) -> int:
    """Bitmask of the product set {hk : h in H, k in K} (not in general a subgroup)."""
    _require_same_parent(h, k, "product_set_mask")
    mul = h.parent.mul_table
    k_idx = np.array(k.member_indices(), dtype=np.int32)
    mask = 0
    for a in h.member_indices():
        for p in mul[a, k_idx]:
            mask |= 1 << int(p)
    return mask


def is_product_subgroup(h: Subgroup, k: Subgroup) -> bool:
    """True iff the set product HK is itself a subgroup.

    Checked explicitly: enumerate HK and test closure under multiplication.
    (A subset of a finite group containing the identity and closed under
    multiplication is a subgroup.)
    """
    _require_same_parent(h, k, "is_product_subgroup")
    parent = h.parent
    mask = product_set_mask(h, k)
    if parent.order % mask.bit_count() != 0:
        return False
    members = parent.subgroup(mask).member_indices()
    mul = parent.mul_table
    idx = np.array(members, dtype=np.int32)
    for a in members:
        row = mul[a, idx]
        for p in row:
            if not mask >> int(p) & 1:
                return False
    return True


def is_normal(h: Subgroup, ambient: Subgroup) -> bool:
    """True iff g h g^-1 = h for every g in `ambient`; requires h <= ambient.

    It suffices to conjugate by a generating set of the ambient subgroup,
    since the normalizer of h is itself a subgroup.
    """
    _require_same_parent(h, ambient, "is_normal")
    if h.mask & ~ambient.mask:
        raise ValueError("is_normal expects the first subgroup inside the second")
    conj = h.parent.conj_perms()
    h_idx = np.array(h.member_indices(), dtype=np.int32)
    for g in ambient.generator_indices():
        image = conj[g][h_idx]
        m = 0
        for i in image:
            m |= 1 << int(i)
        if m != h.mask:
            return False
    return True


def is_abelian(g: Group) -> bool:
    return bool(np.array_equal(g.mul_table, g.mul_table.T))


@dataclass(frozen=True)
class SubgroupLattice:
    """Every subgroup of a group, with normality, conjugacy and Sylow data.

    `subgroups` is deduplicated and sorted by (order, mask); conjugacy
    classes partition subgroup indices; `sylow_index` maps each prime
    dividing the group order to the indices of its Sylow subgroups.
    """

    group: Group = field(compare=False)
    subgroups: Tuple[Subgroup, ...]
    normal_flags: Tuple[bool, ...]
    conjugacy_classes: Tuple[Tuple[int, ...], ...]
    sylow_index: Dict[int, Tuple[int, ...]] = field(hash=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, mask: int) -> int:
        key = (int(mask).bit_count(), mask)
        lo, hi = 0, len(self.subgroups)
        while lo < hi:
            mid = (lo + hi) // 2
            s = self.subgroups[mid]
            if (s.order, s.mask) < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.subgroups) and self.subgroups[lo].mask == mask:
            return lo
        raise KeyError(f"mask {mask:#x} is not a subgroup of {self.group.name}")

    def conjugation_table(self) -> np.ndarray:
        """(|G|, #subgroups) table: entry [x, s] is the lattice index of x S x^-1."""
        cached = getattr(self, "_conj_table", None)
        if cached is not None:
            return cached
        g = self.group
        conj = g.conj_perms()
        n_sub = len(self.subgroups)
        member_arrays = [np.array(s.member_indices(), dtype=np.int32) for s in self.subgroups]
        table = np.empty((g.order, n_sub), dtype=np.int32)
        for x in range(g.order):
            perm = conj[x]
            for si, arr in enumerate(member_arrays):
                image = perm[arr]
                m = 0
                for i in image:
                    m |= 1 << int(i)
                table[x, si] = self.index_of(m)
        object.__setattr__(self, "_conj_table", table)
        return table


def all_subgroups(g: Group, cap: int = LATTICE_ORDER_CAP) -> SubgroupLattice:
    """Enumerate the complete subgroup lattice of g.

    Seeds with all cyclic subgroups, then repeatedly extends each known
    subgroup by one cyclic generator from outside it and closes, until
    fixpoint. This finds everything: any subgroup K is some maximal
    subgroup H < K (found by induction on order) extended by any element
    of K outside H.
    """
    if g.order > cap:
        raise ValueError(
            f"group {g.name!r} of order {g.order} exceeds the lattice cap {cap}")
    by_mask: Dict[int, Subgroup] = {}
    cyclic_reps: List[Tuple[int, int]] = []  # (mask of <x>, x)
    seen_cyclic = set()
    for x in range(g.order):
        mask = 1
        y = x
        while y != 0:
            mask |= 1 << y
            y = g.mul(y, x)
        if mask not in seen_cyclic:
            seen_cyclic.add(mask)
            cyclic_reps.append((mask, x))
        if mask not in by_mask:
            by_mask[mask] = g.subgroup(mask)
    worklist = list(by_mask.values())
    while worklist:
        sub = worklist.pop()
        for cyc_mask, x in cyclic_reps:
            if sub.mask >> x & 1 or cyc_mask & sub.mask == cyc_mask:
                continue
            bigger = closure(g, sub.generator_indices() + [x])
            if bigger.mask not in by_mask:
                by_mask[bigger.mask] = bigger
                worklist.append(bigger)
    subs = tuple(sorted(by_mask.values(), key=lambda s: (s.order, s.mask)))
    full = g.full_subgroup()
    normal = tuple(is_normal(s, full) for s in subs)
    # Conjugacy classes: orbits under conjugation by group generators.
    index_by_mask = {s.mask: i for i, s in enumerate(subs)}
    conj = g.conj_perms()
    gens = g.generator_indices or tuple(range(g.order))
    assigned = [-1] * len(subs)
    classes: List[Tuple[int, ...]] = []
    for i in range(len(subs)):
        if assigned[i] >= 0:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            j = frontier.pop()
            arr = np.array(subs[j].member_indices(), dtype=np.int32)
            for x in gens:
                m = 0
                for e in conj[x][arr]:
                    m |= 1 << int(e)
                t = index_by_mask[m]
                if t not in orbit:
                    orbit.add(t)
                    frontier.append(t)
        cls = tuple(sorted(orbit))
        for j in cls:
            assigned[j] = len(classes)
        classes.append(cls)
    sylow: Dict[int, Tuple[int, ...]] = {}
    for p, e in prime_factors(g.order).items():
        target = p ** e
        sylow[p] = tuple(i for i, s in enumerate(subs) if s.order == target)
    return SubgroupLattice(g, subs, normal, tuple(classes), sylow)


def sylow_subgroups(g: Group, p: int) -> List[Subgroup]:
    """All Sylow p-subgroups of g; [trivial] when p does not divide |G|."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = int_valuation(g.order, p)
    if e == 0:
        return [g.trivial_subgroup()]
    lattice = all_subgroups(g)
    return [lattice.subgroups[i] for i in lattice.sylow_index[p]]


def _element_order_histogram(g: Group) -> Dict[int, int]:
    hist: Dict[int, int] = {}
    for n in g.element_orders():
        hist[n] = hist.get(n, 0) + 1
    return hist


def _minimal_generators(g: Group) -> List[int]:
    gens: List[int] = []
    current = 1
    for i in range(1, g.order):
        if current >> i & 1:
            continue
        gens.append(i)
        current = closure(g, gens).mask
        if current == g.full_mask:
            break
    return gens


def _extend_isomorphism(g: Group, h: Group, gens: List[int], images: List[int]) -> bool:
    """Check that mapping gens[i] -> images[i] extends to an isomorphism.

    Builds the image of every g-element generated so far by parallel BFS;
    fails on any multiplication conflict or collision.
    """
    mapping = {0: 0}
    frontier = [0]
    pending = list(zip(gens, images))
    for a, b in pending:
        if a in mapping:
            if mapping[a] != b:
                return False
            continue
        mapping[a] = b
        frontier.append(a)
    while frontier:
        a = frontier.pop()
        fa = mapping[a]
        for b, fb in list(mapping.items()):
            for x, fx in ((g.mul(a, b), h.mul(fa, fb)), (g.mul(b, a), h.mul(fb, fa))):
                known = mapping.get(x)
                if known is None:
                    mapping[x] = fx
                    frontier.append(x)
                elif known != fx:
                    return False
    if len(mapping) != len(set(mapping.values())):
        return False
    return True


def is_isomorphic(g: Group, h: Group) -> bool:
    """Isomorphism test: cheap invariants first, then backtracking search
    over generator images (order-preserving candidates only)."""
    if g.order != h.order:
        return False
    if is_abelian(g) != is_abelian(h):
        return False
    if _element_order_histogram(g) != _element_order_histogram(h):
        return False
    if g.order <= LATTICE_ORDER_CAP and h.order <= LATTICE_ORDER_CAP and g.order <= 100:
        hist_g: Dict[int, int] = {}
        for s in all_subgroups(g).subgroups:
            hist_g[s.order] = hist_g.get(s.order, 0) + 1
        hist_h: Dict[int, int] = {}
        for s in all_subgroups(h).subgroups:
            hist_h[s.order] = hist_h.get(s.order, 0) + 1
        if hist_g != hist_h:
            return False
    gens = _minimal_generators(g)
    g_orders = g.element_orders()
    h_orders = h.element_orders()
    candidates = [
        [j for j in range(h.order) if h_orders[j] == g_orders[a]] for a in gens
    ]

    def backtrack(level: int, chosen: List[int]) -> bool:
        if level == len(gens):
            return _extend_isomorphism(g, h, gens, chosen)
        for j in candidates[level]:
            chosen.append(j)
            # Partial consistency: the prefix must already extend cleanly.
            if _extend_isomorphism(g, h, gens[: level + 1], chosen) and backtrack(level + 1, chosen):
                return True
            chosen.pop()
        return False

    if not gens:
        return True  # both trivial
    return backtrack(0, [])


def conjugate_tuple(g: Group, subs: Sequence[Subgroup], x: int) -> Tuple[Subgroup, ...]:
    """Map every subgroup H in the tuple to x H x^-1."""
    if not 0 <= x < g.order:
        raise ValueError(f"element index {x} outside 0..{g.order - 1}")
    perm = g.conj_perms()[x]
    out = []
    for s in subs:
        if s.parent is not g:
            raise ValueError("conjugate_tuple needs subgroups of the given group")
        m = 0
        for i in s.member_indices():
            m |= 1 << int(perm[i])
        out.append(g.subgroup(m))
    return tuple(out)
