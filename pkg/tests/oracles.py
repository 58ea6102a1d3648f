"""Independent reference implementations used to cross-check the package.

Everything in here is deliberately written from scratch on plain tuples,
sets and Fractions, sharing no code with groupineq. The implementations
favour obviousness over speed; they are the ground truth the fast code
is tested against.

Permutations are tuples of 0-based images. Composition applies the right
factor first, matching the package convention: (a * b)(x) = a(b(x)).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

Perm = Tuple[int, ...]


def p_identity(degree: int) -> Perm:
    return tuple(range(degree))


def p_mul(a: Perm, b: Perm) -> Perm:
    return tuple(a[b[x]] for x in range(len(a)))


def p_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def p_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Perm:
    """Build a permutation from 1-based cycles, e.g. [[3, 4], [2, 4, 3]] is invalid
    (overlapping cycles are multiplied left to right instead of rejected here,
    because the oracle is only fed disjoint cycle lists)."""
    images = list(range(degree))
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            images[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(images)


def generated_group(gens: Iterable[Perm], degree: int) -> FrozenSet[Perm]:
    """Naive fixpoint closure: keep multiplying until nothing new appears."""
    elems: Set[Perm] = {p_identity(degree)}
    gens = list(gens)
    for g in gens:
        elems.add(g)
    changed = True
    while changed:
        changed = False
        snapshot = list(elems)
        for a in snapshot:
            for b in snapshot:
                c = p_mul(a, b)
                if c not in elems:
                    elems.add(c)
                    changed = True
        for a in snapshot:
            c = p_inv(a)
            if c not in elems:
                elems.add(c)
                changed = True
    return frozenset(elems)


def subgroup_closure(seed: Iterable[Perm], degree: int) -> FrozenSet[Perm]:
    return generated_group(seed, degree)


def brute_force_subgroups(elements: Sequence[Perm], degree: int) -> Set[FrozenSet[Perm]]:
    """Enumerate every subgroup of the group given by `elements`.

    Method: close every subset of at most 2 elements, then repeatedly extend
    each known subgroup by one extra element and close again, until no new
    subgroup shows up. Complete because any subgroup is reachable from a
    maximal proper subgroup (already found, by induction on order) plus one
    element outside it, and the 2-generated seeds cover the induction base.
    """
    found: Set[FrozenSet[Perm]] = set()
    for size in (0, 1, 2):
        for subset in combinations(elements, size):
            found.add(subgroup_closure(subset, degree))
    changed = True
    while changed:
        changed = False
        for sub in list(found):
            for g in elements:
                if g in sub:
                    continue
                bigger = subgroup_closure(list(sub) + [g], degree)
                if bigger not in found:
                    found.add(bigger)
                    changed = True
    return found


def product_set(h: Iterable[Perm], k: Iterable[Perm]) -> Set[Perm]:
    return {p_mul(a, b) for a in h for b in k}


def is_closed_under_mul(subset: Set[Perm]) -> bool:
    return all(p_mul(a, b) in subset for a in subset for b in subset)


def evaluate_fraction(parent_order: int,
                      subset_orders: Dict[FrozenSet[int], int],
                      coeffs: Dict[FrozenSet[int], int]) -> Fraction:
    """Exact value of prod over A of (|G| / |G_A|) ** c_A.

    The linear form sum c_A * H(X_A) with H(X_A) = log(|G|/|G_A|) is
    nonnegative exactly when this product is >= 1.
    """
    value = Fraction(1)
    for subset, c in coeffs.items():
        if c == 0:
            continue
        value *= Fraction(parent_order, subset_orders[frozenset(subset)]) ** c
    return value


def subset_intersection_orders(subgroups: Sequence[FrozenSet[Perm]]) -> Dict[FrozenSet[int], int]:
    """All nonempty subset intersection orders for a tuple of subgroups,
    keyed by frozensets of 1-based positions."""
    n = len(subgroups)
    orders: Dict[FrozenSet[int], int] = {}
    for size in range(1, n + 1):
        for positions in combinations(range(1, n + 1), size):
            inter = set(subgroups[positions[0] - 1])
            for p in positions[1:]:
                inter &= subgroups[p - 1]
            orders[frozenset(positions)] = len(inter)
    return orders


# A tiny cycle-notation reader for oracle-side inputs. Accepts strings such
# as "(1,2)(3,4)" denoting one permutation (product of disjoint cycles).
def parse_disjoint_cycles(text: str, degree: int) -> Perm:
    cycles: List[List[int]] = []
    current: List[int] = []
    number = ""
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
            current = []
        elif ch == ")":
            if number:
                current.append(int(number))
                number = ""
            depth -= 1
            cycles.append(current)
        elif ch.isdigit():
            number += ch
        elif ch in ", \t":
            if number:
                current.append(int(number))
                number = ""
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    seen: Set[int] = set()
    for cyc in cycles:
        for pt in cyc:
            if pt in seen:
                raise ValueError(f"cycles in {text!r} are not disjoint")
            seen.add(pt)
    return p_from_cycles(cycles, degree)


def s_n_elements(n: int) -> List[Perm]:
    from itertools import permutations

    return [tuple(p) for p in permutations(range(n))]


# ---------------------------------------------------------------------------
# Regex-based expansion of inequality texts into entropy coefficients.
#
# This is the reference the DSL parser is checked against. It leans on the
# textbook identities
#     H(A|B)    = H(AB) - H(B)
#     I(A;B|C)  = H(AC) + H(BC) - H(ABC) - H(C)
# and nothing else. Variables are 1-based. The only structural assumption is
# that '+' and '-' never occur inside parentheses, which holds for the whole
# grammar (quantities contain ';', '|', ',' and variables only).

import re

_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d+)?\s*([HI])\s*\(([^()]*)\)\s*$")
_VAR_RE = re.compile(r"X\s*(\d+)")


def _var_set(text: str) -> FrozenSet[int]:
    found = [int(m) for m in _VAR_RE.findall(text)]
    if not found and text.strip():
        raise ValueError(f"no variables in argument {text!r}")
    return frozenset(found)


def _expand_quantity(kind: str, body: str, coeff: int,
                     out: Dict[FrozenSet[int], int]) -> None:
    def add(subset: FrozenSet[int], c: int) -> None:
        if not subset or c == 0:
            return
        new = out.get(subset, 0) + c
        if new:
            out[subset] = new
        else:
            out.pop(subset, None)

    parts = body.split("|")
    cond = _var_set(parts[1]) if len(parts) == 2 else frozenset()
    if len(parts) > 2:
        raise ValueError(f"more than one '|' in {body!r}")
    if kind == "H":
        main = _var_set(parts[0])
        add(main | cond, coeff)
        add(cond, -coeff)
    else:
        left_txt, right_txt = parts[0].split(";")
        left = _var_set(left_txt)
        right = _var_set(right_txt)
        add(left | cond, coeff)
        add(right | cond, coeff)
        add(left | right | cond, -coeff)
        add(cond, -coeff)


def _expand_side(expr: str, sign: int,
                 out: Dict[FrozenSet[int], int]) -> None:
    if expr.strip() == "0":
        return
    # Split into signed terms; safe because +/- never nest inside parens.
    pieces = re.findall(r"[+-]?[^+-]+", expr)
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if m is None:
            raise ValueError(f"cannot read term {piece!r}")
        sgn = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        _expand_quantity(m.group(3), m.group(4), sign * sgn * mult, out)


def expand_inequality(text: str) -> Dict[FrozenSet[int], int]:
    """Coefficients of the form sum c_A H(X_A) >= 0 equivalent to `text`.

    '<=' and '>=' are both accepted; a bare expression is read as >= 0.
    """
    out: Dict[FrozenSet[int], int] = {}
    if "<=" in text:
        lhs, rhs = text.split("<=")
        _expand_side(lhs, -1, out)
        _expand_side(rhs, +1, out)
    elif ">=" in text:
        lhs, rhs = text.split(">=")
        _expand_side(lhs, +1, out)
        _expand_side(rhs, -1, out)
    else:
        _expand_side(text, +1, out)
    return out


if __name__ == "__main__":
    # Print the derived constants that get frozen into the test-suite.
    s3 = s_n_elements(3)
    s4 = s_n_elements(4)
    print("S3 subgroup count:", len(brute_force_subgroups(s3, 3)))
    print("S4 subgroup count:", len(brute_force_subgroups(s4, 4)))

    g1 = subgroup_closure([parse_disjoint_cycles("(3,4)", 4),
                           parse_disjoint_cycles("(2,4,3)", 4)], 4)
    g2 = subgroup_closure([parse_disjoint_cycles("(1,3)", 4),
                           parse_disjoint_cycles("(1,3,2)", 4)], 4)
    print("|G1| =", len(g1), " |G2| =", len(g2))
    print("|G1 n G2| =", len(g1 & g2))
    ps = product_set(g1, g2)
    print("|G1G2| =", len(ps), " closed:", is_closed_under_mul(ps))

    big = subgroup_closure([parse_disjoint_cycles("(1,2)", 4),
                            parse_disjoint_cycles("(1,2,3,4)", 4)], 4)
    print("|<(1,2),(1,2,3,4)>| =", len(big))

    s5 = s_n_elements(5)
    print("S5 subgroup count:", len(brute_force_subgroups(s5, 5)))
