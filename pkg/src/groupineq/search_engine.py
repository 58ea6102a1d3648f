"""Exhaustive scans over subgroup tuples, with theorem and symmetry pruning.

A scan enumerates all arity-4 or arity-5 tuples over a group's subgroup
lattice and evaluates the selected inequalities exactly. Four optional
prune rules cut the space:

  theory_common_info  skip tuples whose (G1, G2) pair makes the product
                      G1 G2 a subgroup (nested, either normal, abelian
                      ambient, or explicit product check); the ten
                      five-variable inequalities hold on all of those, so
                      the rule only arms when every selected inequality is
                      one of the ten.
  order_class         group-level classification: all ten hold on abelian
                      groups and groups of order pq, and on p^2 q / p q^2
                      groups with normal Sylow subgroup they can only fail
                      when |G1| = |G2| = p, so positions 1 and 2 shrink to
                      the order-p subgroups. Armed under the same
                      all-selected-are-dfz condition.
  conjugacy           keep one tuple per simultaneous-conjugation orbit
                      (the lexicographically least); entropy vectors are
                      conjugation-invariant, so this is verdict-preserving
                      for every inequality.
  ineq_symmetry       per inequality, evaluate only tuples least in their
                      orbit under the inequality's variable symmetries.

The last two positions of a tuple are evaluated as a vectorized grid;
subset orders are 64-bit safe because every side product is at most
|G|^8 < 2^63 for |G| <= 120.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .catalog import CatalogIndex
from .entropy_eval import EntropyVector, entropy_vector, evaluate
from .ineq_dsl import DFZ_IDS, InequalitySpec, builtin, resolve_ids, symmetry_group
from .perm_core import (Group, Subgroup, SubgroupLattice, all_subgroups, int_valuation,
                        is_abelian, is_normal, is_product_subgroup, prime_factors)

__all__ = [
    "PRUNE_RULES",
    "SearchConfig",
    "Witness",
    "PruneReport",
    "OrderClass",
    "SurveyEntry",
    "scan_group",
    "prune_applicable",
    "order_class",
    "check_simultaneous",
    "survey",
    "canonical_tuple_key",
]

PRUNE_RULES = ("theory_common_info", "order_class", "conjugacy", "ineq_symmetry")


@dataclass(frozen=True)
class SearchConfig:
    """What to scan: inequalities, prune rules, parallelism, output cap."""

    inequality_ids: Tuple[str, ...]
    prune_flags: FrozenSet[str] = frozenset(PRUNE_RULES)
    worker_count: int = 1
    tuple_arity: int = 5
    emit_limit: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.inequality_ids:
            raise ValueError("at least one inequality id is required")
        arity = max(builtin(i).n_vars for i in self.inequality_ids)
        if self.tuple_arity != arity:
            raise ValueError(
                f"tuple_arity {self.tuple_arity} does not match the selected "
                f"inequalities (max variable index {arity})")
        unknown = set(self.prune_flags) - set(PRUNE_RULES)
        if unknown:
            raise ValueError(f"unknown prune flags: {', '.join(sorted(unknown))}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        if self.emit_limit is not None and self.emit_limit < 0:
            raise ValueError(f"emit_limit must be >= 0, got {self.emit_limit}")

    @staticmethod
    def make(ineqs: Sequence[str] | str = "all", prune: Sequence[str] | str = "all",
             jobs: int = 1, emit_limit: Optional[int] = None) -> "SearchConfig":
        ids = resolve_ids(ineqs)
        if not ids:
            raise ValueError("no inequalities selected")
        if isinstance(prune, str):
            if prune == "all":
                flags = frozenset(PRUNE_RULES)
            elif prune == "none":
                flags = frozenset()
            else:
                flags = frozenset(s.strip() for s in prune.split(",") if s.strip())
        else:
            flags = frozenset(prune)
        arity = max(builtin(i).n_vars for i in ids)
        return SearchConfig(inequality_ids=ids, prune_flags=flags,
                            worker_count=jobs, tuple_arity=arity,
                            emit_limit=emit_limit)


@dataclass(frozen=True)
class Witness:
    """A reproducible violation record; masks are the subgroup bitsets."""

    group_name: str
    subgroup_generators: Tuple[Tuple[str, ...], ...]
    inequality_id: str
    lhs_product: int
    rhs_product: int
    subset_orders: EntropyVector
    masks: Tuple[int, ...]

    def sort_key(self) -> Tuple[str, Tuple[int, ...]]:
        return (self.inequality_id, self.masks)


@dataclass
class PruneReport:
    """Where every tuple of the scan space went.

    tuples_total = sum of tuples_pruned_by_rule values + tuples_evaluated.
    A tuple counts as evaluated if at least one selected inequality was
    evaluated on it; violations_found and equality_cases count
    (tuple, inequality) pairs, before any emit_limit truncation.
    """

    tuples_total: int
    tuples_pruned_by_rule: Dict[str, int]
    tuples_evaluated: int
    violations_found: int
    equality_cases: int
    wall_time: float

    def check_invariant(self) -> None:
        split = sum(self.tuples_pruned_by_rule.values()) + self.tuples_evaluated
        if split != self.tuples_total:
            raise AssertionError(
                f"prune accounting broken: {self.tuples_total} total vs "
                f"{split} pruned+evaluated")


@dataclass(frozen=True)
class OrderClass:
    """Which of the order-based theorems applies to a group."""

    kind: str  # abelian | pq_safe | p2q_normal_sylow_q | pq2_normal_sylow_q | unconstrained
    p: Optional[int] = None
    q: Optional[int] = None

    @property
    def skips_group(self) -> bool:
        return self.kind in ("abelian", "pq_safe")

    @property
    def pair_order(self) -> Optional[int]:
        """Positions 1 and 2 may be restricted to subgroups of this order."""
        if self.kind in ("p2q_normal_sylow_q", "pq2_normal_sylow_q"):
            return self.p
        return None


@dataclass(frozen=True)
class SurveyEntry:
    group_name: str
    order: int
    witness_count: int
    violated_ids: Tuple[str, ...]
    report: Optional[PruneReport]
    error: Optional[str] = None


def order_class(g: Group, lattice: Optional[SubgroupLattice] = None) -> OrderClass:
    """Classify |G| against the order-based theorems.

    Order pq (distinct primes) wins over the abelian label because it
    needs no further inspection; abelian comes next; then the two
    squared-prime shapes, which also need the right Sylow subgroup to be
    normal (equivalently unique).
    """
    factors = prime_factors(g.order)
    exps = sorted(factors.values())
    if len(factors) == 2 and exps == [1, 1]:
        p, q = sorted(factors)
        return OrderClass("pq_safe", p=p, q=q)
    if is_abelian(g):
        return OrderClass("abelian")
    if len(factors) == 2 and exps == [1, 2]:
        squared = next(p for p, e in factors.items() if e == 2)
        plain = next(p for p, e in factors.items() if e == 1)
        if _sylow_count(g, plain, lattice) == 1:
            return OrderClass("p2q_normal_sylow_q", p=squared, q=plain)
        if _sylow_count(g, squared, lattice) == 1:
            return OrderClass("pq2_normal_sylow_q", p=plain, q=squared)
    return OrderClass("unconstrained")


def _sylow_count(g: Group, p: int, lattice: Optional[SubgroupLattice]) -> int:
    if lattice is None:
        lattice = all_subgroups(g)
    return len(lattice.sylow_index[p])


def prune_applicable(g: Group, pos1: Subgroup, pos2: Subgroup) -> Optional[str]:
    """First reason, if any, that the product pos1*pos2 must be a subgroup.

    Any hit means the ten five-variable inequalities hold on every tuple
    with this (G1, G2) pair, whatever occupies the other positions.
    """
    if pos1.parent is not g or pos2.parent is not g:
        raise ValueError("subgroups do not belong to the given group")
    if is_abelian(g):
        return "abelian"
    inter = pos1.mask & pos2.mask
    if inter == pos1.mask or inter == pos2.mask:
        return "nested"
    full = g.full_subgroup()
    if is_normal(pos1, full) or is_normal(pos2, full):
        return "normal"
    if is_product_subgroup(pos1, pos2):
        return "product_subgroup"
    return None


# ---------------------------------------------------------------------------
# Scan internals

@dataclass(frozen=True)
class _SpecPlan:
    """One inequality compiled for grid evaluation at a fixed arity."""

    spec_id: str
    pos_terms: Tuple[Tuple[int, int], ...]   # (position bitmask, exponent)
    neg_terms: Tuple[Tuple[int, int], ...]
    balance: int
    # each symmetry as source indices: coordinate j of the permuted tuple
    # is coordinate src[j] of the original (identity omitted)
    sym_sources: Tuple[Tuple[int, ...], ...]


def _compile_spec(spec: InequalitySpec, arity: int) -> _SpecPlan:
    pos, neg = [], []
    balance = 0
    for subset, c in sorted(spec.coeffs.items(), key=lambda kv: sorted(kv[0])):
        pm = 0
        for i in subset:
            pm |= 1 << (i - 1)
        balance += c
        (pos if c > 0 else neg).append((pm, abs(c)))
    sources = []
    for perm in symmetry_group(spec).perms:
        ext = tuple(perm) + tuple(range(len(perm) + 1, arity + 1))
        src = tuple(ext.index(j + 1) for j in range(arity))
        if src != tuple(range(arity)):
            sources.append(src)
    return _SpecPlan(spec_id=spec.id, pos_terms=tuple(pos), neg_terms=tuple(neg),
                     balance=balance, sym_sources=tuple(sources))


class _ScanState:
    """Everything a worker needs; built in the parent, inherited via fork."""

    def __init__(self, g: Group, lattice: SubgroupLattice, cfg: SearchConfig,
                 domains: List[np.ndarray], pair_prunable: Optional[np.ndarray],
                 restricted_order: Optional[int], simultaneous: bool) -> None:
        self.group = g
        self.lattice = lattice
        self.cfg = cfg
        self.specs = [builtin(i) for i in cfg.inequality_ids]
        self.plans = [_compile_spec(s, cfg.tuple_arity) for s in self.specs]
        self.domains = domains
        self.sizes = [len(d) for d in domains]
        n = cfg.tuple_arity
        self.tails = [int(np.prod(self.sizes[d + 1:], dtype=np.int64))
                      for d in range(n)]
        self.pair_prunable = pair_prunable
        self.restricted_order = restricted_order
        self.simultaneous = simultaneous
        self.conj_on = "conjugacy" in cfg.prune_flags
        self.sym_on = "ineq_symmetry" in cfg.prune_flags
        m = len(lattice.subgroups)
        w = (g.order + 63) // 64
        packed = np.zeros((m, w), dtype=np.uint64)
        for i, sub in enumerate(lattice.subgroups):
            mask = sub.mask
            for word in range(w):
                packed[i, word] = (mask >> (64 * word)) & 0xFFFFFFFFFFFFFFFF
        self.packed = packed
        self.orders = np.array([s.order for s in lattice.subgroups], dtype=np.int64)
        self.conj_table = lattice.conjugation_table() if self.conj_on else None


_FORK_STATE: Optional[_ScanState] = None


def _popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).sum(axis=-1, dtype=np.int64)


def _scan_chunk(chunk: np.ndarray) -> Tuple[List[tuple], Dict[str, int], int, int, int]:
    """Scan all tuples whose first position lies in `chunk`.

    Returns raw violation cells (spec_id or None, index tuple), the prune
    counters, evaluated count, violation count and equality count.
    """
    st = _FORK_STATE
    assert st is not None
    n = st.cfg.tuple_arity
    counters = {rule: 0 for rule in PRUNE_RULES}
    cells: List[tuple] = []
    stats = {"evaluated": 0, "violations": 0, "equalities": 0}

    all_elements = np.arange(st.group.order, dtype=np.int64)

    def descend(depth: int, chosen: List[int], cand: np.ndarray,
                pmasks: Dict[int, np.ndarray]) -> None:
        domain = chunk if depth == 0 else st.domains[depth]
        for s in domain:
            s = int(s)
            if depth == 1 and st.pair_prunable is not None and \
                    st.pair_prunable[chosen[0], s]:
                counters["theory_common_info"] += st.tails[1]
                continue
            if st.conj_on:
                vals = st.conj_table[cand, s]
                if np.any(vals < s):
                    counters["conjugacy"] += st.tails[depth]
                    continue
                tied = cand[vals == s]
            else:
                tied = cand
            new_masks = dict(pmasks)
            row = st.packed[s]
            new_masks[1 << depth] = row
            for pm, mrow in pmasks.items():
                new_masks[pm | (1 << depth)] = mrow & row
            if depth == n - 3:
                _grid_stage(st, chosen + [s], tied, new_masks, counters, cells, stats)
            else:
                descend(depth + 1, chosen + [s], tied, new_masks)

    empty: Dict[int, np.ndarray] = {}
    descend(0, [], all_elements, empty)
    return cells, counters, stats["evaluated"], stats["violations"], stats["equalities"]


def _grid_stage(st: _ScanState, chosen: List[int], cand: np.ndarray,
                pmasks: Dict[int, np.ndarray], counters: Dict[str, int],
                cells: List[tuple], stats: Dict[str, int]) -> None:
    """Vectorized evaluation over the last two tuple positions."""
    n = st.cfg.tuple_arity
    bit_a, bit_b = 1 << (n - 2), 1 << (n - 1)
    dom_a, dom_b = st.domains[n - 2], st.domains[n - 1]
    da, db = len(dom_a), len(dom_b)
    if da == 0 or db == 0:
        return

    alive = np.ones((da, db), dtype=bool)
    if st.conj_on:
        vals_a = st.conj_table[cand][:, dom_a] if len(cand) else None
        if vals_a is not None and len(cand):
            bad_a = np.any(vals_a < dom_a[None, :], axis=0)
            counters["conjugacy"] += int(bad_a.sum()) * db
            alive[bad_a, :] = False
            for ia in np.nonzero(~bad_a)[0]:
                tied = cand[vals_a[:, ia] == dom_a[ia]]
                if len(tied) == 0:
                    continue
                bad_b = np.any(st.conj_table[tied][:, dom_b] < dom_b[None, :], axis=0)
                counters["conjugacy"] += int(bad_b.sum())
                alive[ia, bad_b] = False
    if not alive.any():
        return

    # subset orders: scalars for prefix subsets, vectors for one varying
    # position, grids when both vary
    rows_a = st.packed[dom_a]                      # (da, w)
    rows_b = st.packed[dom_b]                      # (db, w)
    grid_ab = rows_a[:, None, :] & rows_b[None, :, :]
    lookup: Dict[int, object] = {}
    for pm, mrow in pmasks.items():
        lookup[pm] = int(_popcount(mrow))
    lookup[bit_a] = _popcount(rows_a)
    lookup[bit_b] = _popcount(rows_b)
    lookup[bit_a | bit_b] = _popcount(grid_ab)
    for pm, mrow in pmasks.items():
        lookup[pm | bit_a] = _popcount(rows_a & mrow)
        lookup[pm | bit_b] = _popcount(rows_b & mrow)
        lookup[pm | bit_a | bit_b] = _popcount(grid_ab & mrow)

    def as_grid(pm: int):
        v = lookup[pm]
        if isinstance(v, int):
            return v
        if v.ndim == 2:
            return v
        return v[:, None] if pm & bit_a else v[None, :]

    coord_arrays = []
    for j in range(n):
        if j < n - 2:
            coord_arrays.append(chosen[j])
        elif j == n - 2:
            coord_arrays.append(dom_a[:, None])
        else:
            coord_arrays.append(dom_b[None, :])

    parent_order = st.group.order
    viol_by_spec = []
    canon_by_spec = []
    eval_any = np.zeros((da, db), dtype=bool)
    for plan in st.plans:
        lhs = np.ones((da, db), dtype=np.int64)
        rhs = np.ones((da, db), dtype=np.int64)
        for pm, e in plan.pos_terms:
            lhs = lhs * (as_grid(pm) ** e)
        for pm, e in plan.neg_terms:
            rhs = rhs * (as_grid(pm) ** e)
        if plan.balance > 0:
            rhs = rhs * (parent_order ** plan.balance)
        elif plan.balance < 0:
            lhs = lhs * (parent_order ** (-plan.balance))

        canon = alive.copy()
        if st.sym_on and plan.sym_sources:
            for src in plan.sym_sources:
                lt = np.zeros((da, db), dtype=bool)
                eq = np.ones((da, db), dtype=bool)
                in_region = True
                if st.restricted_order is not None:
                    for tgt in (0, 1):
                        j = src[tgt]
                        if j in (0, 1):
                            continue
                        in_region = in_region & (
                            st.orders[coord_arrays[j]] == st.restricted_order)
                for j in range(n):
                    a = coord_arrays[src[j]]
                    b = coord_arrays[j]
                    lt = lt | (eq & (a < b))
                    eq = eq & (a == b)
                canon &= ~(lt & in_region)
        canon_by_spec.append(canon)
        eval_any |= canon
        viol = (lhs > rhs) & canon
        viol_by_spec.append(viol)
        stats["equalities"] += int(((lhs == rhs) & canon).sum())

    evaluated_here = int(eval_any.sum())
    stats["evaluated"] += evaluated_here
    counters["ineq_symmetry"] += int(alive.sum()) - evaluated_here

    if st.simultaneous:
        both = viol_by_spec[0]
        for v in viol_by_spec[1:]:
            both = both & v
        for ia, ib in zip(*np.nonzero(both)):
            idx = tuple(chosen) + (int(dom_a[ia]), int(dom_b[ib]))
            cells.append((None, idx))
            stats["violations"] += 1
    else:
        for plan, viol in zip(st.plans, viol_by_spec):
            for ia, ib in zip(*np.nonzero(viol)):
                idx = tuple(chosen) + (int(dom_a[ia]), int(dom_b[ib]))
                cells.append((plan.spec_id, idx))
                stats["violations"] += 1


def _run_chunks(state: _ScanState, chunks: List[np.ndarray]):
    global _FORK_STATE
    _FORK_STATE = state
    try:
        if state.cfg.worker_count == 1 or len(chunks) <= 1:
            return [_scan_chunk(c) for c in chunks]
        with ProcessPoolExecutor(max_workers=len(chunks),
                                 mp_context=get_context("fork")) as pool:
            return list(pool.map(_scan_chunk, chunks))
    finally:
        _FORK_STATE = None


def _prepare(g: Group, cfg: SearchConfig, lattice: Optional[SubgroupLattice],
             simultaneous: bool):
    """Shared setup for scan_group and check_simultaneous."""
    if lattice is None:
        lattice = all_subgroups(g)
    m = len(lattice.subgroups)
    n = cfg.tuple_arity
    total = m ** n
    counters = {rule: 0 for rule in PRUNE_RULES}
    theory_armed = set(cfg.inequality_ids) <= set(DFZ_IDS)
    cls = order_class(g, lattice)

    if "order_class" in cfg.prune_flags and theory_armed and cls.skips_group:
        counters["order_class"] = total
        return lattice, cls, counters, total, None

    full = np.arange(m, dtype=np.int64)
    domains = [full] * n
    if "order_class" in cfg.prune_flags and theory_armed and cls.pair_order:
        sel = np.nonzero(np.array([s.order for s in lattice.subgroups])
                         == cls.pair_order)[0].astype(np.int64)
        domains = [sel, sel] + [full] * (n - 2)
        counters["order_class"] = total - len(sel) ** 2 * m ** (n - 2)

    pair = None
    if "theory_common_info" in cfg.prune_flags and theory_armed:
        pair = _pair_prunable_matrix(g, lattice)

    restricted = cls.pair_order if ("order_class" in cfg.prune_flags
                                    and theory_armed) else None
    state = _ScanState(g, lattice, cfg, domains, pair, restricted, simultaneous)
    return lattice, cls, counters, total, state


def _pair_prunable_matrix(g: Group, lattice: SubgroupLattice) -> np.ndarray:
    """pairwise prune_applicable, using the lattice's cached normal flags."""
    subs = lattice.subgroups
    m = len(subs)
    out = np.zeros((m, m), dtype=bool)
    if is_abelian(g):
        out[:] = True
        return out
    normal = np.array(lattice.normal_flags, dtype=bool)
    for i in range(m):
        for j in range(i, m):
            inter = subs[i].mask & subs[j].mask
            hit = (normal[i] or normal[j]
                   or inter == subs[i].mask or inter == subs[j].mask
                   or is_product_subgroup(subs[i], subs[j]))
            out[i, j] = out[j, i] = hit
    return out


def _chunk_domain(domain: np.ndarray, workers: int) -> List[np.ndarray]:
    k = max(1, min(workers, len(domain)))
    return [domain[i::k] for i in range(k)]


def _build_witness(g: Group, lattice: SubgroupLattice, spec: InequalitySpec,
                   idx: Tuple[int, ...]) -> Witness:
    subs = [lattice.subgroups[i] for i in idx]
    ev = entropy_vector(g, subs)
    verdict = evaluate(spec, ev)
    if verdict.holds:
        raise AssertionError(
            f"witness re-evaluation does not violate {spec.id} on {idx}")
    return Witness(group_name=g.name,
                   subgroup_generators=tuple(tuple(s.generator_strings())
                                             for s in subs),
                   inequality_id=spec.id,
                   lhs_product=verdict.lhs_product,
                   rhs_product=verdict.rhs_product,
                   subset_orders=ev,
                   masks=tuple(s.mask for s in subs))


def scan_group(g: Group, cfg: SearchConfig,
               lattice: Optional[SubgroupLattice] = None
               ) -> Tuple[List[Witness], PruneReport]:
    """All violations of the selected inequalities over g's subgroup tuples.

    Complete up to the enabled prunings, each of which is verdict
    preserving; the witness list is sorted by (inequality id, subgroup
    bitsets) so output does not depend on worker_count.
    """
    t0 = time.perf_counter()
    lattice, cls, counters, total, state = _prepare(g, cfg, lattice, False)

    witnesses: List[Witness] = []
    evaluated = violations = equalities = 0
    if state is not None:
        chunks = _chunk_domain(state.domains[0], cfg.worker_count)
        spec_by_id = {s.id: s for s in state.specs}
        for cells, part_counters, ev_n, viol_n, eq_n in _run_chunks(state, chunks):
            for rule, c in part_counters.items():
                counters[rule] += c
            evaluated += ev_n
            violations += viol_n
            equalities += eq_n
            for spec_id, idx in cells:
                witnesses.append(_build_witness(g, lattice, spec_by_id[spec_id], idx))

    witnesses.sort(key=Witness.sort_key)
    if cfg.emit_limit is not None:
        witnesses = witnesses[:cfg.emit_limit]

    if cls.pair_order is not None:
        for w in witnesses:
            if w.inequality_id in DFZ_IDS:
                o1 = w.subset_orders.order([1])
                o2 = w.subset_orders.order([2])
                if not (o1 == o2 == cls.p):
                    raise AssertionError(
                        f"{cls.kind} witness in {g.name} breaks the "
                        f"|G1|=|G2|={cls.p} shape: got {o1}, {o2}")

    report = PruneReport(tuples_total=total,
                         tuples_pruned_by_rule=counters,
                         tuples_evaluated=evaluated,
                         violations_found=violations,
                         equality_cases=equalities,
                         wall_time=time.perf_counter() - t0)
    report.check_invariant()
    return witnesses, report


def check_simultaneous(g: Group, pair: Tuple[InequalitySpec, InequalitySpec],
                       lattice: Optional[SubgroupLattice] = None
                       ) -> List[Tuple[Subgroup, ...]]:
    """Tuples violating both inequalities at once, up to conjugacy.

    Runs with the verdict-preserving prunes only: per-inequality symmetry
    reduction is disabled because it is relative to a single inequality,
    and a tuple is reported only if it violates both.
    """
    ids = tuple(s.id for s in pair)
    if any(not i for i in ids):
        raise ValueError("check_simultaneous needs builtin (named) inequalities")
    arity = max(s.n_vars for s in pair)
    flags = {"conjugacy"}
    if set(ids) <= set(DFZ_IDS):
        flags |= {"theory_common_info", "order_class"}
    cfg = SearchConfig(inequality_ids=ids, prune_flags=frozenset(flags),
                       worker_count=1, tuple_arity=arity)
    lattice, _, _, _, state = _prepare(g, cfg, lattice, True)
    if state is None:
        return []
    out: List[Tuple[Subgroup, ...]] = []
    for cells, _, _, _, _ in _run_chunks(state, [state.domains[0]]):
        for _, idx in cells:
            out.append(tuple(lattice.subgroups[i] for i in idx))
    out.sort(key=lambda subs: tuple(s.mask for s in subs))
    return out


def survey(cat: CatalogIndex, orders: Iterable[int], cfg: SearchConfig,
           lattice_for=None) -> Dict[str, SurveyEntry]:
    """scan_group over every catalog entry in the order range.

    A failure inside one group is recorded on its entry and the survey
    moves on. `lattice_for(g)`, when given, supplies subgroup lattices
    (letting callers plug in a cache); by default each scan builds its own.
    """
    results: Dict[str, SurveyEntry] = {}
    for order in sorted(set(orders)):
        for name in cat.by_order.get(order, ()):
            try:
                g = cat.realize(name)
                lat = lattice_for(g) if lattice_for is not None else None
                witnesses, report = scan_group(g, cfg, lat)
                violated = tuple(sorted({w.inequality_id for w in witnesses}))
                results[name] = SurveyEntry(group_name=name, order=order,
                                            witness_count=len(witnesses),
                                            violated_ids=violated, report=report)
            except Exception as e:  # noqa: BLE001 - survey must keep going
                results[name] = SurveyEntry(group_name=name, order=order,
                                            witness_count=0, violated_ids=(),
                                            report=None, error=str(e))
    return results


def canonical_tuple_key(lattice: SubgroupLattice,
                        subs: Sequence[Subgroup]) -> Tuple[int, ...]:
    """Least index tuple over the simultaneous-conjugation orbit.

    Two tuples are conjugate exactly when their keys coincide; used to
    compare found witnesses against reference tuples.
    """
    ct = lattice.conjugation_table()
    idx = np.array([lattice.index_of(s.mask) for s in subs], dtype=np.int64)
    best: Optional[Tuple[int, ...]] = None
    for x in range(lattice.group.order):
        candidate = tuple(int(v) for v in ct[x, idx])
        if best is None or candidate < best:
            best = candidate
    return best
