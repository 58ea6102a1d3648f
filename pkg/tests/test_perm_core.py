import random

import pytest

from groupineq.perm_core import (
    AMBIENT_ORDER_CAP,
    Group,
    Permutation,
    all_subgroups,
    closure,
    conjugate_tuple,
    int_valuation,
    intersect,
    is_abelian,
    is_isomorphic,
    is_normal,
    is_product_subgroup,
    prime_factors,
    set_product_order,
    sylow_subgroups,
)

import oracles


def sym(n, name=None):
    gens = [Permutation.from_cycles("(1,2)", n)]
    if n > 2:
        gens.append(Permutation.from_cycles("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n))
    return Group.from_generators(name or f"S{n}", gens, degree=n)


def test_permutation_from_cycles_and_back():
    p = Permutation.from_cycles("(1,2,3)(4,5)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert p.cycle_string() == "(1,2,3)(4,5)"
    assert Permutation.from_cycles(p.cycle_string(), 5) == p
    # spaces work as separators too
    assert Permutation.from_cycles("(1 2 3)(4 5)", 5) == p
    assert Permutation.from_cycles("()", 3).is_identity()
    assert Permutation.identity(4).cycle_string() == "()"


def test_permutation_from_cycles_errors():
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,2)(2,3)", 3)  # overlap
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,2", 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(0,1)", 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,9)", 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,1)", 3)


def test_permutation_mul_matches_oracle():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(2, 8)
        a = list(range(n))
        b = list(range(n))
        rng.shuffle(a)
        rng.shuffle(b)
        pa, pb = Permutation(tuple(a)), Permutation(tuple(b))
        assert (pa * pb).images == oracles.p_mul(tuple(a), tuple(b))
        assert pa.inverse().images == oracles.p_inv(tuple(a))
        assert (pa * pa.inverse()).is_identity()


def test_permutation_order():
    assert Permutation.from_cycles("(1,2,3)(4,5)", 5).order() == 6
    assert Permutation.identity(3).order() == 1
    assert Permutation.from_cycles("(1,2,3,4)", 4).order() == 4


def p_order(p):
    n = len(p)
    k, q = 1, p
    while q != tuple(range(n)):
        q = oracles.p_mul(p, q)
        k += 1
    return k


def test_group_from_generators_s4():
    g = sym(4)
    assert g.order == 24
    assert g.elements[0].is_identity()
    want = sorted(p_order(e) for e in oracles.s_n_elements(4))
    assert sorted(g.element_orders()) == want


def test_mul_table_consistency():
    g = sym(4)
    rng = random.Random(5)
    elems = [tuple(p.images) for p in g.elements]
    for _ in range(500):
        i, j = rng.randrange(24), rng.randrange(24)
        k = g.mul(i, j)
        assert elems[k] == oracles.p_mul(elems[i], elems[j])
        assert g.mul(g.inv(i), i) == 0


def test_element_index():
    g = sym(3)
    for i, p in enumerate(g.elements):
        assert g.element_index(p) == i
    with pytest.raises(ValueError, match="not an element"):
        g.element_index(Permutation.from_cycles("(1,2)", 4))


def test_from_generators_order_cap():
    with pytest.raises(ValueError):
        gens = [Permutation.from_cycles("(1,2)", 9),
                Permutation.from_cycles("(1,2,3,4,5,6,7,8,9)", 9)]
        Group.from_generators("S9", gens, degree=9)
    assert AMBIENT_ORDER_CAP < 362880


def test_closure_matches_oracle():
    g = sym(4)
    rng = random.Random(7)
    elems = [tuple(p.images) for p in g.elements]
    for _ in range(60):
        k = rng.randrange(1, 4)
        seed = rng.sample(range(24), k)
        sub = closure(g, seed)
        want = oracles.subgroup_closure([elems[i] for i in seed], 4)
        got = {elems[i] for i in sub.member_indices()}
        assert got == set(want)
        assert sub.order == len(want)


def test_intersect_and_product():
    g = sym(4)
    lat = all_subgroups(g)
    rng = random.Random(13)
    elems = [tuple(p.images) for p in g.elements]
    for _ in range(80):
        h = rng.choice(lat.subgroups)
        k = rng.choice(lat.subgroups)
        hs = {elems[i] for i in h.member_indices()}
        ks = {elems[i] for i in k.member_indices()}
        m = intersect(h, k)
        assert {elems[i] for i in m.member_indices()} == hs & ks
        ps = oracles.product_set(hs, ks)
        assert set_product_order(h, k) == len(ps)
        # dual route: closure under multiplication vs the order formula
        assert is_product_subgroup(h, k) == oracles.is_closed_under_mul(ps)
        assert (set_product_order(h, k) == h.order * k.order // m.order)


def test_is_normal_by_conjugation():
    g = sym(4)
    lat = all_subgroups(g)
    elems = [tuple(p.images) for p in g.elements]
    full = g.full_subgroup()
    for idx, h in enumerate(lat.subgroups):
        hs = {elems[i] for i in h.member_indices()}
        brute = all(
            oracles.p_mul(oracles.p_mul(x, m), oracles.p_inv(x)) in hs
            for x in elems for m in hs
        )
        assert is_normal(h, full) == brute == lat.normal_flags[idx]


def test_is_normal_relative():
    g = sym(4)
    # V4 normal in S4 hence in any overgroup; C2 = <(1,2)> not normal in S3 copy
    v4 = closure(g, [g.element_index(Permutation.from_cycles(c, 4))
                     for c in ("(1,2)(3,4)", "(1,3)(2,4)")])
    d8 = closure(g, [g.element_index(Permutation.from_cycles(c, 4))
                     for c in ("(1,2)(3,4)", "(1,3)")])
    assert is_normal(v4, d8)
    c2 = closure(g, [g.element_index(Permutation.from_cycles("(1,2)", 4))])
    s3 = closure(g, [g.element_index(Permutation.from_cycles("(1,2)", 4)),
                     g.element_index(Permutation.from_cycles("(1,2,3)", 4))])
    assert not is_normal(c2, s3)
    with pytest.raises(ValueError):
        is_normal(d8, v4)  # not contained


def test_all_subgroups_against_brute_force_sample(cat):
    # the full order sweep lives in the acceptance suite; spot-check here
    for name in ("S3", "D8", "Q8", "A4", "C12"):
        g = cat.realize(name)
        lat = all_subgroups(g)
        elems = [tuple(p.images) for p in g.elements]
        brute = oracles.brute_force_subgroups(elems, g.degree)
        got = {frozenset(elems[i] for i in s.member_indices()) for s in lat.subgroups}
        assert got == brute


def test_lattice_invariants(cat):
    g = cat.realize("S4")
    lat = all_subgroups(g)
    orders = [s.order for s in lat.subgroups]
    assert orders == sorted(orders)
    assert len({(s.order, s.mask) for s in lat.subgroups}) == len(lat.subgroups)
    assert lat.subgroups[0].order == 1 and lat.subgroups[-1].order == 24
    # conjugacy classes partition the index set
    seen = [i for cls in lat.conjugacy_classes for i in cls]
    assert sorted(seen) == list(range(len(lat.subgroups)))
    for cls in lat.conjugacy_classes:
        assert len({lat.subgroups[i].order for i in cls}) == 1
        for i in cls:
            assert lat.normal_flags[i] == (len(cls) == 1)
    for i, s in enumerate(lat.subgroups):
        assert lat.index_of(s.mask) == i


def test_lattice_sylow_index(cat):
    g = cat.realize("S4")
    lat = all_subgroups(g)
    assert set(lat.sylow_index) == {2, 3}
    assert len(lat.sylow_index[2]) == 3
    assert len(lat.sylow_index[3]) == 4
    for p, idxs in lat.sylow_index.items():
        assert len(idxs) % p == 1
        for i in idxs:
            assert lat.subgroups[i].order == p ** prime_factors(24)[p]


def test_sylow_subgroups_function(cat):
    g = cat.realize("A4")
    twos = sylow_subgroups(g, 2)
    threes = sylow_subgroups(g, 3)
    assert len(twos) == 1 and twos[0].order == 4
    assert len(threes) == 4 and all(s.order == 3 for s in threes)
    fives = sylow_subgroups(g, 5)
    assert len(fives) == 1 and fives[0].order == 1
    with pytest.raises(ValueError):
        sylow_subgroups(g, 4)


def test_conjugation_table(cat):
    g = cat.realize("S4")
    lat = all_subgroups(g)
    ct = lat.conjugation_table()
    assert ct.shape == (24, len(lat.subgroups))
    rng = random.Random(3)
    for _ in range(200):
        x = rng.randrange(24)
        i = rng.randrange(len(lat.subgroups))
        (conj,) = conjugate_tuple(g, [lat.subgroups[i]], x)
        assert int(ct[x, i]) == lat.index_of(conj.mask)


def test_conjugate_tuple_is_action(cat):
    g = cat.realize("S4")
    lat = all_subgroups(g)
    rng = random.Random(17)
    subs = tuple(rng.choice(lat.subgroups) for _ in range(3))
    for _ in range(50):
        x, y = rng.randrange(24), rng.randrange(24)
        one = conjugate_tuple(g, conjugate_tuple(g, subs, y), x)
        both = conjugate_tuple(g, subs, g.mul(x, y))
        assert [s.mask for s in one] == [s.mask for s in both]
    assert [s.mask for s in conjugate_tuple(g, subs, 0)] == [s.mask for s in subs]


def test_is_abelian(cat):
    assert is_abelian(cat.realize("C12"))
    assert is_abelian(cat.realize("C2xC2"))
    assert not is_abelian(cat.realize("S3"))
    assert not is_abelian(cat.realize("Q8"))


def test_is_isomorphic(cat):
    assert is_isomorphic(cat.realize("C6"), cat.realize("C6"))
    assert not is_isomorphic(cat.realize("C4"), cat.realize("C2xC2"))
    assert not is_isomorphic(cat.realize("D8"), cat.realize("Q8"))
    assert not is_isomorphic(cat.realize("C6"), cat.realize("S3"))
    # same group on different points
    a = sym(3)
    b = Group.from_generators("S3'", [Permutation.from_cycles("(2,3)", 4),
                                      Permutation.from_cycles("(2,3,4)", 4)], degree=4)
    assert is_isomorphic(a, b)
    assert not is_isomorphic(a, cat.realize("C6"))


def test_subgroup_generators_roundtrip(cat):
    g = cat.realize("S4")
    lat = all_subgroups(g)
    for s in lat.subgroups:
        regen = closure(g, s.generator_indices())
        assert regen.mask == s.mask
        strs = s.generator_strings()
        idxs = [g.element_index(Permutation.from_cycles(t, g.degree)) for t in strs]
        assert closure(g, idxs).mask == s.mask


def test_subgroup_misc(cat):
    g = cat.realize("S4")
    t = g.trivial_subgroup()
    f = g.full_subgroup()
    assert t.order == 1 and f.order == 24
    assert t.contains(0) and not t.contains(5)
    assert f.same_parent(t)
    h = closure(g, [1])
    assert list(h.permutations())[0].is_identity()


def test_prime_factors_and_valuation():
    assert prime_factors(24) == {2: 3, 3: 1}
    assert prime_factors(1) == {}
    assert prime_factors(97) == {97: 1}
    assert int_valuation(48, 2) == 4
    assert int_valuation(5, 2) == 0
    with pytest.raises(ValueError):
        int_valuation(0, 2)
