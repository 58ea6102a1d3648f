import property_suites as ps


def test_suite_registry():
    assert [name for name, _ in ps.SUITES] == [
        "product-chain",
        "gi-bounds",
        "sylow-valuation",
        "pq-values",
        "ppq-values",
        "pqq-values",
        "sylow-intersections",
        "trivial-intersections",
    ]


def test_product_chain_suite():
    assert ps.suite_product_chain() >= 1000


def test_gi_bounds_suite():
    assert ps.suite_gi_bounds() >= 1000


def test_sylow_valuation_suite():
    assert ps.suite_sylow_valuation() >= 1000


def test_pq_values_suite():
    assert ps.suite_pq_values() >= 1000


def test_ppq_values_suite():
    assert ps.suite_ppq_values() >= 1000


def test_pqq_values_suite():
    assert ps.suite_pqq_values() >= 1000


def test_sylow_intersections_suite():
    assert ps.suite_sylow_intersections() >= 1000


def test_trivial_intersections_suite():
    assert ps.suite_trivial_intersections() >= 1000
