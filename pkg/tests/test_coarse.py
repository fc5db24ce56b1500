from fractions import Fraction

import pytest

from coarsekit import (
    ConstructionParams,
    Graph,
    HypothesisViolation,
    InputError,
    ScaleError,
    WeightFunction,
    alpha,
    alpha_dense_set,
    build_coarse_decomposition,
    builtin_corpus,
    certificate_is_valid,
    check_subdivided_clique_obstruction,
    complete,
    complete_bipartite,
    cycle,
    extend_to_alpha,
    find_centred_balanced_separator,
    path,
    random_graph,
    random_tree,
    scan_corpus,
    two_subdivision,
    validate,
    verify_quasi_isometry,
)

DESK = ConstructionParams(k=1, z_fraction_denominator=2, base_alpha_threshold=4, x_alpha_cap=2)


# -- parameters -------------------------------------------------------------------


def test_params_formula_value():
    p = ConstructionParams(k=1, t=1)
    assert p.formula_d == (512 * 20) ** 16
    assert p.z_fraction_denominator == 20
    assert p.base_alpha_threshold == 20 * p.formula_d
    assert p.x_alpha_cap == 10 * p.formula_d
    assert p.uses_formula_thresholds


def test_params_overrides_are_recorded():
    assert DESK.overridden == (
        "z_fraction_denominator",
        "base_alpha_threshold",
        "x_alpha_cap",
    )
    assert not DESK.uses_formula_thresholds


def test_params_validation():
    with pytest.raises(InputError):
        ConstructionParams(k=0)
    with pytest.raises(InputError):
        ConstructionParams(k=1, z_fraction_denominator=0)
    with pytest.raises(InputError):
        ConstructionParams(k=1, base_alpha_threshold=2, x_alpha_cap=3)
    with pytest.raises(InputError):
        ConstructionParams(k=4, t=4)  # formula exponent too large to materialize


# -- alpha-dense set ---------------------------------------------------------------


def test_dense_set_clique_saturates():
    g = complete(6)
    p = ConstructionParams(k=1, z_fraction_denominator=20, base_alpha_threshold=4, x_alpha_cap=2)
    assert alpha_dense_set(g, set(range(6)), p) == set(range(6))


def test_dense_set_isolated_vertices_fall_below_threshold():
    g = Graph(25)  # edgeless, alpha = 25 > denominator
    p = ConstructionParams(k=1, z_fraction_denominator=20, base_alpha_threshold=30, x_alpha_cap=15)
    # graph-side threshold rejects every vertex (20*1 < 25); the x-side
    # admits exactly the closed neighborhood of x, here x itself
    assert alpha_dense_set(g, {0}, p) == {0}


def test_dense_set_star_centre_qualifies():
    g = complete_bipartite(1, 30)  # vertex 0 is the centre
    p = ConstructionParams(k=1, z_fraction_denominator=2, base_alpha_threshold=40, x_alpha_cap=20)
    z = alpha_dense_set(g, set(range(g.n)), p)
    assert 0 in z
    assert 1 not in z  # a leaf sees alpha(N[v]) = 1 < 30/2


# -- growing x to a target alpha -----------------------------------------------------


def test_extend_noop_when_target_met():
    g = cycle(6)
    assert extend_to_alpha(g, {0, 2, 4}, 2) == {0, 2, 4}


def test_extend_on_edgeless_graph():
    g = Graph(5)
    assert extend_to_alpha(g, set(), 3) == {0, 1, 2}


def test_extend_skips_non_raising_vertices():
    got = extend_to_alpha(cycle(6), set(), 2)
    assert got == {0, 2}


def test_extend_completion_when_greedy_stalls():
    # x = {0} with edges 0-1, 0-2: no single vertex raises alpha({0}),
    # yet alpha(G) = 2; the completion phase must still hit the target.
    g = Graph(3, [(0, 1), (0, 2)])
    got = extend_to_alpha(g, {0}, 2)
    assert alpha(g, got).value == 2
    assert 0 in got


def test_extend_impossible_target():
    with pytest.raises(InputError):
        extend_to_alpha(complete(4), set(), 2)


# -- the recursive builder ------------------------------------------------------------


def check_output(g, built, x=frozenset()):
    assert validate(g, built.decomposition) == []
    hub_bag = built.decomposition.bags[built.hub_node]
    assert g.ball(x, 1) <= hub_bag
    assert len(built.certificates) == built.decomposition.node_count
    for node, cert in enumerate(built.certificates):
        assert cert.radius == 2
        assert cert.within == built.decomposition.bags[node]
        assert cert.covered == built.decomposition.bags[node]
        assert certificate_is_valid(g, cert)
    assert built.realized_k == max(c.size for c in built.certificates)


def test_base_case_single_bag():
    g = cycle(5)  # alpha = 2 <= desk base threshold
    built = build_coarse_decomposition(g, set(), DESK)
    assert built.decomposition.bags == (frozenset(range(5)),)
    assert not built.guard_tripped
    check_output(g, built)


def test_formula_thresholds_always_hit_base_case():
    g = random_graph(12, 0.3, seed=9)
    built = build_coarse_decomposition(g, {0}, ConstructionParams(k=1))
    assert built.decomposition.node_count == 1
    check_output(g, built, frozenset({0}))


def test_path20_splits_and_validates():
    g = path(20)
    built = build_coarse_decomposition(g, set(), DESK)
    assert built.decomposition.node_count > 1
    check_output(g, built)


def test_trees_build_and_validate():
    for seed in range(8):
        g = random_tree(16, seed)
        built = build_coarse_decomposition(g, {0}, DESK)
        check_output(g, built, frozenset({0}))


def test_builder_is_deterministic():
    g = random_tree(18, 5)
    a = build_coarse_decomposition(g, set(), DESK)
    b = build_coarse_decomposition(g, set(), DESK)
    assert a == b


def test_builder_rejects_overweight_x():
    g = path(12)
    with pytest.raises(InputError):
        build_coarse_decomposition(g, set(range(0, 12, 2)), DESK)


def test_hypothesis_failure_on_subdivided_k4():
    g, _ = two_subdivision(complete(4))
    params = ConstructionParams(
        k=1, z_fraction_denominator=1, base_alpha_threshold=6, x_alpha_cap=2
    )
    with pytest.raises(HypothesisViolation) as info:
        build_coarse_decomposition(g, set(), params)
    witness = info.value.independent_set
    # the carried set is independent and admits no (1,1) ball separator
    assert alpha(g, witness).value == len(witness)
    mu = WeightFunction.indicator(g.n, witness)
    assert find_centred_balanced_separator(g, mu, 1, 1) is None


# -- obstruction check ------------------------------------------------------------------


def test_obstruction_k1():
    report = check_subdivided_clique_obstruction(1)
    assert report.ok
    assert report.vertex_count == 16
    assert report.centre_sets_checked == 16
    assert report.balanced_found == 0
    assert report.branch_pairs_at_distance_3 == 6


def test_obstruction_k2():
    report = check_subdivided_clique_obstruction(2)
    assert report.ok
    assert report.vertex_count == 36
    assert report.centre_sets_checked == 666
    assert report.balanced_found == 0


def test_obstruction_scale_guard():
    with pytest.raises(ScaleError):
        check_subdivided_clique_obstruction(3)
    with pytest.raises(InputError):
        check_subdivided_clique_obstruction(0)


def test_unsubdivided_clique_is_no_obstruction():
    # control: on K_4 itself some single ball balances the whole vertex set
    g = complete(4)
    mu = WeightFunction.indicator(4, range(4))
    assert find_centred_balanced_separator(g, mu, 1, 1) is not None


# -- quasi-isometry verifier ---------------------------------------------------------


def test_identity_map_is_accepted():
    for seed in range(6):
        g = random_graph(10, 0.3, seed=seed)
        assert verify_quasi_isometry(g, g, list(range(10)), 1) is None


def test_single_vertex_graphs():
    assert verify_quasi_isometry(complete(1), complete(1), [0], 1) is None


def test_constant_map_from_path_rejected():
    violation = verify_quasi_isometry(path(10), complete(1), [0] * 10, 2)
    assert violation is not None
    assert violation.kind == "lower"
    u, v = violation.u, violation.v
    # the reported pair really does break the lower bound at q = 2
    d = path(10).distance(u, v)
    assert Fraction(1, 2) * d - 2 > 0


def test_exact_rational_threshold():
    # distance 4 at q = 2 sits exactly on the lower bound: (1/2)*4 - 2 = 0
    g = path(5)
    h = complete(1)
    assert verify_quasi_isometry(g, h, [0] * 5, 2) is None
    assert verify_quasi_isometry(path(6), h, [0] * 6, 2) is not None
    assert verify_quasi_isometry(path(6), h, [0] * 6, Fraction(5, 2)) is None


def test_density_violation():
    g = complete(1)
    h = path(8)
    violation = verify_quasi_isometry(g, h, [0], 2)
    assert violation is not None and violation.kind == "density"
    assert violation.vertex == 3  # first target vertex farther than q from the image


def test_disconnected_source_requires_disconnected_image():
    g = Graph(2)  # two isolated vertices
    h = complete(2)
    violation = verify_quasi_isometry(g, h, [0, 1], 1)
    assert violation is not None and violation.kind == "lower"


def test_map_must_be_total():
    with pytest.raises(InputError):
        verify_quasi_isometry(path(3), path(3), {0: 0, 1: 1}, 1)
    with pytest.raises(InputError):
        verify_quasi_isometry(path(3), path(3), [0, 1, 9], 1)


def test_q_must_be_positive():
    with pytest.raises(InputError):
        verify_quasi_isometry(path(3), path(3), [0, 1, 2], 0)


# -- corpus scan --------------------------------------------------------------------------


def test_scan_empty_corpus():
    assert scan_corpus([], 1) == []


def test_scan_records_failures_as_rows():
    g, _ = two_subdivision(complete(4))
    rows = scan_corpus([("k4sub", g)], 1)
    assert len(rows) == 1
    assert rows[0]["admits"] == "false"
    assert rows[0]["realized_k_r2"] == ""


def test_scan_builtin_trees_and_cycles():
    corpus = [item for item in builtin_corpus("trees-cycles") if item[1].n <= 8]
    rows = scan_corpus(corpus, 1)
    assert len(rows) == len(corpus)
    for row in rows:
        assert row["admits"] in ("true", "false")
        if row["admits"] == "true":
            assert isinstance(row["realized_k_r2"], int)
            assert isinstance(row["max_bag_r1_centres"], int)


def test_builtin_corpus_unknown_name():
    with pytest.raises(InputError):
        builtin_corpus("nope")
