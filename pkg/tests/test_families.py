import pytest

import oracles
from apery import (
    BadParameter,
    NotMinimal,
    UncoveredCase,
    apery_set,
    cone_decomposition,
    is_homogeneous,
    is_symmetric,
    is_tangent_cone_cm,
    make_almost_maximal,
    make_symmetric,
    make_unbounded,
    new_semigroup,
    nondecreasing_check,
    order,
    predict,
    verify_family,
)
from apery.families import (
    FamilySpec,
    almost_maximal_case,
    almost_maximal_sweep,
    classify,
    computed_order_counts,
    symmetric_sweep,
    unbounded_sweep,
)

# the A-sets printed for S(5,4)
S54_PARTS = {
    "A1": {36, 72, 108, 144, 180},
    "A2": {41, 82, 123, 164, 205},
    "A3": {42, 84, 126, 168},
    "A4": {78, 114, 120, 150, 156, 162, 186, 192, 198, 204},
    "A5": {83, 124, 125, 165, 166, 167, 206, 207, 208, 209},
}


# ------------------------------------------------------------------ builders


def test_symmetric_generators():
    assert make_symmetric(4, 2, 2).generators == (9, 11, 35, 37)
    assert make_symmetric(4, 2, 2).const("m") == 9
    assert make_symmetric(4, 2, 2).label == "symmetric(e=4, q=2, d=2)"


@pytest.mark.parametrize(
    "args, word",
    [((3, 1, 1), "e >= 4"), ((4, 0, 1), "q >= 1"), ((4, 1, 0), "d >= 1"), ((4, 2, 3), "gcd(m, d)")],
)
def test_symmetric_rejects(args, word):
    with pytest.raises(BadParameter, match=word.replace("(", r"\(").replace(")", r"\)")):
        make_symmetric(*args)


def test_almost_maximal_examples():
    spec = make_almost_maximal(4, 3, 9)
    assert spec.generators == (5, 8, 9, 12)
    assert spec.const("a") == 5
    assert make_almost_maximal(4, 3, 19).generators == (5, 8, 19, 22)
    with pytest.raises(NotMinimal):
        make_almost_maximal(4, 4, 10)


@pytest.mark.parametrize(
    "args, word",
    [((3, 2, 9), "e >= 4"), ((4, 2, 7), "b > a"), ((4, 5, 21), "gcd"), ((4, 3, 11), "not dividing")],
)
def test_almost_maximal_rejects(args, word):
    with pytest.raises(BadParameter, match=word):
        make_almost_maximal(*args)


def test_case_tags():
    # e=4: case_i is b = 2i, case_ii is b = 3i (mod 5), i = d mod 5
    assert almost_maximal_case(4, 3, 11) == "case_i"
    assert almost_maximal_case(4, 3, 9) == "case_ii"
    assert almost_maximal_case(4, 3, 10) == "uncovered"


def test_uncovered_case_declined():
    spec = FamilySpec("almost_maximal", (("e", 4), ("d", 3), ("b", 10)), (5, 8, 10, 13), (("a", 5),), "uncovered")
    with pytest.raises(UncoveredCase):
        predict(spec)


def test_unbounded_generators():
    assert make_unbounded(5, 4).generators == (35, 36, 41, 42)
    assert make_unbounded(8, 5).generators == (89, 90, 91, 99, 100)
    assert make_unbounded(6, 4).const("k") == 3
    with pytest.raises(BadParameter, match="k >= 2"):
        make_unbounded(4, 4)
    with pytest.raises(BadParameter, match="k >= 2"):
        make_unbounded(9, 5)
    with pytest.raises(BadParameter):
        make_unbounded(7, 6)


# --------------------------------------------------------------- predictions


def test_s54_parts_match_print_and_oracle():
    spec = make_unbounded(5, 4)
    pred = predict(spec)
    assert {k: set(v) for k, v in pred.apery_parts.items()} == S54_PARTS
    union = set().union(*S54_PARTS.values()) | {0}
    assert len(union) == 35
    assert sorted(union) == oracles.apery(spec.generators)


@pytest.mark.parametrize("spec", symmetric_sweep(), ids=lambda s: s.label)
def test_symmetric_apery_and_flags(spec):
    s = spec.semigroup()
    pred = predict(spec)
    assert pred.apery == set(apery_set(s))
    assert set().union(*pred.apery_parts.values()) == pred.apery
    assert len(apery_set(s)) == spec.const("m")
    assert is_symmetric(s)
    assert not is_tangent_cone_cm(s)
    assert nondecreasing_check(s)


@pytest.mark.parametrize("spec", almost_maximal_sweep(), ids=lambda s: s.label)
def test_almost_maximal_apery(spec):
    s = spec.semigroup()
    assert predict(spec).apery == set(apery_set(s))


@pytest.mark.parametrize("spec", unbounded_sweep(), ids=lambda s: s.label)
def test_unbounded_apery_partition(spec):
    s = spec.semigroup()
    pred = predict(spec)
    parts = list(pred.apery_parts.values())
    union = set().union(*parts)
    assert sum(len(p) for p in parts) == len(union)  # disjoint
    assert union | {0} == set(apery_set(s))
    assert is_homogeneous(s)
    assert cone_decomposition(s).is_free


def test_almost_maximal_counterexample():
    # b = 2a + 3d with e = 4: b + a = 3(a + d), so the order jumps and the cone has torsion
    s = new_semigroup([5, 8, 19, 22])
    assert 24 == 19 + 5 == 3 * 8
    assert order(s, 24) == 3
    assert not is_tangent_cone_cm(s)
    assert cone_decomposition(s).torsion == ((1, 1), (1, 2))


def test_counterexamples_are_exactly_b_2a_3d():
    bad = [sp for sp in almost_maximal_sweep(per_e=60) if not is_tangent_cone_cm(sp.semigroup())]
    assert bad
    assert all(sp.param("e") == 4 and sp.param("b") == 10 + 3 * sp.param("d") for sp in bad)


def test_unbounded_counts():
    for n in range(5, 10):
        counts = computed_order_counts(make_unbounded(n, 4).semigroup())
        assert counts == {k: 2 * k + 1 for k in range(1, n)} | {n: 2 * n}
    for n in (8, 10, 12):
        s = make_unbounded(n, 5).semigroup()
        counts = computed_order_counts(s)
        assert len(apery_set(s)) == n * n + 3 * n + 1
        assert counts[1] == 4
        # the corollary states 11 here
        assert counts[2] == 7


# -------------------------------------------------------------- verification


def test_verify_example_flags_numerator_only():
    report = verify_family(make_symmetric(4, 2, 2))
    assert [e.aspect for e in report.entries] == ["hilbert_numerator"]
    entry = report.entries[0]
    assert entry.paper == [1, 3, 1, 1, 1, 0, 0, 1]
    assert entry.computed == [1, 3, 1, 1, 1, 0, 0, 1, 1]
    assert entry.erratum == "sym-example-numerator-t8"
    assert report.verdict == "known_errata_only"


@pytest.mark.parametrize("n", [5, 6, 7])
def test_verify_unbounded4_top_count(n):
    report = verify_family(make_unbounded(n, 4))
    assert len(report.entries) == 1
    entry = report.entries[0]
    assert entry.aspect == "order_counts"
    assert dict(map(tuple, entry.paper))[n] == 2 * n + 1
    assert dict(map(tuple, entry.computed))[n] == 2 * n
    assert set(entry.inherited) == {"decomposition", "hilbert_numerator"}
    assert report.verdict == "known_errata_only"


def test_verify_almost_maximal_constant_term():
    report = verify_family(make_almost_maximal(4, 3, 9))
    assert [(e.aspect, e.erratum) for e in report.entries] == [
        ("hilbert_numerator", "am-series-missing-fiber-summand")
    ]
    assert report.entries[0].paper == [0, 3, 1]
    assert report.entries[0].computed == [1, 3, 1]


def test_verify_almost_maximal_counterexample_folds_into_orders():
    report = verify_family(make_almost_maximal(4, 3, 19))
    assert [e.aspect for e in report.entries] == ["orders"]
    assert report.entries[0].erratum == "am-e4-b-equals-2a-plus-3d"
    assert "decomposition" in report.entries[0].inherited


def test_unknown_mismatch_is_unexpected():
    spec = make_symmetric(4, 1, 1)
    assert classify(spec, "apery", [0, 1], [0, 2]) is None
    assert classify(spec, "hilbert_numerator", [5], [1]) is None


def test_verify_is_deterministic():
    for spec in (make_symmetric(5, 2, 3), make_unbounded(8, 5), make_almost_maximal(5, 7, 21)):
        assert verify_family(spec) == verify_family(spec)


def test_all_default_sweeps_have_only_known_errata():
    specs = symmetric_sweep() + almost_maximal_sweep() + unbounded_sweep()
    verdicts = {verify_family(s).verdict for s in specs}
    assert verdicts == {"known_errata_only"}
