"""The law catalogue: completeness, exhaustive/randomized harnesses,
determinism, and witness soundness."""

import pytest

from relcalc.laws import (
    LAWS,
    BudgetError,
    CheckConfig,
    EnvironmentError_,
    Shape,
    all_relations,
    check_instance,
    exhaustive_check,
    get_law,
    randomized_check,
)
from relcalc.oracle import star_by_powers
from relcalc.rel_core import converse, equals, identity, meet, star

from conftest import rel_of

EXPECTED_CATALOGUE = {
    "heyting-gc": (3, Shape.EQUIVALENCE),
    "converse-gc": (2, Shape.EQUIVALENCE),
    "converse-compose": (2, Shape.EQUATION),
    "converse-identity": (0, Shape.EQUATION),
    "modularity-left": (3, Shape.INCLUSION),
    "modularity-right": (3, Shape.INCLUSION),
    "star-unfold": (1, Shape.INCLUSION),
    "star-induction": (2, Shape.IMPLICATION),
    "star-reflexive": (1, Shape.INCLUSION),
    "star-idempotent": (1, Shape.EQUATION),
    "star-transitive": (1, Shape.EQUATION),
    "star-converse": (1, Shape.EQUATION),
    "star-monotonic": (2, Shape.IMPLICATION),
    "easy-inclusion": (2, Shape.INCLUSION),
    "lemma-fused": (3, Shape.IMPLICATION),
    "lemma-elim-arrow": (3, Shape.IMPLICATION),
    "lemma-main-step": (3, Shape.IMPLICATION),
    "theorem-sub": (1, Shape.INCLUSION),
    "cancellation": (2, Shape.INCLUSION),
    "strengthened-inclusion": (3, Shape.IMPLICATION),
    "strengthened-equality": (3, Shape.IMPLICATION),
    "main-theorem": (1, Shape.EQUATION),
}


def test_catalogue_is_exactly_as_specified():
    assert set(LAWS) == set(EXPECTED_CATALOGUE)
    for law_id, (arity, shape) in EXPECTED_CATALOGUE.items():
        law = LAWS[law_id]
        assert law.arity == arity
        assert law.shape == shape
        if shape is Shape.IMPLICATION:
            assert law.antecedent is not None
            assert law.force is not None


def test_unknown_law_rejected():
    with pytest.raises(KeyError):
        get_law("no-such-law")


# ---------------------------------------------------------------------------
# check_instance


def test_check_instance_main_theorem_example():
    r = rel_of(3, [(0, 1), (1, 0), (1, 2)])
    assert check_instance(get_law("main-theorem"), (r,))
    # both sides, computed independently: the starth-root side closed by
    # power iteration, the other side directly
    lhs = meet(star(r), converse(star(r)))
    rhs = star_by_powers(meet(r, star_by_powers(converse(r))))
    expected = rel_of(3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
    assert equals(lhs, expected)
    assert equals(rhs, expected)


def test_check_instance_main_theorem_identity():
    assert check_instance(get_law("main-theorem"), (identity(2),))


def test_check_instance_elim_arrow_forced_antecedent():
    law = get_law("lemma-elim-arrow")
    for pairs in ([(0, 1)], [(0, 1), (1, 0), (1, 2)], []):
        r = rel_of(3, pairs)
        s = star(converse(r))
        t = meet(r, s)
        assert law.antecedent(r, s, t)
        assert check_instance(law, (r, s, t))


def test_check_instance_environment_errors():
    law = get_law("main-theorem")
    with pytest.raises(EnvironmentError_):
        check_instance(law, ())
    with pytest.raises(EnvironmentError_):
        check_instance(get_law("converse-gc"), (identity(2), identity(3)))
    with pytest.raises(EnvironmentError_):
        check_instance(get_law("converse-identity"), ())


# ---------------------------------------------------------------------------
# Exhaustive mode


@pytest.mark.parametrize("law_id", sorted(LAWS))
@pytest.mark.parametrize("n", [1, 2])
def test_exhaustive_all_laws_small_carriers(law_id, n):
    law = LAWS[law_id]
    report = exhaustive_check(law, n)
    assert report.verdict == "pass", report.summary_line()
    expected = (2 ** (n * n)) ** law.arity
    assert report.instances == expected


@pytest.mark.parametrize(
    "law_id", sorted(k for k, v in EXPECTED_CATALOGUE.items() if v[0] == 1)
)
def test_exhaustive_arity_one_laws_n3_n4(law_id):
    for n in (3, 4):
        report = exhaustive_check(LAWS[law_id], n)
        assert report.verdict == "pass", report.summary_line()
        assert report.instances == 2 ** (n * n)


def test_exhaustive_instance_counts():
    assert exhaustive_check(get_law("main-theorem"), 3).instances == 512
    assert exhaustive_check(get_law("modularity-left"), 2).instances == 4096
    assert exhaustive_check(get_law("converse-identity"), 1).instances == 1


def test_exhaustive_budget_error_names_required_count():
    with pytest.raises(BudgetError, match="134217728"):
        exhaustive_check(get_law("modularity-left"), 3)


def test_enumeration_is_bit_pattern_order():
    rels = all_relations(2)
    assert len(rels) == 16
    codes = [sum(1 << (i * 2 + j) for (i, j) in r.pairs()) for r in rels]
    assert codes == list(range(16))


# ---------------------------------------------------------------------------
# Randomized mode


def test_randomized_main_theorem():
    config = CheckConfig(size=8, samples=1000, seed=42)
    report = randomized_check(get_law("main-theorem"), config)
    assert report.verdict == "pass"
    assert report.instances == 1000
    assert report.vacuous == 0


def test_randomized_is_deterministic():
    config = CheckConfig(size=6, samples=200, seed=7)
    for law_id in ("main-theorem", "lemma-elim-arrow", "star-induction"):
        a = randomized_check(LAWS[law_id], config)
        b = randomized_check(LAWS[law_id], config)
        assert a == b


def test_randomized_nonvacuous_fraction_for_implications():
    config = CheckConfig(size=5, samples=500, seed=7)
    for law_id, (arity, shape) in EXPECTED_CATALOGUE.items():
        if shape is not Shape.IMPLICATION:
            continue
        report = randomized_check(LAWS[law_id], config)
        assert report.verdict == "pass", report.summary_line()
        nonvacuous = report.instances - report.vacuous
        assert nonvacuous / report.instances >= 0.5, report.summary_line()


def test_config_validation():
    with pytest.raises(ValueError):
        CheckConfig(size=0, samples=10, seed=1)
    with pytest.raises(ValueError):
        CheckConfig(size=3, samples=0, seed=1)
    with pytest.raises(ValueError):
        CheckConfig(size=3, samples=10, seed=1, densities=(0.0, 0.5))


# ---------------------------------------------------------------------------
# Witness soundness (via the corrupted fixture)


def test_corrupted_law_exhaustive_witness(broken_main_theorem):
    report = exhaustive_check(broken_main_theorem, 2)
    assert report.verdict == "fail"
    assert report.witness is not None
    # soundness: re-evaluating the law on the witness reproduces the failure
    assert not check_instance(broken_main_theorem, report.witness)
    # the witness is the first failure in canonical order, no bigger than
    # the two-cycle counterexample
    (r,) = report.witness
    assert r.count() <= 2


def test_corrupted_law_randomized_witness(broken_main_theorem):
    config = CheckConfig(size=4, samples=500, seed=3)
    report = randomized_check(broken_main_theorem, config)
    assert report.verdict == "fail"
    assert not check_instance(broken_main_theorem, report.witness)


def test_report_summary_line_format():
    report = exhaustive_check(get_law("main-theorem"), 2)
    assert report.summary_line() == (
        "law=main-theorem mode=exhaustive n=2 instances=16 vacuous=0 verdict=pass"
    )
