import numpy as np
import pytest

from ordsum import Kind, SummandFamily, invert_strict_negation, make_connective, ordinal_sum_negation
from ordsum.verification import (
    SUITE_SIZES,
    TheoremId,
    VerificationError,
    VerifyReport,
    check_axioms,
    dominance_family,
    equilibrium_family,
    falsify,
    mirror_hypothesis,
    random_family,
    run_suite,
    suite_csv,
    verify,
)


def neg(name, *params):
    return make_connective(Kind.NEGATION, name, params)


def nfam(*triples):
    return SummandFamily.of(Kind.NEGATION, list(triples))


P2 = neg("power_complement", 2)
MIRRORED = nfam((0.2, 0.5, P2), (0.5, 0.8, invert_strict_negation(P2)))


def test_theorem_ids_cover_fourteen_results():
    assert len(TheoremId) == 14


def test_fail_report_requires_witness():
    with pytest.raises(AssertionError):
        VerifyReport("x", "d", "fail")


@pytest.mark.parametrize("theorem", ["negation_axioms", "range_confinement",
                                     "continuity_strictness_iff", "frontier_sufficient",
                                     "frontier_necessary", "inverse_construction",
                                     "strong_sufficient", "strong_necessary"])
def test_mirrored_family_passes_negation_results(theorem):
    r = verify(theorem, MIRRORED)
    assert r.verdict == "pass", r.render()


def test_strong_sufficient_instance():
    r = verify("strong_sufficient", MIRRORED)
    assert r.passed and r.max_deviation <= 1e-9
    n = ordinal_sum_negation(MIRRORED)
    assert n(0.3) == pytest.approx(23 / 30)


def test_strong_sufficient_hypothesis_named_when_missing():
    r = verify("strong_sufficient", nfam((0.2, 0.5, P2)))
    assert r.verdict == "hypotheses_not_met"
    assert "mirrored" in r.notes


def test_strong_necessary_unconditional_reading_fails_on_standard_summand():
    # N^S on [0.2, 0.5] reproduces N^S everywhere: strong, but no mirrored partner
    r = verify("strong_necessary", nfam((0.2, 0.5, neg("standard"))))
    assert r.verdict == "fail"
    assert "standard negation" in r.notes


def test_falsify_strong_necessary_finds_involution_witness():
    r = falsify("strong_necessary", nfam((0.2, 0.5, P2)))
    assert r.passed
    n = ordinal_sum_negation(nfam((0.2, 0.5, P2)))
    x, _, observed = r.witnesses[0]
    assert abs(n(n(x)) - x) > 1e-6
    assert observed == pytest.approx(n(n(x)))


def test_falsify_frontier_with_crisp_summand():
    fam = nfam((0.2, 0.5, neg("least")))
    r = falsify("frontier_necessary", fam)
    assert r.passed
    n = ordinal_sum_negation(fam)
    x, _, v = r.witnesses[0]
    assert x < 0.5 and n(x) == pytest.approx(0.5) and v == pytest.approx(0.5)


def test_falsify_leq_guard_when_hypothesis_holds():
    r = falsify("leq_standard_iff", nfam((0.2, 0.8, neg("least"))))
    assert r.verdict == "hypotheses_not_met"


def test_falsify_leq_and_geq_witnesses():
    r = falsify("leq_standard_iff", nfam((0.2, 0.8, P2)))
    assert r.passed
    x, bound, v = r.witnesses[0]
    assert v > 1 - x + 1e-12
    r = falsify("geq_standard_iff", nfam((0.2, 0.8, neg("least"))))
    assert r.passed
    x, bound, v = r.witnesses[0]
    assert v < 1 - x - 1e-12


def test_falsify_continuity():
    r = falsify("continuity_strictness_iff", nfam((0.1, 0.3, neg("greatest")), (0.5, 0.9, P2)))
    assert r.passed


def test_falsify_rejects_theorems_without_converse():
    with pytest.raises(VerificationError):
        falsify("negation_axioms", MIRRORED)


def test_kind_mismatch_is_an_error():
    t = SummandFamily.of(Kind.TNORM, [(0.0, 0.5, make_connective(Kind.TNORM, "godel"))])
    with pytest.raises(VerificationError):
        verify("negation_axioms", t)
    with pytest.raises(VerificationError):
        verify("natneg_tconorm_closed_form", t)
    j = SummandFamily.of(Kind.IMPLICATION, [(0.2, 1.0, make_connective(Kind.IMPLICATION, "godel"))])
    with pytest.raises(VerificationError):
        verify("commuting_diagram", j)


def test_equilibrium_instance_and_unmet():
    r = verify("equilibrium", nfam((0.2, 0.8, neg("standard"))))
    assert r.passed
    r = verify("equilibrium", nfam((0.2, 0.5, neg("standard"))))
    assert r.verdict == "hypotheses_not_met"


def test_closed_form_notes_flag_unscaled_variant():
    t = SummandFamily.of(Kind.TNORM, [(0.0, 0.5, make_connective(Kind.TNORM, "lukasiewicz"))])
    r = verify("natneg_tnorm_closed_form", t)
    assert r.passed and "unscaled" in r.notes


def test_commuting_instance():
    j = SummandFamily.of(Kind.IMPLICATION, [(0.2, 0.5, make_connective(Kind.IMPLICATION, "godel"))])
    r = verify("commuting_diagram", j)
    assert r.passed and r.max_deviation == 0.0


class TestRandomFamilies:
    def test_deterministic(self):
        assert random_family(1, Kind.NEGATION, 3) == random_family(1, Kind.NEGATION, 3)

    def test_mirrored_meets_hypothesis(self):
        fam = random_family(7, Kind.NEGATION, 2, mirrored=True, strict_only=True)
        assert mirror_hypothesis(fam) is None

    @pytest.mark.parametrize("seed", range(30))
    def test_constraints(self, seed):
        f = random_family(seed, Kind.IMPLICATION, 4, b_lt_1=True)
        assert all(s.b < 1 for s in f) and 1 <= len(f) <= 4
        f = random_family(seed, Kind.IMPLICATION, 4, a_gt_0=True)
        assert all(s.a > 0 for s in f) and not f.touching()
        f = random_family(seed, Kind.NEGATION, 4, strict_only=True, no_touch=True)
        assert not f.touching()

    def test_errors(self):
        with pytest.raises(VerificationError):
            random_family(1, Kind.NEGATION, 0)
        with pytest.raises(VerificationError):
            random_family(1, Kind.TNORM, 3, mirrored=True)

    @pytest.mark.parametrize("seed", range(10))
    def test_special_builders(self, seed):
        assert verify("leq_standard_iff", dominance_family(seed, "leq")).passed
        assert verify("geq_standard_iff", dominance_family(seed, "geq")).passed
        assert verify("equilibrium", equilibrium_family(seed)).passed


class TestAxioms:
    def test_catalog_tnorms_pass(self):
        for name in ("godel", "product", "lukasiewicz", "drastic"):
            assert check_axioms(make_connective(Kind.TNORM, name), tol=1e-15).passed

    def test_non_monotone_function_detected(self):
        from ordsum.ordinal_sum import left_ordinal_sum_implication
        j = left_ordinal_sum_implication(
            [(0.2, 0.5, make_connective(Kind.IMPLICATION, "godel"))])
        r = check_axioms(j)
        assert r.verdict == "fail"
        assert any(label.startswith("J1") for label, _, _ in r.witnesses)

    def test_negation_axioms(self):
        assert check_axioms(ordinal_sum_negation(MIRRORED), points=1001).passed


TINY = {k: 2 for k in SUITE_SIZES}


def test_small_suite_csv_shape():
    rows = run_suite(3, sizes=TINY)
    text = suite_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "theorem,seed,verdict,max_deviation,witness_count"
    assert len(lines) == len(rows) + 1
    assert text == suite_csv(run_suite(3, sizes=TINY))
    checks = {r.check for r in rows}
    for t in TheoremId:
        assert t.value in checks or f"{t.value}/converse" in checks
