import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzytollens.algebra import (
    ALL_CONVENTIONS,
    BUILTIN_TNORMS,
    Algebra,
    CustomTNorm,
    TNormKind,
    TruthValue,
    check_tnorm_laws,
    implies_r,
    implies_s,
    kernel,
    negate_r,
    negate_s,
    residuum_numeric,
    tconorm,
    tnorm,
)
from fuzzytollens.errors import LawViolationError, TNormEvaluationError, TruthRangeError

G, P, L = TNormKind.GODEL, TNormKind.PRODUCT, TNormKind.LUKASIEWICZ
unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
kinds = st.sampled_from(BUILTIN_TNORMS)


def average(x, y):
    return (x + y) / 2


class TestTruthValue:
    def test_endpoints_exact(self):
        assert TruthValue(0) == 0.0
        assert TruthValue(1) == 1.0

    @pytest.mark.parametrize("bad", [-1e-12, 1.0000001, float("nan"), float("inf")])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(TruthRangeError):
            TruthValue(bad)

    def test_connectives_reject_rather_than_clamp(self):
        with pytest.raises(TruthRangeError):
            tnorm(P, 1.2, 0.5)
        with pytest.raises(TruthRangeError):
            negate_s(-0.1)


class TestClosedForms:
    @pytest.mark.parametrize("kind,x,y,expected", [
        (L, 0.7, 1.0, 0.7),
        (P, 0.5, 0.4, 0.2),
        (G, 0.3, 0.8, 0.3),
    ])
    def test_tnorm(self, kind, x, y, expected):
        assert tnorm(kind, x, y) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("kind,x,y,expected", [
        (G, 0.3, 0.8, 0.8),
        (P, 0.5, 0.4, 0.7),
        (L, 0.7, 0.0, 0.7),
    ])
    def test_tconorm(self, kind, x, y, expected):
        assert tconorm(kind, x, y) == pytest.approx(expected, abs=1e-15)

    def test_negate_s(self):
        assert negate_s(0.0) == 1.0
        assert negate_s(0.3) == pytest.approx(0.7, abs=1e-15)
        assert negate_s(negate_s(0.42)) == pytest.approx(0.42, abs=1e-15)

    @pytest.mark.parametrize("kind,x,expected", [(G, 0.5, 0.0), (P, 0.0, 1.0), (L, 0.3, 0.7)])
    def test_negate_r(self, kind, x, expected):
        assert negate_r(kind, x) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("kind,x,y,expected", [(G, 1.0, 0.0, 0.0), (P, 0.6, 0.0, 0.4), (L, 0.6, 0.5, 0.9)])
    def test_implies_s(self, kind, x, y, expected):
        assert implies_s(kind, x, y) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("kind,x,y,expected", [(G, 0.4, 0.4, 1.0), (P, 0.8, 0.2, 0.25), (L, 0.9, 0.2, 0.3)])
    def test_implies_r(self, kind, x, y, expected):
        assert implies_r(kind, x, y) == pytest.approx(expected, abs=1e-15)

    def test_product_residuum_zero_antecedent_takes_first_branch(self):
        assert implies_r(P, 0.0, 0.0) == 1.0

    def test_s_implication_false_consequent_is_complement(self):
        for kind in BUILTIN_TNORMS:
            assert implies_s(kind, 0.6, 0.0) == pytest.approx(0.4, abs=1e-15)

    def test_neutral_element_exact(self):
        for kind in BUILTIN_TNORMS:
            for x in (0.95, 0.123456789, 1e-17):
                assert tnorm(kind, x, 1.0) == x
                assert tnorm(kind, 1.0, x) == x
                assert tconorm(kind, x, 0.0) == x


class TestLaws:
    @given(kinds, unit, unit)
    def test_de_morgan(self, kind, x, y):
        assert tconorm(kind, x, y) == pytest.approx(1 - tnorm(kind, 1 - x, 1 - y), abs=1e-12)

    @given(kinds, unit, unit, unit)
    def test_axioms(self, kind, x, y, z):
        assert tnorm(kind, x, y) == pytest.approx(tnorm(kind, y, x), abs=1e-12)
        assert tnorm(kind, x, tnorm(kind, y, z)) == pytest.approx(tnorm(kind, tnorm(kind, x, y), z), abs=1e-12)
        lo, hi = sorted((x, z))
        assert tnorm(kind, lo, y) <= tnorm(kind, hi, y) + 1e-12

    @given(kinds, unit, unit)
    def test_results_in_unit_interval(self, kind, x, y):
        for fn in (tnorm, tconorm, implies_s, implies_r):
            assert 0.0 <= fn(kind, x, y) <= 1.0

    @given(kinds, unit, unit)
    def test_s_contrapositive_symmetry(self, kind, x, y):
        assert implies_s(kind, 1 - y, 1 - x) == pytest.approx(implies_s(kind, x, y), abs=1e-12)

    @given(unit, unit)
    def test_lukasiewicz_r_contrapositive_symmetry(self, x, y):
        assert implies_r(L, 1 - y, 1 - x) == pytest.approx(implies_r(L, x, y), abs=1e-12)

    @given(kinds, unit, unit)
    def test_residuation(self, kind, x, y):
        # adjunction: T(z, x) <= y exactly when z <= I(x, y); check at z = I(x, y)
        z = implies_r(kind, x, y)
        assert tnorm(kind, z, x) <= y + 1e-12

    @pytest.mark.parametrize("kind", BUILTIN_TNORMS)
    @pytest.mark.parametrize("conv", ALL_CONVENTIONS, ids=str)
    def test_classical_degeneration(self, kind, conv):
        alg = Algebra(kind, conv)
        for a, b in itertools.product((0.0, 1.0), repeat=2):
            A, B = bool(a), bool(b)
            assert alg.neg(a) == float(not A)
            assert alg.conj(a, b) == float(A and B)
            assert alg.disj(a, b) == float(A or B)
            assert alg.implies(a, b) == float((not A) or B)


class TestResiduumNumeric:
    @pytest.mark.parametrize("kind,x,y", [(P, 0.8, 0.2), (L, 0.9, 0.2), (G, 0.4, 0.4)])
    def test_spec_examples(self, kind, x, y):
        fn = {P: lambda a, b: a * b, L: lambda a, b: max(0.0, a + b - 1), G: min}[kind]
        assert residuum_numeric(fn, x, y, 1e-9) == pytest.approx(implies_r(kind, x, y), abs=1e-9)

    @given(kinds, unit, unit)
    def test_agrees_with_closed_form(self, kind, x, y):
        z = residuum_numeric(kernel(kind), x, y, 1e-10)
        assert z == pytest.approx(implies_r(kind, x, y), abs=1e-10)

    def test_non_monotone_is_a_law_violation(self):
        def dip(z, x):
            return 0.0 if 0.7 < z < 0.8 else z * x
        with pytest.raises(LawViolationError):
            residuum_numeric(dip, 1.0, 0.5, 1e-9)

    def test_bad_bracket(self):
        with pytest.raises(LawViolationError):
            residuum_numeric(lambda z, x: 0.5, 0.3, 0.1)

    def test_custom_tnorm_goes_through_bisection(self):
        hamacher = CustomTNorm(lambda a, b: 0.0 if a == b == 0 else a * b / (a + b - a * b), "hamacher")
        z = implies_r(hamacher, 0.8, 0.3)
        assert hamacher(z, 0.8) == pytest.approx(0.3, abs=1e-9)


class TestCustomTNorm:
    def test_out_of_range_names_inputs(self):
        bad = CustomTNorm(lambda a, b: a + b, "sum")
        with pytest.raises(TNormEvaluationError) as info:
            tnorm(bad, 0.7, 0.6)
        assert info.value.inputs == (0.7, 0.6)
        assert "0.7" in str(info.value) and "0.6" in str(info.value)

    def test_verify_rejects_average(self):
        with pytest.raises(LawViolationError) as info:
            CustomTNorm(average, "average").verify()
        assert not info.value.report["associativity"].passed

    def test_verify_accepts_hamacher(self):
        hamacher = CustomTNorm(lambda a, b: 0.0 if a == b == 0 else a * b / (a + b - a * b), "hamacher")
        assert hamacher.verify(500, 3).verified


class TestCheckLaws:
    def test_godel(self):
        report = check_tnorm_laws(G, 1000, 7)
        assert report.passed and report.tolerance == 0.0

    def test_lukasiewicz_single_sample(self):
        assert check_tnorm_laws(L, 1, 7).passed

    def test_average_fails_associativity_with_checkable_counterexample(self):
        report = check_tnorm_laws(CustomTNorm(average, "average"), 1000, 7)
        assoc = report["associativity"]
        assert not assoc.passed
        x, y, z = assoc.counterexample
        # oracle: evaluate both groupings directly
        assert abs(average(x, average(y, z)) - average(average(x, y), z)) > 1e-12
        assert report["commutativity"].passed
        assert report["monotonicity"].passed

    def test_deterministic(self):
        a = check_tnorm_laws(CustomTNorm(average), 50, 11).to_record()
        b = check_tnorm_laws(CustomTNorm(average), 50, 11).to_record()
        assert a == b

    def test_out_of_range_custom_is_reported_not_raised(self):
        report = check_tnorm_laws(CustomTNorm(lambda a, b: a + b), 20, 1)
        assert not report.passed

    def test_samples_must_be_positive(self):
        with pytest.raises(ValueError):
            check_tnorm_laws(G, 0, 1)
