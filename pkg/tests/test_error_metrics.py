import math

import pytest

from hbim.errors import DomainError
from hbim.error_metrics import (
    Comparator,
    MismatchSpec,
    accuracy_ratio,
    corrected_rows,
    corrected_spec,
    delta_Q,
    langford_E,
    mismatch_integral,
    mismatch_table,
    paper_benchmark_rows,
)
from hbim.numerics import Tolerance

from . import oracles

N_STAR = 2.0 / (math.pi - 2.0)
PRINTED = {1.75: 1.64674, 2.0: 1.91332, 3.0: 3.207569, 3.65: 4.20960, 4.0: 4.5567, 20.0: 26.9550}


@pytest.mark.parametrize("spec", paper_benchmark_rows(), ids=lambda s: f"n{s.n_label}")
def test_literal_rows_against_oracle(spec):
    ref = float(oracles.mismatch_ref(spec.coefficient, spec.exponent_used, spec.upper_limit, "literal"))
    assert mismatch_integral(spec).value == pytest.approx(ref, rel=1e-9)


@pytest.mark.parametrize("spec", paper_benchmark_rows(), ids=lambda s: f"n{s.n_label}")
def test_literal_rows_reproduce_printed(spec):
    assert mismatch_integral(spec).value == pytest.approx(PRINTED[spec.n_label], rel=1e-2)


@pytest.mark.parametrize("spec", corrected_rows(), ids=lambda s: f"n{s.n_label}")
def test_corrected_rows_against_oracle(spec):
    ref = float(oracles.mismatch_ref(spec.coefficient, spec.exponent_used, spec.upper_limit, "corrected"))
    assert mismatch_integral(spec).value == pytest.approx(ref, rel=1e-8)


def test_row_with_exact_coefficient():
    k = math.sqrt(2 * 1.75 * 2.75)
    spec = MismatchSpec(1.75, 1.75, 1.0 / k, 3.1, Comparator.PAPER_LITERAL_ERF)
    ref = float(oracles.mismatch_ref(1.0 / k, 1.75, 3.1, "literal"))
    assert mismatch_integral(spec).value == pytest.approx(ref, rel=1e-9)


def test_row_labelled_365_uses_375():
    row = [r for r in paper_benchmark_rows() if r.n_label == 3.65][0]
    assert row.exponent_used == 3.75


def test_literal_ordering():
    values = [r.value for r in mismatch_table(paper_benchmark_rows())]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_corrected_optimum_beats_large_n():
    e_star = mismatch_integral(corrected_spec(N_STAR)).value
    for n in (3.0, 4.0, 20.0):
        assert e_star < mismatch_integral(corrected_spec(n)).value


def test_tolerance_halving_invariance():
    for spec in paper_benchmark_rows() + corrected_rows():
        a = mismatch_integral(spec, Tolerance(1e-10, 1e-10)).value
        b = mismatch_integral(spec, Tolerance(5e-11, 5e-11)).value
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


def test_table_sorted_and_parallel_identical():
    specs = list(reversed(paper_benchmark_rows()))
    serial = mismatch_table(specs)
    parallel = mismatch_table(specs, jobs=4)
    assert [r.spec.n_label for r in serial] == sorted(PRINTED)
    assert serial == parallel


def test_comparators():
    assert Comparator.PAPER_LITERAL_ERF(1.0) == pytest.approx(math.erf(1.0), abs=1e-15)
    assert Comparator.CORRECTED_ERFC_HALF(1.0) == pytest.approx(math.erfc(0.5), abs=1e-15)
    assert str(Comparator.CORRECTED_ERFC_HALF) == "corrected"


@pytest.mark.parametrize("kwargs", [
    dict(n_label=2, exponent_used=2, coefficient=0.5, upper_limit=3.46),
    dict(n_label=2, exponent_used=2, coefficient=0.288, upper_limit=0.0),
    dict(n_label=2, exponent_used=0.0, coefficient=0.288, upper_limit=3.46),
])
def test_spec_validation(kwargs):
    with pytest.raises(DomainError):
        MismatchSpec(**kwargs)


class TestLangford:
    @pytest.mark.parametrize("n", [1.6, 1.75, 2.0, 2.5, 3.0, N_STAR, 4.0, 10.0, 20.0])
    def test_pt_against_power_integrals(self, n):
        res = langford_E("pt", n, 1.0)
        assert res.converged
        assert res.e_n == pytest.approx(float(oracles.langford_ref("pt", n)), rel=1e-8)

    @pytest.mark.parametrize("n", [1.75, 2.0, 3.0, 3.66, 20.0])
    def test_pf_against_power_integrals(self, n):
        assert langford_E("pf", n, 1.0).e_n == pytest.approx(float(oracles.langford_ref("pf", n)), rel=1e-8)

    @pytest.mark.parametrize("cls", ["pt", "pf"])
    @pytest.mark.parametrize("n", [1.75, 2.0, 4.0, 20.0])
    def test_time_power_law(self, cls, n):
        ts = [0.1 * 10 ** (k / 4) for k in range(5)]
        scaled = [langford_E(cls, n, t).E * t ** 1.5 for t in ts]
        if cls == "pf":
            # the temperature scale itself grows like sqrt(t)
            scaled = [s / t for s, t in zip(scaled, ts)]
        ref = scaled[0]
        assert all(abs(s - ref) <= 1e-6 * ref for s in scaled)

    def test_e_n_time_invariant(self):
        a = langford_E("pt", 2.0, 0.01).e_n
        b = langford_E("pt", 2.0, 100.0).e_n
        assert b == pytest.approx(a, rel=1e-8)

    def test_amplitude_normalised(self):
        assert langford_E("pt", 3.0, 1.0, amplitude=7.5).e_n == pytest.approx(langford_E("pt", 3.0, 1.0).e_n, rel=1e-10)

    @pytest.mark.parametrize("n", [1.2, 1.5])
    def test_divergent(self, n):
        res = langford_E("pt", n, 1.0)
        assert not res.converged
        assert math.isinf(res.E)

    @pytest.mark.parametrize("args", [("sphere", 2.0, 1.0), ("pt", 1.0, 1.0), ("pt", 2.0, 0.0)])
    def test_invalid(self, args):
        with pytest.raises(DomainError):
            langford_E(*args)


class TestDeltaQ:
    def test_zero_at_optimum(self):
        assert abs(delta_Q(N_STAR)) <= 1e-15

    def test_sign_change(self):
        assert delta_Q(1.2) < 0.0 < delta_Q(3.0)

    def test_n2_value(self):
        assert delta_Q(2.0) == pytest.approx(math.sqrt(12.0) / 3.0 - 2.0 / math.sqrt(math.pi), rel=1e-15)

    def test_pt_only(self):
        with pytest.raises(DomainError):
            delta_Q(2.0, "pf")


class TestAccuracyRatio:
    def test_published_pair(self):
        assert accuracy_ratio(1.91332, 1.64674) == pytest.approx(0.16188, abs=2e-3)

    def test_trivial(self):
        assert accuracy_ratio(3.0, 3.0) == 0.0
        assert accuracy_ratio(4.0, 2.0) == 1.0

    def test_zero_reference(self):
        with pytest.raises(ZeroDivisionError):
            accuracy_ratio(1.0, 0.0)
