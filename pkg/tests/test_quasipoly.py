from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ehrhart import (
    GeneratorConfig,
    binomial,
    catalog,
    count_points,
    delta_vector,
    delta_vector_series,
    denominator,
    evaluate_qp,
    fit_qp,
    from_vertices,
    gen_dual_of_lattice,
    gen_rational_control,
    negative_binomial_reflect,
    residue_monomial_coefficients,
)


def segment(a, b):
    return from_vertices([(a,), (b,)])


# ---------------------------------------------------------------- binomial

def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(1, 2) == 0
    assert binomial(-3, 2) == 6
    assert binomial(-1, 2) == 1
    assert binomial(-2, 3) == -4
    assert binomial(7, 0) == 1
    assert binomial(-5, 0) == 1
    with pytest.raises(ValueError):
        binomial(3, -1)


def test_reflection_examples():
    assert negative_binomial_reflect(-1, 2) == (1, 2)
    assert negative_binomial_reflect(-2, 3) == (-1, 4)
    assert negative_binomial_reflect(1, 2) == (1, 0)


def test_reflection_exhaustive_window():
    for x in range(-20, 21):
        for n in range(0, 7):
            sign, top = negative_binomial_reflect(x, n)
            assert binomial(x, n) == sign * binomial(top, n), (x, n)


@given(st.integers(min_value=-200, max_value=200), st.integers(min_value=0, max_value=8))
def test_reflection_property(x, n):
    sign, top = negative_binomial_reflect(x, n)
    assert sign == (-1) ** n
    assert binomial(x, n) == sign * binomial(top, n)


# --------------------------------------------------------------------- fit

def test_fit_square():
    qp = fit_qp(catalog()["square2"])
    assert (qp.n, qp.k) == (2, 1)
    assert qp.table.column(0) == (1, 6, 1)


def test_fit_diamond():
    P = catalog()["diamond2"]
    assert [count_points(P, m) for m in range(3)] == [1, 5, 13]
    assert fit_qp(P).table.column(0) == (1, 2, 1)


def test_fit_half_segment_by_hand():
    # L(m) = floor(m/2) + m + 1: counts 1, 2, 4, 5.
    P = catalog()["seg_mhalf_1"]
    assert [count_points(P, m) for m in range(4)] == [1, 2, 4, 5]
    qp = fit_qp(P)
    assert qp.table.column(0) == (1, 2)
    assert qp.table.column(1) == (2, 1)


def test_fit_entries_are_integers(fixtures):
    for P in fixtures.values():
        for row in fit_qp(P).table.delta:
            assert all(isinstance(v, int) for v in row)


# -------------------------------------------------------------- evaluation

def test_evaluate_square():
    qp = fit_qp(catalog()["square2"])
    assert evaluate_qp(qp, 3) == 49
    assert evaluate_qp(qp, -1) == 1


def test_evaluate_at_zero(fixtures):
    for P in fixtures.values():
        assert evaluate_qp(fit_qp(P), 0) == 1


def test_evaluate_negative_residue_convention():
    # k = 2: m = -1 must land in residue 1 with l = -1.
    qp = fit_qp(catalog()["seg_mhalf_1"])
    interior = count_points(catalog()["seg_mhalf_1"], 1, strict=True)
    assert evaluate_qp(qp, -1) == -interior  # reciprocity in dimension 1


def test_extrapolation_beyond_fit_window(fixtures):
    for P in fixtures.values():
        qp = fit_qp(P)
        for m in range(3 * qp.k * (qp.n + 1) + 1):
            assert evaluate_qp(qp, m) == count_points(P, m), (m,)


# ------------------------------------------------------------ delta-vector

def test_delta_vector_interleaving_examples():
    assert delta_vector(fit_qp(catalog()["square2"])).entries == (1, 6, 1)
    assert delta_vector(fit_qp(catalog()["halfdiamond2"])).entries == \
        (1, 1, 2, 2, 1, 1)
    assert delta_vector(fit_qp(catalog()["seg_mhalf_1"])).entries == (1, 2, 2, 1)


def test_series_oracle_unit_segment():
    # counts 1, 4 -> delta = (1, 4 - 2*1) = (1, 2)
    assert delta_vector_series(segment(-1, 2)).entries == (1, 2)


def test_series_oracle_sixth_segment():
    P = catalog()["seg_mhalf_third"]
    counts = [count_points(P, m) for m in range(12)]
    assert counts == [1, 1, 2, 3, 4, 4, 6, 6, 7, 8, 9, 9]
    assert delta_vector_series(P).entries == (1, 1, 2, 3, 4, 4, 4, 4, 3, 2, 1, 1)


def test_series_oracle_third_segment():
    P = catalog()["seg_m23_1"]
    counts = [count_points(P, m) for m in range(6)]
    assert counts == [1, 2, 4, 6, 7, 9]
    assert delta_vector_series(P).entries == (1, 2, 4, 4, 3, 1)


def test_fit_and_series_agree_on_fixtures(fixtures):
    for P in fixtures.values():
        assert delta_vector(fit_qp(P)) == delta_vector_series(P)


def test_fit_and_series_agree_on_generated():
    for i in range(8):
        P = gen_dual_of_lattice(GeneratorConfig(seed=700 + i, dim=2))
        assert delta_vector(fit_qp(P)) == delta_vector_series(P)
        Q = gen_rational_control(GeneratorConfig(seed=800 + i, dim=2))
        assert delta_vector(fit_qp(Q)) == delta_vector_series(Q)


def test_delta_structure(fixtures):
    for P in fixtures.values():
        k = denominator(P)
        qp = fit_qp(P)
        d = delta_vector(qp)
        assert d[0] == 1
        assert all(v >= 0 for v in d)
        assert len(d) == k * (qp.n + 1)
        # Row zero of the table holds the first k counts.
        for r in range(k):
            assert qp.table.entry(0, r) == count_points(P, r)
        sums = qp.table.column_sums()
        assert len(set(sums)) == 1
        # Positive column sum: each residue polynomial has degree exactly n.
        assert sums[0] > 0


# ---------------------------------------------------- monomial coefficients

def test_monomial_coefficients_square():
    qp = fit_qp(catalog()["square2"])
    # L(l) = (2l + 1)^2 = 4l^2 + 4l + 1
    assert residue_monomial_coefficients(qp, 0) == (F(1), F(4), F(4))


def test_monomial_coefficients_half_segment():
    qp = fit_qp(catalog()["seg_mhalf_1"])
    # L(2l) = 3l + 1 and L(2l + 1) = 3l + 2.
    assert residue_monomial_coefficients(qp, 0) == (F(1), F(3))
    assert residue_monomial_coefficients(qp, 1) == (F(2), F(3))


def test_dimension_four_tesseract():
    # L(m) = (2m+1)^4, so the numerator coefficients follow from the
    # series product with (1-t)^5: (1, 76, 230, 76, 1).
    corners = [(a, b, c, d) for a in (-1, 1) for b in (-1, 1)
               for c in (-1, 1) for d in (-1, 1)]
    P = from_vertices(corners)
    assert [count_points(P, m) for m in range(5)] == [(2 * m + 1) ** 4
                                                      for m in range(5)]
    qp = fit_qp(P)
    assert delta_vector(qp).entries == (1, 76, 230, 76, 1)
    assert delta_vector_series(P).entries == (1, 76, 230, 76, 1)
    assert evaluate_qp(qp, -1) == 1  # reciprocity: one interior point


@given(st.integers(min_value=-6, max_value=12))
def test_monomial_and_binomial_forms_agree(l):
    qp = fit_qp(catalog()["seg_m23_1"])
    for r in range(qp.k):
        coeffs = residue_monomial_coefficients(qp, r)
        direct = sum(c * l**d for d, c in enumerate(coeffs))
        assert direct == evaluate_qp(qp, l * qp.k + r)
