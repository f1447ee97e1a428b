from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bnsecant.bn_core import (
    ResidualNotEffective,
    SecantParams,
    SeriesParams,
    emptiness_condition_holds,
    expected_dim_secant,
    incidence_dim,
    residual,
    rho,
)


@pytest.mark.parametrize("args, expected", [
    ((9, 1, 6), 1),
    ((0, 0, 0), 0),
    ((6, 2, 6), 0),
])
def test_rho_examples(args, expected):
    assert rho(*args) == expected


def test_rho_matches_speciality_relation():
    # rho = 0 with s1 = 2, r1 = 2 forces g = s1 (r1 + 1) = 6, d1 = r1 (s1 + 1) = 6
    assert rho(2 * 3, 2, 2 * 3) == 0


def test_series_params_validation():
    with pytest.raises(ValueError):
        SeriesParams(3, 5, 4)
    with pytest.raises(ValueError):
        SeriesParams(-1, 0, 0)
    l = SeriesParams(9, 1, 6)
    assert l.rho == 1
    assert l.speciality == 4


def test_secant_params_validation():
    SecantParams(2, 1)
    with pytest.raises(ValueError):
        SecantParams(2, 2)
    with pytest.raises(ValueError):
        SecantParams(2, -1)


@pytest.mark.parametrize("l, expected", [
    (SeriesParams(9, 1, 6), SeriesParams(9, 3, 10)),
    (SeriesParams(3, 2, 4), SeriesParams(3, 0, 0)),
    (SeriesParams(12, 2, 10), SeriesParams(12, 3, 12)),
])
def test_residual_examples(l, expected):
    assert residual(l) == expected


def test_residual_not_effective():
    with pytest.raises(ResidualNotEffective):
        residual(SeriesParams(3, 1, 6))
    with pytest.raises(ResidualNotEffective):
        residual(SeriesParams(2, 2, 3))


def test_residual_matches_rho_parametrisation():
    checked = 0
    for g in range(21):
        for r in range(1, g + 2):
            for d in range(r, 2 * g - 1):
                l = SeriesParams(g, r, d)
                p = l.rho
                if p < 0:
                    continue
                try:
                    l2 = residual(l)
                except ResidualNotEffective:
                    continue
                r2 = Fraction(d - p, r) - 2
                d2 = Fraction((r + 2) * d, r) - Fraction(2 * p, r) - 2 * r - 4
                if r2.denominator == 1 and d2.denominator == 1:
                    assert (l2.r, l2.d) == (r2, d2)
                    checked += 1
    assert checked > 50


def test_residual_preserves_rho_and_is_involution_on_grid():
    for g in range(21):
        for d in range(0, 2 * g - 1):
            for r in range(0, d + 1):
                l = SeriesParams(g, r, d)
                try:
                    l2 = residual(l)
                except ResidualNotEffective:
                    continue
                assert l2.rho == l.rho
                try:
                    assert residual(l2) == l
                except ResidualNotEffective:
                    pass


@given(st.integers(0, 60), st.integers(0, 40), st.integers(0, 120))
def test_residual_involution_property(g, r, d):
    if r > d:
        return
    try:
        l2 = residual(SeriesParams(g, r, d))
        back = residual(l2)
    except ResidualNotEffective:
        return
    assert back == SeriesParams(g, r, d)
    assert l2.rho == rho(g, r, d)


def test_expected_dim_secant_examples():
    assert expected_dim_secant(2, 1, 3) == -1
    for e in range(1, 8):
        for f in range(e):
            assert expected_dim_secant(e, f, e - f) == e - f
    for d1 in range(6, 15):
        assert expected_dim_secant(2 * d1 - 8, d1 - 4, d1 - 3) == 0


def test_expected_dim_secant_rejects_bad_f():
    with pytest.raises(ValueError):
        expected_dim_secant(2, 2, 1)


def test_secant_dimension_at_incidence_matches_incidence_dim():
    for r in range(1, 10):
        for e in range(r + 1, r + 8):
            assert expected_dim_secant(e, e - r, r) == incidence_dim(r)


def test_incidence_dim():
    assert [incidence_dim(r) for r in (1, 0, 5)] == [1, 0, 5]
    with pytest.raises(ValueError):
        incidence_dim(-1)


@pytest.mark.parametrize("args, expected", [
    ((9, 1, 6, 2, 1), True),
    ((9, 1, 6, 5, 1), False),
    ((9, 1, 6, 6, 3), True),
])
def test_emptiness_condition_examples(args, expected):
    assert emptiness_condition_holds(*args) is expected


def test_emptiness_condition_propagates_residual_error():
    with pytest.raises(ResidualNotEffective):
        emptiness_condition_holds(3, 1, 6, 2, 1)
