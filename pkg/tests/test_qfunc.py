import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from colourhopf import qfunc
from colourhopf.errors import ConfigError, EmptySampleSet, SingularPoint
from colourhopf.qfunc import QParams

qs = st.floats(min_value=0.05, max_value=0.95)
zs = st.floats(min_value=-5.0, max_value=5.0)
colours = st.sampled_from([1, -1])


@pytest.mark.parametrize("q", [0.0, 1.0, 1.5, -0.2, float("nan")])
def test_qparams_rejects_q_outside_unit_interval(q):
    with pytest.raises(ConfigError):
        QParams(q)


def test_qparams_rejects_nonpositive_tol():
    with pytest.raises(ConfigError):
        QParams(0.5, tol=0.0)


@pytest.mark.parametrize("x, expected", [(0, 0.0), (1, 1.0), (2, 2.5), (3, 5.25)])
def test_q_number_values(p, x, expected):
    # (q^2 - q^-2)/(q - q^-1) = q + q^-1 = 2.5 at q = 0.5
    assert qfunc.q_number(x, p) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("n, expected", [(0, 1.0), (1, 1.0), (3, 13.125)])
def test_q_factorial_values(p, n, expected):
    assert qfunc.q_factorial(n, p) == pytest.approx(expected, rel=1e-14)


def test_q_factorial_rejects_negative(p):
    with pytest.raises(ValueError):
        qfunc.q_factorial(-1, p)


@given(q=qs, x=st.floats(min_value=-8, max_value=8))
def test_q_number_is_odd(q, x):
    p = QParams(q)
    assert abs(qfunc.q_number(-x, p) + qfunc.q_number(x, p)) < 1e-12 * (1 + abs(qfunc.q_number(x, p)))


@given(q=st.floats(min_value=0.9, max_value=0.999), n=st.integers(0, 6))
def test_q_number_tends_to_integer(q, n):
    assert abs(qfunc.q_number(n, QParams(q)) - n) < 60 * (1 - q) ** 2 * max(n, 1) ** 3


def test_G_values(p):
    assert qfunc.G_fn(0.0, p) == 1.0
    assert qfunc.G_fn(1.0, p) == 1.5
    assert abs(qfunc.G_fn(qfunc.singular_point(p), p)) < 1e-15


@pytest.mark.parametrize("z, delta, expected", [(0, 1, 0.0), (1, 1, 2.0), (0, -1, -4.0)])
def test_p_delta_values(p, z, delta, expected):
    assert qfunc.p_delta(z, delta, p) == pytest.approx(expected, abs=1e-14)


@given(q=qs, z=zs, delta=colours)
def test_p_delta_lands_on_its_side_of_singular_point(q, z, delta):
    p = QParams(q)
    assert delta * (qfunc.p_delta(z, delta, p) - qfunc.singular_point(p)) > 0


@given(q=qs, z=zs, delta=colours)
def test_G_of_p_delta_is_signed_exponential(q, z, delta):
    p = QParams(q)
    assert qfunc.G_fn(qfunc.p_delta(z, delta, p), p) == pytest.approx(delta * q ** -z, rel=1e-12)


def test_g_inverse_values(p):
    assert qfunc.g_inverse(2.0, p) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(SingularPoint):
        qfunc.g_inverse(qfunc.singular_point(p), p)


@given(q=qs, z=zs, delta=colours)
def test_inverse_pair_property(q, z, delta):
    p = QParams(q)
    assert abs(qfunc.g_inverse(qfunc.p_delta(z, delta, p), p) - z) < 1e-9


def test_F_and_H_values(p):
    assert qfunc.F_fn(0.0, p) == 0.0
    assert qfunc.H_fn(0.0, p) == pytest.approx(0.0, abs=1e-15)
    # (2*4 + 0.5*0.25 - 2.5) / 2.25
    assert qfunc.H_fn(2.0, p) == pytest.approx(2.5, abs=1e-14)
    for fn in (qfunc.F_fn, qfunc.H_fn):
        with pytest.raises(SingularPoint):
            fn(qfunc.singular_point(p), p)


@given(q=qs, w=st.floats(min_value=-3, max_value=3), delta=colours)
def test_H_composed_with_p_is_su_casimir_function(q, w, delta):
    # H(p_delta(w)) = [w]_q [w+1]_q
    p = QParams(q)
    lhs = qfunc.H_fn(qfunc.p_delta(w, delta, p), p)
    rhs = qfunc.q_number(w, p) * qfunc.q_number(w + 1, p)
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


@given(q=qs, z=zs)
def test_sigma_is_involution_and_negates_G(q, z):
    p = QParams(q)
    s = qfunc.sigma_scalar(z, p)
    assert qfunc.sigma_scalar(s, p) == pytest.approx(z, abs=1e-12)
    assert qfunc.G_fn(s, p) == pytest.approx(-qfunc.G_fn(z, p), abs=1e-12)


def test_sigma_fixes_singular_point(p):
    zs_ = qfunc.singular_point(p)
    assert qfunc.sigma_scalar(zs_, p) == pytest.approx(zs_)


@given(q=qs, z=zs, s=colours)
def test_antipode_scalar_is_involution(q, z, s):
    p = QParams(q)
    if abs(qfunc.G_fn(z, p)) < 1e-3:
        return
    once = qfunc.antipode_scalar(z, s, p)
    assert qfunc.G_fn(once, p) == pytest.approx(s / qfunc.G_fn(z, p), rel=1e-12)
    assert qfunc.antipode_scalar(once, s, p) == pytest.approx(z, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("N, delta, expected", [
    (0, 1, [0.0]),
    (2, 1, [2.0, 0.0, -1.0]),
    (2, -1, [-6.0, -4.0, -3.0]),
])
def test_spectrum_values(p, N, delta, expected):
    np.testing.assert_allclose(qfunc.spectrum(N, delta, p), expected, atol=1e-13)


def test_spectrum_matches_worked_example_closed_forms(p):
    q = p.q
    plus = qfunc.spectrum(2, 1, p)
    minus = qfunc.spectrum(2, -1, p)
    assert plus[0] == pytest.approx(1 / q)
    assert minus[0] == pytest.approx((q + 1) / (q * (q - 1)))
    assert minus[-1] == pytest.approx((q + 1) / (q - 1))


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("delta", [1, -1])
@pytest.mark.parametrize("N", range(1, 8))
def test_spectrum_monotone_and_on_one_side(q, delta, N):
    p = QParams(q)
    m = qfunc.spectrum(N, delta, p)
    assert np.all(delta * np.diff(m) < 0)
    assert np.all(delta * (m - qfunc.singular_point(p)) > 0)
    assert np.allclose(m, qfunc.p_delta(qfunc.su_weights(N), delta, p), atol=1e-12)


def test_extrema_values(p):
    assert qfunc.extrema(2, 1, p)[0] == pytest.approx(2.0)
    assert qfunc.extrema(2, -1, p)[0] == pytest.approx(-3.0)
    for delta in (1, -1):
        jmax, neg = qfunc.extrema(0, delta, p)
        assert jmax == neg == pytest.approx((1 - delta) / (p.q - 1))


@pytest.mark.parametrize("N", range(7))
@pytest.mark.parametrize("delta", [1, -1])
def test_extrema_occur_in_spectrum(p, N, delta):
    m = qfunc.spectrum(N, delta, p)
    jmax, neg = qfunc.extrema(N, delta, p)
    assert np.isclose(m, jmax).any() and np.isclose(m, neg).any()
    assert jmax == pytest.approx(m.max()) and neg == pytest.approx(m.min())


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("N", range(11))
def test_casimir_value_colour_independent(q, N):
    p = QParams(q)
    expected = qfunc.q_number(N / 2, p) * qfunc.q_number(N / 2 + 1, p)
    for delta in (1, -1):
        assert abs(qfunc.casimir_value(N, delta, p) - expected) < 1e-9


def test_casimir_value_examples(p):
    assert qfunc.casimir_value(0, 1, p) == pytest.approx(0.0, abs=1e-15)
    assert qfunc.casimir_value(2, 1, p) == pytest.approx(2.5)


@pytest.mark.parametrize("q, size", [(0.3, 41), (0.5, 40), (0.8, 40)])
def test_default_grid_excludes_singular_point(q, size):
    # the grid spacing is 0.25; 1/(q-1) is -2 at q=0.5 and -5 at q=0.8
    p = QParams(q)
    grid = qfunc.default_grid(p)
    assert grid.size == size
    assert np.all(np.abs(grid - qfunc.singular_point(p)) > 1e-6)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("delta", [1, -1])
def test_functional_equation_checks_pass_on_default_grid(q, delta):
    p = QParams(q)
    assert qfunc.check_p_equation(delta, p).residual < 1e-10
    assert qfunc.check_inverse_pair(delta, p).residual < 1e-9
    assert qfunc.check_consistency_FGH(p).residual < 1e-10


def test_p_equation_at_zero_is_exact(p):
    assert qfunc.check_p_equation(1, p, samples=[0.0]).residual == 0.0


def test_checks_reject_empty_samples(p):
    with pytest.raises(EmptySampleSet):
        qfunc.check_p_equation(1, p, samples=[])
    with pytest.raises(EmptySampleSet):
        qfunc.check_consistency_FGH(p, samples=np.array([]))


def test_fgh_check_raises_at_singular_point(p):
    with pytest.raises(SingularPoint):
        qfunc.check_consistency_FGH(p, samples=[0.0, qfunc.singular_point(p)])


def test_fgh_identity_with_independent_shift(p):
    # z - G(z) = q z - 1, an independent route to the shifted argument
    z = np.linspace(-3, 3, 13)
    z = z[np.abs(qfunc.G_fn(z, p)) > 1e-6]
    lhs = qfunc.H_fn(z, p) - qfunc.H_fn(p.q * z - 1.0, p)
    assert np.max(np.abs(lhs - qfunc.F_fn(z, p))) < 1e-10


def test_check_report_pass_is_strict(p):
    rep = qfunc.check_p_equation(1, p.with_tol(1e-300), samples=[0.0])
    assert rep.residual == 0.0 and rep.passed  # 0 < 1e-300
    assert not math.isnan(rep.threshold)
