import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colourhopf import qfunc
from colourhopf.errors import LogDomainError, MalformedExpr
from colourhopf.expr import (
    FnOfJ0, J0, JM, JP, ONE, Prod, Scale, Sum, G, G_inv, G_pow, apply_antipode,
    apply_antipode_inverse, apply_antipode_suq2, apply_sigma, apply_sigma_delta, eval_expr,
    lagrange, q_pow,
)
from colourhopf.qfunc import QParams
from colourhopf.reps import dqa_rep, suq2_rep

leaves = st.sampled_from([J0, JP, JM, ONE, G(), G_inv(), q_pow(0.5, 1.0), FnOfJ0("affine", (1.0, -2.0)),
                          FnOfJ0("pow", (2,))])
exprs = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.builds(lambda c, e: Scale(c, e), st.floats(-2, 2), kids),
        st.lists(kids, min_size=1, max_size=3).map(lambda xs: Prod(tuple(xs))),
        st.lists(kids, min_size=1, max_size=3).map(lambda xs: Sum(tuple(xs))),
    ),
    max_leaves=6,
)


def test_eval_generators(p):
    r = dqa_rep(2, 1, p)
    np.testing.assert_allclose(eval_expr(J0, r, p), np.diag([2.0, 0.0, -1.0]), atol=1e-14)
    np.testing.assert_array_equal(eval_expr(ONE, r, p), np.eye(3))
    np.testing.assert_array_equal(eval_expr(JP, r, p), r.jplus)


@pytest.mark.parametrize("delta", [1, -1])
def test_G_inverse_commutes_past_raising_with_factor_q(p, delta):
    r = dqa_rep(4, delta, p)
    lhs = eval_expr(Prod((G_inv(), JP)), r, p)
    rhs = eval_expr(Scale(p.q, Prod((JP, G_inv()))), r, p)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_operators_build_nodes():
    assert J0 * JP == Prod((J0, JP))
    assert 2 * JP == Scale(2.0, JP)
    assert JP * 3 == Scale(3.0, JP)
    assert -JM == Scale(-1.0, JM)
    assert J0 + ONE == Sum((J0, ONE))


def test_sigma_twice_is_structural_identity():
    e = Prod((G(), Sum((J0, Scale(2.0, JP))), FnOfJ0("logqG", (1.0,))))
    assert apply_sigma(apply_sigma(e)) == e
    assert apply_sigma_delta(e, 1) is e


def test_sigma_of_G_is_minus_G(p):
    r = dqa_rep(3, -1, p)
    np.testing.assert_allclose(eval_expr(apply_sigma(G()), r, p), -eval_expr(G(), r, p), atol=1e-13)
    np.testing.assert_allclose(eval_expr(apply_sigma(J0), r, p),
                               2 / (p.q - 1) * np.eye(4) - r.j0, atol=1e-13)


def test_antipode_on_ladders(p):
    assert apply_antipode(JP, 1, -1, p) == Scale(-p.q, JP)
    assert apply_antipode(JM, 1, 1, p) == Scale(-1 / p.q, JM)
    assert apply_antipode_inverse(JP, 1, 1, p) == Scale(-1 / p.q, JP)


def test_antipode_reverses_products(p):
    a, b = G(), JP
    assert apply_antipode(Prod((a, b)), 1, 1, p) == Prod((apply_antipode(b, 1, 1, p), apply_antipode(a, 1, 1, p)))


@pytest.mark.parametrize("N", range(6))
@pytest.mark.parametrize("delta", [1, -1])
def test_equal_colour_antipode_of_J0(p, N, delta):
    # (1 - G^-1)/(q - 1) = -J0 G^-1
    r = dqa_rep(N, delta, p)
    lhs = eval_expr(apply_antipode(J0, delta, delta, p), r, p)
    rhs = -r.j0 @ np.diag(1 / qfunc.G_fn(r.j0diag, p))
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_suq2_antipode(p):
    r = suq2_rep(2, p)
    np.testing.assert_allclose(eval_expr(apply_antipode_suq2(J0, p), r, p), -r.j0)
    assert apply_antipode_suq2(JP, p) == Scale(-p.q, JP)


def test_log_domain_and_malformed(p):
    plus = dqa_rep(2, 1, p)
    with pytest.raises(LogDomainError):
        eval_expr(G_pow(-1, 0.5), plus, p)
    with pytest.raises(LogDomainError):
        eval_expr(FnOfJ0("logqG", (-1.0,)), plus, p)
    np.testing.assert_allclose(eval_expr(FnOfJ0("logqG", (1.0,)), plus, p),
                               -np.diag(qfunc.su_weights(2)), atol=1e-12)
    with pytest.raises(MalformedExpr):
        eval_expr(FnOfJ0("bessel"), plus, p)
    with pytest.raises(MalformedExpr):
        eval_expr("J0", plus, p)
    with pytest.raises(MalformedExpr):
        eval_expr(Prod(()), plus, p)


def test_lagrange_projectors_resolve_identity(p):
    r = dqa_rep(3, -1, p)
    nodes = r.j0diag
    total = sum(eval_expr(lagrange(nodes, k), r, p) for k in range(4))
    np.testing.assert_allclose(total, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(eval_expr(lagrange(nodes, 2), r, p), np.diag([0, 0, 1.0, 0]), atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(e=exprs, q=st.sampled_from([0.5, 0.8]), delta=st.sampled_from([1, -1]))
def test_sigma_is_an_involutive_homomorphism(e, q, delta):
    p = QParams(q)
    r = dqa_rep(2, delta, p)
    np.testing.assert_allclose(eval_expr(apply_sigma(apply_sigma(e)), r, p), eval_expr(e, r, p),
                               rtol=1e-9, atol=1e-9)


@settings(max_examples=60, deadline=None)
@given(a=exprs, b=exprs, s=st.sampled_from([(1, 1), (1, -1), (-1, 1)]), delta=st.sampled_from([1, -1]))
def test_antipode_is_an_antihomomorphism(a, b, s, delta):
    p = QParams(0.5)
    r = dqa_rep(2, delta, p)
    lhs = eval_expr(apply_antipode(Prod((a, b)), *s, p), r, p)
    rhs = eval_expr(apply_antipode(b, *s, p), r, p) @ eval_expr(apply_antipode(a, *s, p), r, p)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-9, atol=1e-9)


@settings(max_examples=60, deadline=None)
@given(e=exprs, s=st.sampled_from([(1, 1), (1, -1), (-1, -1)]), delta=st.sampled_from([1, -1]))
def test_antipode_inverse_undoes_antipode(e, s, delta):
    p = QParams(0.8)
    r = dqa_rep(3, delta, p)
    back = apply_antipode_inverse(apply_antipode(e, *s, p), *s, p)
    np.testing.assert_allclose(eval_expr(back, r, p), eval_expr(e, r, p), rtol=1e-9, atol=1e-9)
