"""Universal R-matrices of su_q(2) and the coloured R^{zeta,eta} of A_q^+(1).

Both are evaluated on tensor products of representations as

    R = D * sum_n c_n q^{n(n-1)/2} X^n,    c_n = (1 - q^-2)^n / [n]_q!

with D diagonal. For su_q(2), D = q^{2 j0 x j0} and X = q^{j0} j+ x q^{-j0} j-.
For the coloured matrix, with L = log_q(zeta G(J0)) on the left leg and
L' = log_q(eta G(J0)) on the right, D = q^{2 L x L'} and
X = (zeta G)^-1 J+ x eta G J-. The series stops by exact nilpotency of X.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import qfunc
from .errors import DegenerateSpectrum, LogDomainError, SeriesTruncationError
from .expr import JM, JP, Prod, Scale, G, G_pow, apply_antipode, apply_antipode_inverse, \
    apply_sigma_delta, eval_expr, lagrange
from .hopf import coproduct_rep, opposite_coproduct_rep
from .qfunc import QParams, check_colour
from .report import CheckReport, finish, max_abs
from .reps import Algebra, GeneratorRep, GENERATORS, dqa_rep, suq2_rep, transmutation, transmute, twist

__all__ = [
    "RMatrixSpec", "r_su", "r_coloured", "log_exponent", "embed", "r_decomposition",
    "check_r_matches_su", "check_colour_flip", "check_intertwiner", "check_fusion",
    "check_cybe", "check_counit_r", "check_antipode_r",
]


@dataclass(frozen=True)
class RMatrixSpec:
    colour_left: int = 1
    colour_right: int = 1
    algebra: Algebra = Algebra.DQA

    def __post_init__(self):
        check_colour(self.colour_left)
        check_colour(self.colour_right)
        object.__setattr__(self, "algebra", Algebra(self.algebra))

    @property
    def colours(self) -> tuple[int, int]:
        return (self.colour_left, self.colour_right)


def _as_spec(spec) -> RMatrixSpec:
    if isinstance(spec, RMatrixSpec):
        return spec
    return RMatrixSpec(*spec)


def _series(prefactor: np.ndarray, X: np.ndarray, cap: int, p: QParams) -> tuple[np.ndarray, int]:
    """D * sum_n c_n q^{n(n-1)/2} X^n; returns the matrix and the number of nonzero terms."""
    q = p.q
    total = np.eye(X.shape[0])
    power = np.eye(X.shape[0])
    n = 0
    while True:
        n += 1
        power = power @ X
        if not power.any():
            break
        if n > cap:
            raise SeriesTruncationError(f"series still nonzero at order {n} (cap {cap})")
        c = (1.0 - q ** -2) ** n / qfunc.q_factorial(n, p) * q ** (n * (n - 1) / 2.0)
        total = total + c * power
    return prefactor[:, None] * total, n


def r_su(left: GeneratorRep, right: GeneratorRep, p: QParams, return_order: bool = False):
    """su_q(2) universal R-matrix on ``left (x) right``."""
    q = p.q
    wl, wr = left.j0diag, right.j0diag
    prefactor = q ** (2.0 * np.kron(wl, wr))
    X = np.kron((q ** wl)[:, None] * left.jplus, (q ** -wr)[:, None] * right.jminus)
    R, order = _series(prefactor, X, left.dim + right.dim, p)
    return (R, order) if return_order else R


def log_exponent(colour: int, j0diag, p: QParams) -> np.ndarray:
    """log_q(colour G(m)) for each eigenvalue m; LogDomainError when colour G(m) <= 0."""
    base = check_colour(colour) * qfunc.G_fn(np.asarray(j0diag, dtype=float), p)
    if np.any(base <= 0.0):
        raise LogDomainError(f"log_q({colour:+d} G) undefined on part of the spectrum")
    return np.log(base) / np.log(p.q)


def r_coloured(spec, left: GeneratorRep, right: GeneratorRep, p: QParams, return_order: bool = False):
    """Coloured R-matrix R^{zeta,eta} on ``left (x) right``."""
    spec = _as_spec(spec)
    if spec.algebra == Algebra.SUQ2:
        return r_su(left, right, p, return_order)
    zeta, eta = spec.colours
    L = log_exponent(zeta, left.j0diag, p)
    Lr = log_exponent(eta, right.j0diag, p)
    prefactor = np.exp(2.0 * np.log(p.q) * np.kron(L, Lr))
    gl = zeta * qfunc.G_fn(left.j0diag, p)
    gr = eta * qfunc.G_fn(right.j0diag, p)
    X = np.kron((1.0 / gl)[:, None] * left.jplus, gr[:, None] * right.jminus)
    R, order = _series(prefactor, X, left.dim + right.dim, p)
    return (R, order) if return_order else R


def embed(R: np.ndarray, dims: tuple[int, int, int], legs: str) -> np.ndarray:
    """Place a two-leg matrix on legs "12", "13" or "23" of V1 x V2 x V3."""
    d1, d2, d3 = dims
    if legs == "12":
        return np.kron(R, np.eye(d3))
    if legs == "23":
        return np.kron(np.eye(d1), R)
    if legs == "13":
        r = R.reshape(d1, d3, d1, d3)
        out = np.einsum("acbd,ef->aecbfd", r, np.eye(d2))
        return out.reshape(d1 * d2 * d3, d1 * d2 * d3)
    raise ValueError(f"legs must be '12', '13' or '23', got {legs!r}")


def check_r_matches_su(delta: int, N1: int, N2: int, p: QParams) -> CheckReport:
    """R^{delta,delta} on colour-delta irreps against the su_q(2) R-matrix on the underlying irreps."""
    t0 = time.perf_counter()
    a, b = dqa_rep(N1, delta, p), dqa_rep(N2, delta, p)
    Rc, order = r_coloured((delta, delta), a, b, p, return_order=True)
    res = max_abs(Rc - r_su(suq2_rep(N1, p), suq2_rep(N2, p), p))
    # a series that stopped later than min(N1, N2) + 1 points at a broken ladder
    if order != min(N1, N2) + 1:
        res = float("inf")
    return finish("r_matches_su", res, p.tol, t0, q=p.q, N=[N1, N2], colours=[delta])


def _flip(rep: GeneratorRep, target: int, p: QParams) -> GeneratorRep:
    return rep if rep.colour == target else transmute(rep, p)


def check_colour_flip(spec_from, spec_to, left: GeneratorRep, right: GeneratorRep,
                      p: QParams) -> CheckReport:
    """(sigma_{mu zeta} x sigma_{nu eta})(R^{zeta,eta}) = R^{mu,nu}.

    The sigma substitution on each flipped leg is realized by conjugation
    with the transmutation operator (the identity matrix in this basis).
    """
    t0 = time.perf_counter()
    src, dst = _as_spec(spec_from), _as_spec(spec_to)
    (zeta, eta), (mu, nu) = src.colours, dst.colours
    R = r_coloured(src, left, right, p)
    tl = transmutation(left.dim - 1, zeta) if mu != zeta else np.eye(left.dim)
    tr = transmutation(right.dim - 1, eta) if nu != eta else np.eye(right.dim)
    T = np.kron(tl, tr)
    lhs = T @ R @ np.linalg.inv(T)
    left_t = left if mu == zeta else transmute(left, p)
    right_t = right if nu == eta else transmute(right, p)
    res = max_abs(lhs - r_coloured(dst, left_t, right_t, p))
    return finish("colour_flip", res, p.tol, t0, q=p.q, N=[left.dim - 1, right.dim - 1],
                  colours=[zeta, eta, mu, nu])


def check_intertwiner(zeta: int, eta: int, delta: int, left: GeneratorRep, right: GeneratorRep,
                      p: QParams, r_matrix: np.ndarray | None = None) -> CheckReport:
    """tau o Delta^{eta,zeta}_delta = R^{zeta,eta} Delta^{zeta,eta}_delta (R^{zeta,eta})^-1.

    ``r_matrix`` replaces the computed R (negative controls).
    """
    t0 = time.perf_counter()
    R = r_coloured((zeta, eta), left, right, p) if r_matrix is None else r_matrix
    Rinv = np.linalg.inv(R)
    op = opposite_coproduct_rep(zeta, eta, delta, left, right, p)
    cop = coproduct_rep(zeta, eta, delta, left, right, p)
    res = max(max_abs(op.image(g) - R @ cop.image(g) @ Rinv) for g in GENERATORS)
    return finish("intertwiner", res, p.tol * cop.dim, t0, q=p.q, N=[left.dim - 1, right.dim - 1],
                  colours=[zeta, eta, delta])


def check_fusion(lam: int, mu: int, zeta: int, nu: int, eta: int, rep_a: GeneratorRep,
                 rep_b: GeneratorRep, rep_c: GeneratorRep, p: QParams) -> CheckReport:
    """Both fusion laws of the coloured R-matrix on A x B x C (colours lam, mu, nu).

    (Delta^{lam,mu}_zeta x sigma_{nu eta})(R^{zeta,eta}) = R^{lam,nu}_13 R^{mu,nu}_23
    (sigma_{lam zeta} x Delta^{mu,nu}_eta)(R^{zeta,eta}) = R^{lam,nu}_13 R^{lam,mu}_12
    """
    t0 = time.perf_counter()
    lam, mu, zeta, nu, eta = (check_colour(c) for c in (lam, mu, zeta, nu, eta))
    dims = (rep_a.dim, rep_b.dim, rep_c.dim)
    r_ac = embed(r_coloured((lam, nu), rep_a, rep_c, p), dims, "13")
    lhs_left = r_coloured((zeta, eta), coproduct_rep(lam, mu, zeta, rep_a, rep_b, p),
                          twist(rep_c, nu * eta, p), p)
    rhs_left = r_ac @ embed(r_coloured((mu, nu), rep_b, rep_c, p), dims, "23")
    lhs_right = r_coloured((zeta, eta), twist(rep_a, lam * zeta, p),
                           coproduct_rep(mu, nu, eta, rep_b, rep_c, p), p)
    rhs_right = r_ac @ embed(r_coloured((lam, mu), rep_a, rep_b, p), dims, "12")
    res = max(max_abs(lhs_left - rhs_left), max_abs(lhs_right - rhs_right))
    return finish("fusion", res, p.tol * int(np.prod(dims)), t0, q=p.q, N=[d - 1 for d in dims],
                  colours=[lam, mu, zeta, nu, eta])


def check_cybe(zeta: int, eta: int, mu: int, rep1: GeneratorRep, rep2: GeneratorRep,
               rep3: GeneratorRep, p: QParams) -> CheckReport:
    """R^{zeta,eta}_12 R^{zeta,mu}_13 R^{eta,mu}_23 = R^{eta,mu}_23 R^{zeta,mu}_13 R^{zeta,eta}_12."""
    t0 = time.perf_counter()
    dims = (rep1.dim, rep2.dim, rep3.dim)
    r12 = embed(r_coloured((zeta, eta), rep1, rep2, p), dims, "12")
    r13 = embed(r_coloured((zeta, mu), rep1, rep3, p), dims, "13")
    r23 = embed(r_coloured((eta, mu), rep2, rep3, p), dims, "23")
    res = max_abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)
    return finish("coloured_ybe", res, p.tol * int(np.prod(dims)), t0, q=p.q,
                  N=[d - 1 for d in dims], colours=[zeta, eta, mu])


def check_counit_r(zeta: int, eta: int, right: GeneratorRep, p: QParams,
                   left: GeneratorRep | None = None) -> CheckReport:
    """(eps_zeta x id)(R^{zeta,eta}) = 1 and (id x eps_eta)(R^{zeta,eta}) = 1.

    ``right`` has colour eta; ``left`` (colour zeta) defaults to the irrep of
    colour zeta with the dimension of ``right``.
    """
    t0 = time.perf_counter()
    zeta, eta = check_colour(zeta), check_colour(eta)
    if left is None:
        left = dqa_rep(right.dim - 1, zeta, p)
    a = r_coloured((zeta, eta), dqa_rep(0, zeta, p), right, p)
    b = r_coloured((zeta, eta), left, dqa_rep(0, eta, p), p)
    res = max(max_abs(a - np.eye(right.dim)), max_abs(b - np.eye(left.dim)))
    return finish("counit_r", res, p.tol, t0, q=p.q, N=[left.dim - 1, right.dim - 1],
                  colours=[zeta, eta])


def r_decomposition(zeta: int, eta: int, left: GeneratorRep, right: GeneratorRep, p: QParams,
                    atol: float = 1e-12) -> list:
    """R^{zeta,eta} on ``left (x) right`` as a list of (left Expr, right Expr) pairs.

    The diagonal prefactor is split with Lagrange projectors P_k(J0) onto the
    left eigenvalues: q^{2 L x L'} = sum_k P_k x (eta G)^{2 L_k}. The left
    spectrum must be simple.
    """
    zeta, eta = check_colour(zeta), check_colour(eta)
    nodes = np.asarray(left.j0diag, dtype=float)
    if nodes.size > 1:
        gaps = np.abs(nodes[:, None] - nodes[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() <= atol * (1.0 + np.abs(nodes).max()):
            raise DegenerateSpectrum("left leg has repeated J0 eigenvalues")
    L = log_exponent(zeta, nodes, p)
    q = p.q
    x = Prod((G_pow(zeta, -1.0), JP))
    y = Scale(float(eta), Prod((G(), JM)))
    terms = []
    for n in range(min(left.dim, right.dim)):
        c = (1.0 - q ** -2) ** n / qfunc.q_factorial(n, p) * q ** (n * (n - 1) / 2.0)
        for k in range(nodes.size):
            a = Prod((lagrange(nodes, k),) + (x,) * n)
            b = Prod((G_pow(eta, 2.0 * L[k]),) + (y,) * n)
            terms.append((Scale(c, a), b))
    return terms


def _evaluate_terms(terms, left, right, p):
    return sum(np.kron(eval_expr(a, left, p), eval_expr(b, right, p)) for a, b in terms)


def check_antipode_r(lam: int, mu: int, zeta: int, eta: int, left: GeneratorRep,
                     right: GeneratorRep, p: QParams) -> CheckReport:
    """(S^lam_zeta x sigma_{mu eta})(R^{zeta,eta}) = (R^{lam,mu})^-1, and the mirror
    (sigma_{lam zeta} x (S^mu_eta)^-1)(R^{zeta,eta}) R^{lam,mu} = 1.

    ``left`` and ``right`` are irreps of colours zeta and eta. Both sides are
    evaluated on the companions of colours lam and mu. The residual also
    includes the reconstruction error of the decomposition itself.
    """
    t0 = time.perf_counter()
    lam, mu, zeta, eta = (check_colour(c) for c in (lam, mu, zeta, eta))
    terms = r_decomposition(zeta, eta, left, right, p)
    res = max_abs(_evaluate_terms(terms, left, right, p) - r_coloured((zeta, eta), left, right, p))
    tl, tr = _flip(left, lam, p), _flip(right, mu, p)
    r_target = r_coloured((lam, mu), tl, tr, p)
    first = [(apply_antipode(a, lam, zeta, p), apply_sigma_delta(b, mu * eta)) for a, b in terms]
    res = max(res, max_abs(_evaluate_terms(first, tl, tr, p) - np.linalg.inv(r_target)))
    mirror = [(apply_sigma_delta(a, lam * zeta), apply_antipode_inverse(b, mu, eta, p)) for a, b in terms]
    eye = np.eye(r_target.shape[0])
    res = max(res, max_abs(_evaluate_terms(mirror, tl, tr, p) @ r_target - eye))
    return finish("antipode_r", res, p.tol * r_target.shape[0], t0, q=p.q,
                  N=[left.dim - 1, right.dim - 1], colours=[lam, mu, zeta, eta])
