"""Scalar q-arithmetic and the structure functions of A_q^+(1).

Everything here is a pure function of its arguments. Functions of a real
variable ``z`` accept scalars or numpy arrays and broadcast elementwise.

The linear model has ``G(z) = 1 + (1-q) z``, which vanishes at the singular
point ``z* = 1/(q-1)``. The two deforming functionals

    p_delta(z) = (1 - delta q^{-z}) / (q - 1),    delta = +1 or -1,

map the su_q(2) weight ``z`` onto the two sides of ``z*``, and both satisfy
``G(p_delta(z)) = delta q^{-z}``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EmptySampleSet, SingularPoint
from .report import CheckReport, finish, max_abs

__all__ = [
    "QParams", "check_colour", "COLOURS",
    "q_number", "q_factorial", "G_fn", "p_delta", "g_inverse", "F_fn", "H_fn",
    "sigma_scalar", "antipode_scalar", "singular_point",
    "spectrum", "su_weights", "extrema", "casimir_value",
    "default_grid", "check_p_equation", "check_consistency_FGH", "check_inverse_pair",
]

COLOURS = (1, -1)


@dataclass(frozen=True)
class QParams:
    """Deformation parameter ``q`` in (0, 1) and the numeric tolerance."""
    q: float
    tol: float = 1e-10

    def __post_init__(self):
        q = float(self.q)
        if not (0.0 < q < 1.0) or not math.isfinite(q):
            raise ConfigError(f"q must lie in the open interval (0, 1), got {self.q!r}")
        if not (self.tol > 0.0):
            raise ConfigError(f"tol must be positive, got {self.tol!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "tol", float(self.tol))

    def with_tol(self, tol: float) -> "QParams":
        return QParams(self.q, tol)


def check_colour(c) -> int:
    """Validate a colour and return it as a plain ``int``."""
    if c not in (1, -1):
        raise ValueError(f"colour must be +1 or -1, got {c!r}")
    return int(c)


def _out(x):
    x = np.asarray(x, dtype=float)
    return x[()] if x.ndim == 0 else x


def q_number(x, p: QParams):
    """[x]_q = (q^x - q^-x) / (q - q^-1)."""
    q = p.q
    x = np.asarray(x, dtype=float)
    return _out((q ** x - q ** (-x)) / (q - 1.0 / q))


def q_factorial(n: int, p: QParams) -> float:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return float(math.prod(float(q_number(k, p)) for k in range(1, n + 1)))


def singular_point(p: QParams) -> float:
    return 1.0 / (p.q - 1.0)


def G_fn(z, p: QParams):
    return _out(1.0 + (1.0 - p.q) * np.asarray(z, dtype=float))


def _G_checked(z, p: QParams):
    z = np.asarray(z, dtype=float)
    g = 1.0 + (1.0 - p.q) * z
    if np.any(np.abs(g) < p.tol * (1.0 + np.abs(z))):
        raise SingularPoint(f"G vanishes at z = {singular_point(p):.17g}")
    return g


def p_delta(z, delta: int, p: QParams):
    delta = check_colour(delta)
    q = p.q
    return _out((1.0 - delta * q ** (-np.asarray(z, dtype=float))) / (q - 1.0))


def g_inverse(z, p: QParams):
    """Common inverse of both p_delta: ln(G(z)^2) / ln(q^-2)."""
    g = _G_checked(z, p)
    return _out(np.log(g * g) / np.log(p.q ** -2))


def F_fn(z, p: QParams):
    q = p.q
    g2 = _G_checked(z, p) ** 2
    return _out(-(g2 - 1.0 / g2) / (q - 1.0 / q))


def H_fn(z, p: QParams):
    q = p.q
    g2 = _G_checked(z, p) ** 2
    return _out((g2 / q + q / g2 - q - 1.0 / q) / (q - 1.0 / q) ** 2)


def sigma_scalar(z, p: QParams):
    """The involution sigma on J0 eigenvalues: z -> 2/(q-1) - z."""
    return _out(2.0 / (p.q - 1.0) - np.asarray(z, dtype=float))


def antipode_scalar(z, s: int, p: QParams):
    """Scalar image of J0 under the antipode with colour product ``s``.

    z -> (1 - s / G(z)) / (q - 1). The map is an involution for either ``s``.
    """
    g = _G_checked(z, p)
    return _out((1.0 - s / g) / (p.q - 1.0))


def su_weights(N: int) -> np.ndarray:
    """su_q(2) weights N/2 - n for n = 0..N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return N / 2.0 - np.arange(N + 1, dtype=float)


def spectrum(N: int, delta: int, p: QParams) -> np.ndarray:
    """J0 eigenvalues of the (N+1)-dimensional unirrep of colour ``delta``, n ascending."""
    delta = check_colour(delta)
    if N < 0:
        raise ValueError("N must be nonnegative")
    n = np.arange(N + 1, dtype=float)
    return (1.0 - delta * p.q ** (-(N - 2.0 * n) / 2.0)) / (p.q - 1.0)


def extrema(N: int, delta: int, p: QParams) -> tuple[float, float]:
    """Return ``(Jmax, negJmin)``, the largest and smallest J0 eigenvalues."""
    delta = check_colour(delta)
    q = p.q
    jmax = (1.0 - delta * q ** (-delta * N / 2.0)) / (q - 1.0)
    neg_jmin = (1.0 - delta * q ** (delta * N / 2.0)) / (q - 1.0)
    return float(jmax), float(neg_jmin)


def casimir_value(N: int, delta: int, p: QParams) -> float:
    """Casimir eigenvalue H(gamma) with gamma = p_delta(N/2)."""
    gamma = (1.0 - check_colour(delta) * p.q ** (-N / 2.0)) / (p.q - 1.0)
    return float(H_fn(gamma, p))


def default_grid(p: QParams, n: int = 41, lo: float = -5.0, hi: float = 5.0) -> np.ndarray:
    """Equally spaced samples in [lo, hi] with the singular point removed."""
    z = np.linspace(lo, hi, n)
    zs = singular_point(p)
    return z[np.abs(z - zs) > 1e-9 * (1.0 + abs(zs))]


def _samples(samples, p):
    if samples is None:
        return default_grid(p)
    s = np.atleast_1d(np.asarray(samples, dtype=float))
    if s.size == 0:
        raise EmptySampleSet("no sample points given")
    return s


def check_p_equation(delta: int, p: QParams, samples=None) -> CheckReport:
    """Residual of p(z) - p(z-1) = G(p(z)) over the samples."""
    t0 = time.perf_counter()
    z = _samples(samples, p)
    pz = p_delta(z, delta, p)
    res = max_abs(pz - p_delta(z - 1.0, delta, p) - G_fn(pz, p))
    return finish("p_equation", res, p.tol, t0, q=p.q, colours=[delta], n_samples=int(z.size))


def check_consistency_FGH(p: QParams, samples=None) -> CheckReport:
    """Residual of H(z) - H(z - G(z)) = F(z); raises SingularPoint on z = 1/(q-1)."""
    t0 = time.perf_counter()
    z = _samples(samples, p)
    res = max_abs(H_fn(z, p) - H_fn(z - G_fn(z, p), p) - F_fn(z, p))
    return finish("FGH_consistency", res, p.tol, t0, q=p.q, n_samples=int(z.size))


def check_inverse_pair(delta: int, p: QParams, samples=None) -> CheckReport:
    """Residual of g(p_delta(z)) = z."""
    t0 = time.perf_counter()
    z = _samples(samples, p)
    res = max_abs(g_inverse(p_delta(z, delta, p), p) - z)
    return finish("inverse_pair", res, p.tol, t0, q=p.q, colours=[delta], n_samples=int(z.size))
