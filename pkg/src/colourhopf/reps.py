"""Unitary irreducible representations of su_q(2) and A_q^+(1).

A representation is carried by :class:`GeneratorRep`: the diagonal of the
J0 image plus dense J+ and J- matrices. Basis index ``n`` runs from 0 to N;
J+ sends ``n`` to ``n-1`` and J- sends ``n`` to ``n+1`` for both algebras,
so the colour-(+1) and colour-(-1) unirreps of the same dimension share
their ladder matrices and differ only in the J0 spectrum.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

import numpy as np

from . import qfunc
from .qfunc import QParams, check_colour
from .report import CheckReport, finish, max_abs

__all__ = [
    "Algebra", "GENERATORS", "RepLabel", "GeneratorRep",
    "suq2_rep", "dqa_rep", "dqa_rep_via_map", "a_module_amplitudes", "ladder_amplitudes",
    "check_commutators", "casimir_matrix", "check_casimir",
    "transmutation", "transmute", "twist", "check_transmutation",
    "image_difference", "perturbed",
]

GENERATORS = ("J0", "Jp", "Jm")


class Algebra(str, Enum):
    SUQ2 = "SUQ2"
    DQA = "DQA"


@dataclass(frozen=True)
class RepLabel:
    algebra: Algebra
    N: int
    colour: int | None = None

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        if self.algebra == Algebra.SUQ2 and self.colour is not None:
            raise ValueError("su_q(2) unirreps carry no colour")
        if self.algebra == Algebra.DQA:
            check_colour(self.colour)

    @property
    def dim(self) -> int:
        return self.N + 1


@dataclass(frozen=True, eq=False)
class GeneratorRep:
    """Images of (J0, J+, J-) on a concrete basis; J0 is always diagonal."""
    j0diag: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return int(self.j0diag.shape[0])

    @property
    def colour(self) -> int | None:
        return self.meta.get("colour")

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.meta.get("algebra", Algebra.DQA))

    @property
    def j0(self) -> np.ndarray:
        return np.diag(self.j0diag)

    def image(self, gen: str) -> np.ndarray:
        if gen == "J0":
            return self.j0
        if gen == "Jp":
            return self.jplus
        if gen == "Jm":
            return self.jminus
        raise KeyError(gen)

    def to_dict(self) -> dict[str, Any]:
        meta = {k: (v.value if isinstance(v, Enum) else v) for k, v in self.meta.items()}
        return {"dim": self.dim, "j0diag": self.j0diag.tolist(),
                "jplus": self.jplus.tolist(), "jminus": self.jminus.tolist(), "meta": meta}


def ladder_amplitudes(N: int, p: QParams) -> np.ndarray:
    """sqrt([n]_q [N-n+1]_q) for n = 1..N, the J+ amplitude from state n to n-1."""
    n = np.arange(1, N + 1, dtype=float)
    return np.sqrt(qfunc.q_number(n, p) * qfunc.q_number(N - n + 1, p))


def _ladder(N: int, amps: np.ndarray):
    d = N + 1
    jp = np.zeros((d, d))
    if N:
        jp[np.arange(N), np.arange(1, d)] = amps
    return jp, jp.T.copy()


def suq2_rep(N: int, p: QParams) -> GeneratorRep:
    if N < 0:
        raise ValueError("N must be nonnegative")
    jp, jm = _ladder(N, ladder_amplitudes(N, p))
    return GeneratorRep(qfunc.su_weights(N), jp, jm,
                        {"algebra": Algebra.SUQ2, "N": N, "colour": None, "path": f"suq2({N})"})


def dqa_rep(N: int, delta: int, p: QParams) -> GeneratorRep:
    delta = check_colour(delta)
    if N < 0:
        raise ValueError("N must be nonnegative")
    jp, jm = _ladder(N, ladder_amplitudes(N, p))
    return GeneratorRep(qfunc.spectrum(N, delta, p), jp, jm,
                        {"algebra": Algebra.DQA, "N": N, "colour": delta,
                         "path": f"dqa({N},{delta:+d})"})


def a_module_amplitudes(N: int, delta: int, p: QParams) -> tuple[np.ndarray, np.ndarray]:
    """Ladder amplitudes written through the Casimir function H.

    Returns ``(up, down)`` where ``up[n-1] = sqrt(H(gamma) - H(m_n))`` is the
    J+ amplitude out of state n (n = 1..N) and ``down[n] = sqrt(H(gamma) -
    H(q m_n - 1))`` the J- amplitude out of state n (n = 0..N-1).
    """
    m = qfunc.spectrum(N, delta, p)
    gamma = qfunc.p_delta(N / 2.0, delta, p)
    h_top = qfunc.H_fn(gamma, p)
    up = np.sqrt(np.clip(h_top - qfunc.H_fn(m[1:], p), 0.0, None))
    down = np.sqrt(np.clip(h_top - qfunc.H_fn(p.q * m[:-1] - 1.0, p), 0.0, None))
    return up, down


def dqa_rep_via_map(N: int, delta: int, p: QParams) -> GeneratorRep:
    """Push suq2_rep(N) through J0 = p_delta(j0), J+- = j+-."""
    base = suq2_rep(N, p)
    return GeneratorRep(qfunc.p_delta(base.j0diag, delta, p), base.jplus.copy(), base.jminus.copy(),
                        {"algebra": Algebra.DQA, "N": N, "colour": check_colour(delta),
                         "path": f"map(suq2({N}),{delta:+d})"})


def _comm(a, b):
    return a @ b - b @ a


def commutator_residual(rep: GeneratorRep, algebra: Algebra | str, p: QParams) -> float:
    algebra = Algebra(algebra)
    J0, Jp, Jm = rep.j0, rep.jplus, rep.jminus
    if algebra == Algebra.DQA:
        Gd = np.diag(qfunc.G_fn(rep.j0diag, p))
        r = (_comm(J0, Jp) - Gd @ Jp,
             _comm(J0, Jm) + Jm @ Gd,
             _comm(Jp, Jm) - np.diag(qfunc.F_fn(rep.j0diag, p)))
    else:
        r = (_comm(J0, Jp) - Jp,
             _comm(J0, Jm) + Jm,
             _comm(Jp, Jm) - np.diag(qfunc.q_number(2.0 * rep.j0diag, p)))
    return max(max_abs(x) for x in r)


def check_commutators(rep: GeneratorRep, algebra: Algebra | str, p: QParams) -> CheckReport:
    """Defining relations of the algebra; passes when the residual is below tol*dim."""
    t0 = time.perf_counter()
    res = commutator_residual(rep, algebra, p)
    return finish("commutators", res, p.tol * rep.dim, t0, q=p.q,
                  algebra=Algebra(algebra).value, rep=rep.meta.get("path"))


def casimir_matrix(rep: GeneratorRep, algebra: Algebra | str, p: QParams, form: int = 1) -> np.ndarray:
    """C = J- J+ + H(J0) (form 1) or J+ J- + H(J0) - F(J0) (form 2)."""
    algebra = Algebra(algebra)
    z = rep.j0diag
    if algebra == Algebra.DQA:
        h, f = qfunc.H_fn(z, p), qfunc.F_fn(z, p)
    else:
        h = qfunc.q_number(z, p) * qfunc.q_number(z + 1.0, p)
        f = qfunc.q_number(2.0 * z, p)
    if form == 1:
        return rep.jminus @ rep.jplus + np.diag(h)
    if form == 2:
        return rep.jplus @ rep.jminus + np.diag(h - f)
    raise ValueError("form must be 1 or 2")


def check_casimir(rep: GeneratorRep, algebra: Algebra | str, N: int, p: QParams) -> CheckReport:
    """Both Casimir forms equal [N/2]_q [N/2+1]_q times the identity."""
    t0 = time.perf_counter()
    expected = float(qfunc.q_number(N / 2.0, p) * qfunc.q_number(N / 2.0 + 1.0, p))
    eye = np.eye(rep.dim)
    res = max(max_abs(casimir_matrix(rep, algebra, p, form) - expected * eye) for form in (1, 2))
    return finish("casimir", res, p.tol * rep.dim, t0, q=p.q, N=[N],
                  algebra=Algebra(algebra).value, rep=rep.meta.get("path"))


def transmutation(N: int, delta: int) -> np.ndarray:
    """Basis map V^{J^delta} -> V^{J^-delta}; state n goes to state n."""
    check_colour(delta)
    return np.eye(N + 1)


def transmute(rep: GeneratorRep, p: QParams) -> GeneratorRep:
    """Companion unirrep of opposite colour, obtained as T Phi(sigma(A)) T^-1."""
    N = rep.meta.get("N", rep.dim - 1)
    colour = check_colour(rep.colour)
    T = transmutation(N, colour)
    Tinv = transmutation(N, -colour)
    j0 = T @ np.diag(qfunc.sigma_scalar(rep.j0diag, p)) @ Tinv
    meta = dict(rep.meta, colour=-colour, path=f"T({rep.meta.get('path')})")
    return GeneratorRep(np.diag(j0).copy(), T @ rep.jplus @ Tinv, T @ rep.jminus @ Tinv, meta)


def twist(rep: GeneratorRep, s: int, p: QParams) -> GeneratorRep:
    """The representation A -> Phi(sigma_s(A)); identity for s = +1."""
    if check_colour(s) == 1:
        return rep
    meta = dict(rep.meta, path=f"sigma({rep.meta.get('path')})")
    if rep.colour is not None:
        meta["colour"] = -rep.colour
    return GeneratorRep(qfunc.sigma_scalar(rep.j0diag, p), rep.jplus, rep.jminus, meta)


def check_transmutation(N: int, delta: int, p: QParams) -> CheckReport:
    """T^{-delta} T^{delta} = I and T Phi^delta(A) T^-1 = Phi^{-delta}(sigma(A))."""
    t0 = time.perf_counter()
    T = transmutation(N, delta)
    Tinv = transmutation(N, -delta)
    res = max_abs(Tinv @ T - np.eye(N + 1))
    src = dqa_rep(N, delta, p)
    dst = dqa_rep(N, -delta, p)
    sigma_j0 = np.diag(qfunc.sigma_scalar(dst.j0diag, p))
    res = max(res,
              max_abs(T @ src.j0 @ Tinv - sigma_j0),
              max_abs(T @ src.jplus @ Tinv - dst.jplus),
              max_abs(T @ src.jminus @ Tinv - dst.jminus))
    return finish("transmutation", res, p.tol, t0, q=p.q, N=[N], colours=[delta])


def image_difference(a: GeneratorRep, b: GeneratorRep) -> float:
    """Largest entrywise difference over the three generator images."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch {a.dim} != {b.dim}")
    return max(max_abs(a.j0diag - b.j0diag), max_abs(a.jplus - b.jplus), max_abs(a.jminus - b.jminus))


def perturbed(rep: GeneratorRep, eps: float) -> GeneratorRep:
    """Copy of ``rep`` with ``eps`` added to the (0, 0) entry of the J0 image.

    Used for negative controls only.
    """
    if eps == 0.0:
        return rep
    j0 = rep.j0diag.copy()
    j0[0] += eps
    return replace(rep, j0diag=j0, meta=dict(rep.meta, perturbed=eps))
