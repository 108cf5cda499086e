"""Clebsch-Gordan (Wigner) coefficients for su_q(2) and A_q^+(1).

A :class:`CGTable` stores, for each admissible total N (descending), the
(N+1) x dim matrix whose row n is the coupled state |N, n> expanded in the
left-major product basis |n1> x |n2>. Highest-weight vectors come from the
kernel of the coupled J+ on the top eigenspace of the coupled J0; lower rows
follow by applying the coupled J- and dividing by sqrt([n+1]_q [N-n]_q).

Phase convention: the coefficient with the smallest n1 in every
highest-weight vector is positive.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from . import qfunc
from .errors import DegenerateKernel
from .hopf import coproduct_rep, suq2_coproduct_rep
from .qfunc import QParams, check_colour
from .report import CheckReport, finish, max_abs
from .reps import GENERATORS, GeneratorRep, dqa_rep, suq2_rep

__all__ = [
    "CGTable", "admissible_totals", "cg_from_coupled", "cg_suq2", "cg_dqa",
    "selection_mask", "check_selection_rule", "check_block_diagonalization",
    "check_orthonormality", "check_cg_equality",
]


@dataclass(frozen=True, eq=False)
class CGTable:
    N1: int
    N2: int
    q: float
    blocks: tuple  # ((N, matrix of shape (N+1, (N1+1)(N2+1))), ...), N descending

    def matrix(self) -> np.ndarray:
        """All coupled states stacked as rows; orthogonal when the table is correct."""
        return np.vstack([m for _, m in self.blocks])

    def block(self, N: int) -> np.ndarray:
        for n, m in self.blocks:
            if n == N:
                return m
        raise KeyError(N)

    def to_rows(self, atol: float = 0.0) -> list[tuple[int, int, int, int, float]]:
        """Flat (N, n, n1, n2, coefficient) records; entries with |c| <= atol are skipped."""
        d2 = self.N2 + 1
        rows = []
        for N, m in self.blocks:
            for n, row in enumerate(m):
                for idx, c in enumerate(row):
                    if abs(c) > atol or atol == 0.0:
                        rows.append((N, n, idx // d2, idx % d2, float(c)))
        return rows

    def to_csv(self, atol: float = 0.0) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "n", "n1", "n2", "coefficient"])
        for N, n, n1, n2, c in self.to_rows(atol):
            w.writerow([N, n, n1, n2, repr(c)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"N1": self.N1, "N2": self.N2, "q": self.q,
                "blocks": [{"N": N, "coefficients": m.tolist()} for N, m in self.blocks]}


def admissible_totals(N1: int, N2: int) -> list[int]:
    """N1 + N2, N1 + N2 - 2, ..., |N1 - N2|."""
    if N1 < 0 or N2 < 0:
        raise ValueError("N1 and N2 must be nonnegative")
    return list(range(N1 + N2, abs(N1 - N2) - 1, -2))


def _highest_weight(coupled: GeneratorRep, top: float, tol: float) -> np.ndarray:
    idx = np.flatnonzero(np.abs(coupled.j0diag - top) < tol * (1.0 + abs(top)) * coupled.dim)
    if idx.size == 0:
        raise DegenerateKernel(f"no coupled states with J0 eigenvalue {top:.17g}")
    K = coupled.jplus[:, idx]
    _, s, vh = np.linalg.svd(K)
    rank = int(np.sum(s >= tol * coupled.dim))
    if idx.size - rank != 1:
        raise DegenerateKernel(f"raising-operator kernel has dimension {idx.size - rank}, expected 1")
    v = np.zeros(coupled.dim)
    v[idx] = vh[-1]
    lead = np.flatnonzero(np.abs(v) > 1e-8 * np.abs(v).max())[0]
    return v if v[lead] > 0 else -v


def cg_from_coupled(coupled: GeneratorRep, N1: int, N2: int, top_eigenvalue, p: QParams) -> CGTable:
    """Decompose a coupled representation of two irreps of sizes N1+1, N2+1.

    ``top_eigenvalue(N)`` gives the J0 eigenvalue of the highest state of
    the N block.
    """
    blocks = []
    for N in admissible_totals(N1, N2):
        rows = [_highest_weight(coupled, top_eigenvalue(N), p.tol)]
        for n in range(N):
            norm = np.sqrt(qfunc.q_number(n + 1, p) * qfunc.q_number(N - n, p))
            rows.append(coupled.jminus @ rows[-1] / norm)
        blocks.append((N, np.array(rows) + 0.0))  # + 0.0 clears negative zeros
    return CGTable(N1, N2, p.q, tuple(blocks))


def cg_suq2(N1: int, N2: int, p: QParams, left: GeneratorRep | None = None,
            right: GeneratorRep | None = None) -> CGTable:
    """su_q(2) Wigner coefficients; ``left``/``right`` override the irreps."""
    left = suq2_rep(N1, p) if left is None else left
    right = suq2_rep(N2, p) if right is None else right
    return cg_from_coupled(suq2_coproduct_rep(left, right, p), N1, N2, lambda N: N / 2.0, p)


def cg_dqa(N1: int, N2: int, zeta: int, eta: int, delta: int, p: QParams,
           left: GeneratorRep | None = None, right: GeneratorRep | None = None) -> CGTable:
    """Wigner coefficients of the coloured coupling of dqa irreps (colours zeta, eta) into colour delta."""
    zeta, eta, delta = check_colour(zeta), check_colour(eta), check_colour(delta)
    left = dqa_rep(N1, zeta, p) if left is None else left
    right = dqa_rep(N2, eta, p) if right is None else right
    coupled = coproduct_rep(zeta, eta, delta, left, right, p)
    return cg_from_coupled(coupled, N1, N2, lambda N: float(qfunc.spectrum(N, delta, p)[0]), p)


def selection_mask(N1: int, N2: int, N: int, zeta: int, eta: int, delta: int, p: QParams) -> np.ndarray:
    """Boolean (N+1) x dim mask of product states whose coupled J0 eigenvalue equals m^delta_n."""
    g1 = zeta * qfunc.G_fn(qfunc.spectrum(N1, zeta, p), p)
    g2 = eta * qfunc.G_fn(qfunc.spectrum(N2, eta, p), p)
    product = (1.0 - delta * np.kron(g1, g2)) / (p.q - 1.0)
    target = qfunc.spectrum(N, delta, p)
    return np.abs(product[None, :] - target[:, None]) < p.tol * (1.0 + np.abs(target[:, None]))


def _index_mask(N1: int, N2: int, N: int) -> np.ndarray:
    n1, n2 = np.divmod(np.arange((N1 + 1) * (N2 + 1)), N2 + 1)
    shift = (N1 + N2 - N) // 2
    return (n1 + n2)[None, :] == (np.arange(N + 1) + shift)[:, None]


def check_selection_rule(table: CGTable, zeta: int, eta: int, delta: int, p: QParams) -> CheckReport:
    """Coefficients vanish off the states allowed by the coupled-eigenvalue rule.

    The residual is the largest coefficient outside the allowed set. It is
    infinite when the allowed set differs from the index rule
    n1 + n2 = n + (N1 + N2 - N)/2, or when an allowed row is entirely zero.
    """
    t0 = time.perf_counter()
    res = 0.0
    for N, m in table.blocks:
        mask = selection_mask(table.N1, table.N2, N, zeta, eta, delta, p)
        if not np.array_equal(mask, _index_mask(table.N1, table.N2, N)):
            res = float("inf")
        res = max(res, max_abs(np.where(mask, 0.0, m)))
        if np.any(np.abs(np.where(mask, m, 0.0)).max(axis=1) <= p.tol):
            res = float("inf")
    return finish("selection_rule", res, p.tol, t0, q=p.q, N=[table.N1, table.N2],
                  colours=[zeta, eta, delta])


def check_orthonormality(table: CGTable, p: QParams) -> CheckReport:
    t0 = time.perf_counter()
    U = table.matrix()
    res = max_abs(U @ U.T - np.eye(U.shape[0])) if U.shape[0] == U.shape[1] else float("inf")
    return finish("cg_orthonormality", res, p.tol, t0, q=p.q, N=[table.N1, table.N2])


def check_cg_equality(N1: int, N2: int, zeta: int, eta: int, delta: int, p: QParams,
                      left: GeneratorRep | None = None, right: GeneratorRep | None = None) -> CheckReport:
    """Coloured tables equal the su_q(2) table and do not depend on delta."""
    t0 = time.perf_counter()
    a = cg_dqa(N1, N2, zeta, eta, delta, p, left, right).matrix()
    b = cg_dqa(N1, N2, zeta, eta, -delta, p, left, right).matrix()
    res = max(max_abs(a - cg_suq2(N1, N2, p).matrix()), max_abs(a - b))
    return finish("cg_equality", res, p.tol, t0, q=p.q, N=[N1, N2], colours=[zeta, eta, delta])


def _direct_sum(mats: list[np.ndarray]) -> np.ndarray:
    d = sum(m.shape[0] for m in mats)
    out = np.zeros((d, d))
    i = 0
    for m in mats:
        k = m.shape[0]
        out[i:i + k, i:i + k] = m
        i += k
    return out


def check_block_diagonalization(N1: int, N2: int, zeta: int, eta: int, delta: int, p: QParams,
                                left: GeneratorRep | None = None,
                                right: GeneratorRep | None = None) -> CheckReport:
    """U Delta(A) U^T equals the direct sum of dqa_rep(N, delta)(A) over the admissible N."""
    t0 = time.perf_counter()
    left = dqa_rep(N1, zeta, p) if left is None else left
    right = dqa_rep(N2, eta, p) if right is None else right
    table = cg_dqa(N1, N2, zeta, eta, delta, p, left, right)
    U = table.matrix()
    coupled = coproduct_rep(zeta, eta, delta, left, right, p)
    irreps = [dqa_rep(N, delta, p) for N, _ in table.blocks]
    res = max(max_abs(U @ coupled.image(g) @ U.T - _direct_sum([r.image(g) for r in irreps]))
              for g in GENERATORS)
    return finish("block_diagonalization", res, p.tol * coupled.dim, t0, q=p.q, N=[N1, N2],
                  colours=[zeta, eta, delta])
