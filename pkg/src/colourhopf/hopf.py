"""Generalized two-colour Hopf structure of A_q^+(1) at representation level.

The coproduct with leg colours (zeta, eta) and output colour delta is

    Delta(J0) = (1 x 1 - delta zeta eta G x G) / (q - 1)
    Delta(J+-) = eta J+- x G^-1 + zeta G x J+-

the counit eps_delta is the one-dimensional representation of colour delta,
and the antipode S^zeta_delta sends J+- to -q^{+-1} J+- and J0 to
(1 - zeta delta G^-1) / (q - 1). Every axiom is checked as a matrix identity
on concrete representations; tensor products use left-major Kronecker order.
"""
from __future__ import annotations

import itertools
import time
import warnings
from dataclasses import dataclass

import numpy as np

from . import qfunc
from .errors import ColourMismatch, ColourMismatchWarning
from .expr import (
    Expr, JM, JP, J0, ONE, Scale, G, G_inv, apply_antipode, apply_antipode_suq2,
    apply_sigma_delta, eval_expr, q_pow,
)
from .qfunc import QParams, check_colour
from .report import CheckReport, finish, max_abs
from .reps import Algebra, GeneratorRep, GENERATORS, dqa_rep, image_difference, suq2_rep

__all__ = [
    "LegList", "generator_expr", "coproduct_legs", "suq2_coproduct_legs",
    "coproduct_rep", "suq2_coproduct_rep", "com_def_coproduct_rep", "swap_matrix",
    "opposite_coproduct_rep", "counit_value",
    "check_coassociativity", "check_counit_axiom", "check_antipode_axiom", "check_suq2_hopf",
    "check_coproduct_sigma_law", "check_counit_sigma_law", "check_antipode_sigma_law",
    "check_specialization", "COLOUR_TRIPLES",
]

COLOUR_TRIPLES = tuple(itertools.product((1, -1), repeat=3))


def generator_expr(gen: str) -> Expr:
    return {"J0": J0, "Jp": JP, "Jm": JM}[gen]


@dataclass(frozen=True)
class LegList:
    """Coproduct image as an explicit sum of left (x) right pairs."""
    legs: tuple
    colours: tuple = ()

    def evaluate(self, left: GeneratorRep, right: GeneratorRep, p: QParams) -> np.ndarray:
        return sum(np.kron(eval_expr(a, left, p), eval_expr(b, right, p)) for a, b in self.legs)

    def map_legs(self, f_left, f_right) -> "LegList":
        return LegList(tuple((f_left(a), f_right(b)) for a, b in self.legs), self.colours)


def coproduct_legs(gen: str, zeta: int, eta: int, delta: int, p: QParams) -> LegList:
    zeta, eta, delta = check_colour(zeta), check_colour(eta), check_colour(delta)
    c = 1.0 / (p.q - 1.0)
    if gen == "J0":
        legs = ((Scale(c, ONE), ONE), (Scale(-delta * zeta * eta * c, G()), G()))
    elif gen in ("Jp", "Jm"):
        g = generator_expr(gen)
        legs = ((Scale(float(eta), g), G_inv()), (Scale(float(zeta), G()), g))
    else:
        raise KeyError(gen)
    return LegList(legs, (zeta, eta, delta))


def suq2_coproduct_legs(gen: str, p: QParams) -> LegList:
    if gen == "J0":
        return LegList(((J0, ONE), (ONE, J0)))
    g = generator_expr(gen)
    return LegList(((g, q_pow(0.0, 1.0)), (q_pow(0.0, -1.0), g)))


def _check_leg_colour(rep: GeneratorRep, colour: int, where: str, strict: bool):
    if rep.algebra != Algebra.DQA or rep.colour is None or rep.colour == colour:
        return
    msg = f"{where} representation has colour {rep.colour:+d}, leg expects {colour:+d}"
    if strict:
        raise ColourMismatch(msg)
    warnings.warn(msg, ColourMismatchWarning, stacklevel=3)


def coproduct_rep(zeta: int, eta: int, delta: int, left: GeneratorRep, right: GeneratorRep,
                  p: QParams, strict: bool = False) -> GeneratorRep:
    """Image of the coloured coproduct on ``left (x) right``.

    Colour disagreement between a representation and its leg is reported as a
    :class:`ColourMismatchWarning`, or raised when ``strict`` is set.
    """
    zeta, eta, delta = check_colour(zeta), check_colour(eta), check_colour(delta)
    _check_leg_colour(left, zeta, "left", strict)
    _check_leg_colour(right, eta, "right", strict)
    gl = qfunc.G_fn(left.j0diag, p)
    gr = qfunc._G_checked(right.j0diag, p)
    j0diag = (1.0 - delta * zeta * eta * np.kron(gl, gr)) / (p.q - 1.0)
    Gl, Gr_inv = np.diag(gl), np.diag(1.0 / gr)
    jplus = eta * np.kron(left.jplus, Gr_inv) + zeta * np.kron(Gl, right.jplus)
    jminus = eta * np.kron(left.jminus, Gr_inv) + zeta * np.kron(Gl, right.jminus)
    meta = {"algebra": Algebra.DQA, "colour": delta, "colours": (zeta, eta, delta),
            "path": f"D[{zeta:+d}{eta:+d}|{delta:+d}]({left.meta.get('path')},{right.meta.get('path')})"}
    return GeneratorRep(j0diag, jplus, jminus, meta)


def suq2_coproduct_rep(left: GeneratorRep, right: GeneratorRep, p: QParams) -> GeneratorRep:
    """j0 x 1 + 1 x j0 and j+- x q^j0 + q^-j0 x j+-."""
    q = p.q
    il, ir = np.ones(left.dim), np.ones(right.dim)
    j0diag = np.kron(left.j0diag, ir) + np.kron(il, right.j0diag)
    up, dn = np.diag(q ** right.j0diag), np.diag(q ** (-left.j0diag))
    jplus = np.kron(left.jplus, up) + np.kron(dn, right.jplus)
    jminus = np.kron(left.jminus, up) + np.kron(dn, right.jminus)
    meta = {"algebra": Algebra.SUQ2, "colour": None,
            "path": f"D({left.meta.get('path')},{right.meta.get('path')})"}
    return GeneratorRep(j0diag, jplus, jminus, meta)


def com_def_coproduct_rep(delta: int, left: GeneratorRep, right: GeneratorRep, p: QParams) -> GeneratorRep:
    """Single-colour coproduct written as delta (J+- x G^-1 + G x J+-)."""
    delta = check_colour(delta)
    gl = qfunc.G_fn(left.j0diag, p)
    gr = qfunc._G_checked(right.j0diag, p)
    j0diag = (1.0 - delta * np.kron(gl, gr)) / (p.q - 1.0)
    jplus = delta * (np.kron(left.jplus, np.diag(1.0 / gr)) + np.kron(np.diag(gl), right.jplus))
    meta = {"algebra": Algebra.DQA, "colour": delta, "path": "com_def"}
    return GeneratorRep(j0diag, jplus, jplus.T.copy(), meta)


def swap_matrix(da: int, db: int) -> np.ndarray:
    """Permutation P with P (a x b) = b x a for a in C^da, b in C^db."""
    P = np.zeros((da * db, da * db))
    i, j = np.meshgrid(np.arange(da), np.arange(db), indexing="ij")
    P[(j * da + i).ravel(), (i * db + j).ravel()] = 1.0
    return P


def opposite_coproduct_rep(zeta: int, eta: int, delta: int, left: GeneratorRep, right: GeneratorRep,
                           p: QParams, strict: bool = False) -> GeneratorRep:
    """tau o Delta^{eta,zeta}_delta on ``left (x) right``.

    The coproduct with exchanged colours is built on ``right (x) left`` and
    carried back to ``left (x) right`` by the swap permutation.
    """
    inner = coproduct_rep(eta, zeta, delta, right, left, p, strict=strict)
    P = swap_matrix(right.dim, left.dim)
    j0 = P @ inner.j0 @ P.T
    meta = dict(inner.meta, path=f"op({inner.meta.get('path')})")
    return GeneratorRep(np.diag(j0).copy(), P @ inner.jplus @ P.T, P @ inner.jminus @ P.T, meta)


def counit_value(gen: str, delta: int, p: QParams) -> float:
    delta = check_colour(delta)
    if gen == "J0":
        return (1.0 - delta) / (p.q - 1.0)
    if gen in ("Jp", "Jm"):
        return 0.0
    raise KeyError(gen)


# --- axioms -----------------------------------------------------------------

def _require_colour(rep: GeneratorRep, colour: int, what: str):
    if rep.colour is not None and rep.colour != colour:
        raise ColourMismatch(f"{what} has colour {rep.colour:+d}, expected {colour:+d}")


def check_coassociativity(colours, reps, p: QParams) -> CheckReport:
    """(Delta^{mu,nu}_delta o (Delta^{zeta,eta}_mu x id)) against
    (Delta^{zeta,rho}_delta o (id x Delta^{eta,nu}_rho)) on R1 x R2 x R3."""
    t0 = time.perf_counter()
    zeta, eta, mu, nu, rho, delta = (check_colour(c) for c in colours)
    r1, r2, r3 = reps
    for rep, c, w in ((r1, zeta, "first"), (r2, eta, "second"), (r3, nu, "third")):
        _require_colour(rep, c, f"{w} representation")
    lhs = coproduct_rep(mu, nu, delta, coproduct_rep(zeta, eta, mu, r1, r2, p), r3, p)
    rhs = coproduct_rep(zeta, rho, delta, r1, coproduct_rep(eta, nu, rho, r2, r3, p), p)
    res = image_difference(lhs, rhs)
    return finish("coassociativity", res, p.tol * lhs.dim, t0, q=p.q,
                  N=[r.dim - 1 for r in reps], colours=[zeta, eta, mu, nu, rho, delta])


def check_counit_axiom(zeta: int, eta: int, delta: int, rep: GeneratorRep, p: QParams,
                       rep_right: GeneratorRep | None = None) -> CheckReport:
    """(eps_zeta x sigma_{eta delta}) o Delta = id and (sigma_{zeta delta} x eps_eta) o Delta = id.

    ``rep`` (colour eta) carries the left form. The right form uses
    ``rep_right`` (colour zeta); by default the dqa irrep of colour zeta with
    the dimension of ``rep``.
    """
    t0 = time.perf_counter()
    zeta, eta, delta = check_colour(zeta), check_colour(eta), check_colour(delta)
    _require_colour(rep, eta, "left-form representation")
    if rep_right is None:
        rep_right = rep if rep.colour in (None, zeta) else dqa_rep(rep.dim - 1, zeta, p)
    _require_colour(rep_right, zeta, "right-form representation")
    left_form = coproduct_rep(zeta, eta, delta, dqa_rep(0, zeta, p), rep, p)
    right_form = coproduct_rep(zeta, eta, delta, rep_right, dqa_rep(0, eta, p), p)
    res = 0.0
    for gen in GENERATORS:
        e = generator_expr(gen)
        res = max(res,
                  max_abs(left_form.image(gen) - eval_expr(apply_sigma_delta(e, eta * delta), rep, p)),
                  max_abs(right_form.image(gen) - eval_expr(apply_sigma_delta(e, zeta * delta), rep_right, p)))
    return finish("counit_axiom", res, p.tol * rep.dim, t0, q=p.q, N=[rep.dim - 1],
                  colours=[zeta, eta, delta])


def _multiply_legs(legs: LegList, f_left, f_right, rep, p) -> np.ndarray:
    # the multiplication map, transported through the representation
    return sum(eval_expr(f_left(a), rep, p) @ eval_expr(f_right(b), rep, p) for a, b in legs.legs)


def check_antipode_axiom(zeta: int, eta: int, mu: int, delta: int, rep: GeneratorRep,
                         p: QParams) -> CheckReport:
    """m o (S^mu_zeta x sigma_{mu eta}) o Delta^{zeta,eta}_delta = eps_delta, and the
    mirror m o (sigma_{mu zeta} x S^mu_eta) o Delta^{zeta,eta}_delta = eps_delta."""
    t0 = time.perf_counter()
    zeta, eta, mu, delta = (check_colour(c) for c in (zeta, eta, mu, delta))
    eye = np.eye(rep.dim)
    res = 0.0
    for gen in GENERATORS:
        legs = coproduct_legs(gen, zeta, eta, delta, p)
        target = counit_value(gen, delta, p) * eye
        first = _multiply_legs(legs, lambda a: apply_antipode(a, mu, zeta, p),
                               lambda b: apply_sigma_delta(b, mu * eta), rep, p)
        mirror = _multiply_legs(legs, lambda a: apply_sigma_delta(a, mu * zeta),
                                lambda b: apply_antipode(b, mu, eta, p), rep, p)
        res = max(res, max_abs(first - target), max_abs(mirror - target))
    return finish("antipode_axiom", res, p.tol * rep.dim, t0, q=p.q, N=[rep.dim - 1],
                  colours=[zeta, eta, mu, delta])


def check_suq2_hopf(N1: int, N2: int, N3: int, p: QParams, reps=None) -> CheckReport:
    """Coassociativity, counit and antipode axioms of su_q(2) on three irreps.

    ``reps`` overrides the three irreps (used for negative controls).
    """
    t0 = time.perf_counter()
    r1, r2, r3 = reps if reps is not None else (suq2_rep(N1, p), suq2_rep(N2, p), suq2_rep(N3, p))
    lhs = suq2_coproduct_rep(suq2_coproduct_rep(r1, r2, p), r3, p)
    rhs = suq2_coproduct_rep(r1, suq2_coproduct_rep(r2, r3, p), p)
    res = image_difference(lhs, rhs)
    trivial = suq2_rep(0, p)
    for gen in GENERATORS:
        e = generator_expr(gen)
        res = max(res,
                  max_abs(suq2_coproduct_rep(trivial, r1, p).image(gen) - eval_expr(e, r1, p)),
                  max_abs(suq2_coproduct_rep(r1, trivial, p).image(gen) - eval_expr(e, r1, p)))
        legs = suq2_coproduct_legs(gen, p)
        left = _multiply_legs(legs, lambda a: apply_antipode_suq2(a, p), lambda b: b, r1, p)
        right = _multiply_legs(legs, lambda a: a, lambda b: apply_antipode_suq2(b, p), r1, p)
        res = max(res, max_abs(left), max_abs(right))
    return finish("suq2_hopf", res, p.tol * lhs.dim, t0, q=p.q, N=[N1, N2, N3])


# --- sigma transformation laws ----------------------------------------------

def check_coproduct_sigma_law(colours, left: GeneratorRep, right: GeneratorRep, p: QParams) -> CheckReport:
    """(sigma_{mu zeta} x sigma_{nu eta}) o Delta^{zeta,eta}_delta = Delta^{mu,nu}_rho o sigma_{rho delta}."""
    t0 = time.perf_counter()
    zeta, eta, delta, mu, nu, rho = (check_colour(c) for c in colours)
    coupled = coproduct_rep(mu, nu, rho, left, right, p)
    res = 0.0
    for gen in GENERATORS:
        lhs = coproduct_legs(gen, zeta, eta, delta, p).map_legs(
            lambda a: apply_sigma_delta(a, mu * zeta), lambda b: apply_sigma_delta(b, nu * eta))
        rhs = eval_expr(apply_sigma_delta(generator_expr(gen), rho * delta), coupled, p)
        res = max(res, max_abs(lhs.evaluate(left, right, p) - rhs))
    return finish("coproduct_sigma_law", res, p.tol * coupled.dim, t0, q=p.q,
                  N=[left.dim - 1, right.dim - 1], colours=[zeta, eta, delta, mu, nu, rho])


def check_counit_sigma_law(zeta: int, delta: int, p: QParams) -> CheckReport:
    """eps_delta o sigma_{delta zeta} = eps_zeta, both counits realized as 1-dim reps."""
    t0 = time.perf_counter()
    zeta, delta = check_colour(zeta), check_colour(delta)
    src = dqa_rep(0, delta, p)
    res = max(max_abs(eval_expr(apply_sigma_delta(generator_expr(g), delta * zeta), src, p)
                      - counit_value(g, zeta, p)) for g in GENERATORS)
    return finish("counit_sigma_law", res, p.tol, t0, q=p.q, colours=[zeta, delta])


def check_antipode_sigma_law(zeta: int, eta: int, delta: int, mu: int, rep: GeneratorRep,
                             p: QParams) -> CheckReport:
    """sigma_{zeta eta} o S^eta_delta = S^zeta_mu o sigma_{mu delta}."""
    t0 = time.perf_counter()
    zeta, eta, delta, mu = (check_colour(c) for c in (zeta, eta, delta, mu))
    res = 0.0
    for gen in GENERATORS:
        e = generator_expr(gen)
        lhs = apply_sigma_delta(apply_antipode(e, eta, delta, p), zeta * eta)
        rhs = apply_antipode(apply_sigma_delta(e, mu * delta), zeta, mu, p)
        res = max(res, max_abs(eval_expr(lhs, rep, p) - eval_expr(rhs, rep, p)))
    return finish("antipode_sigma_law", res, p.tol * rep.dim, t0, q=p.q, N=[rep.dim - 1],
                  colours=[zeta, eta, delta, mu])


def check_specialization(delta: int, N1: int, N2: int, p: QParams) -> CheckReport:
    """Equal colours reduce to the single-colour structure.

    Three routes to the same coupled representation are compared: the
    coloured coproduct with zeta = eta = delta, the single-colour formula,
    and the su_q(2) coproduct pushed through J0 = p_delta(j0). The antipode
    image of J0 is compared with -J0 G(J0)^-1.
    """
    t0 = time.perf_counter()
    delta = check_colour(delta)
    a, b = dqa_rep(N1, delta, p), dqa_rep(N2, delta, p)
    coloured = coproduct_rep(delta, delta, delta, a, b, p)
    single = com_def_coproduct_rep(delta, a, b, p)
    su = suq2_coproduct_rep(suq2_rep(N1, p), suq2_rep(N2, p), p)
    # G = delta q^{-j0} on the image, so the delta factors cancel in J+-
    mapped = GeneratorRep(qfunc.p_delta(su.j0diag, delta, p), su.jplus, su.jminus)
    res = max(image_difference(coloured, single), image_difference(coloured, mapped))
    for rep in (a, b):
        s_j0 = eval_expr(apply_antipode(J0, delta, delta, p), rep, p)
        direct = -rep.j0 @ np.diag(1.0 / qfunc.G_fn(rep.j0diag, p))
        res = max(res, max_abs(s_j0 - direct))
    return finish("specialization", res, p.tol * coloured.dim, t0, q=p.q, N=[N1, N2], colours=[delta])

