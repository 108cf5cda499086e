"""Finite expression trees over the generators J0, J+, J-.

Expressions are immutable and compared structurally. Scalar functions of J0
live in :class:`FnOfJ0` nodes drawn from a closed catalogue; substitutions of
J0 (the involution sigma, the antipode image of J0, negation) are recorded as
a chain of scalar maps applied before the catalogue function, so that

    FnOfJ0(kind, params, chain=(c1, ..., ck))  means  f(c1(c2(...ck(z))))

with ``ck`` applied first. Every node evaluates on a representation whose J0
image is diagonal, which holds for irreps and all coproduct images.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import qfunc
from .errors import LogDomainError, MalformedExpr, SingularPoint
from .qfunc import QParams, check_colour

__all__ = [
    "Expr", "GenJ0", "GenJp", "GenJm", "Unit", "FnOfJ0", "Scale", "Prod", "Sum",
    "J0", "JP", "JM", "ONE", "G", "G_inv", "G_pow", "q_pow", "lagrange",
    "eval_expr", "apply_sigma", "apply_sigma_delta", "apply_antipode",
    "apply_antipode_inverse", "apply_antipode_suq2", "CATALOGUE",
]


class Expr:
    def __mul__(self, other):
        if isinstance(other, Expr):
            return Prod((self, other))
        return Scale(float(other), self)

    def __rmul__(self, other):
        return Scale(float(other), self)

    def __add__(self, other):
        return Sum((self, other))

    def __neg__(self):
        return Scale(-1.0, self)


@dataclass(frozen=True)
class GenJ0(Expr):
    pass


@dataclass(frozen=True)
class GenJp(Expr):
    pass


@dataclass(frozen=True)
class GenJm(Expr):
    pass


@dataclass(frozen=True)
class Unit(Expr):
    pass


@dataclass(frozen=True)
class FnOfJ0(Expr):
    kind: str
    params: tuple = ()
    chain: tuple = ()


@dataclass(frozen=True)
class Scale(Expr):
    c: float
    child: Expr


@dataclass(frozen=True)
class Prod(Expr):
    children: tuple


@dataclass(frozen=True)
class Sum(Expr):
    children: tuple


J0, JP, JM, ONE = GenJ0(), GenJp(), GenJm(), Unit()


def G() -> FnOfJ0:
    return FnOfJ0("G")


def G_inv() -> FnOfJ0:
    return FnOfJ0("Gpow", (1.0, -1.0))


def G_pow(c: float, a: float) -> FnOfJ0:
    """(c G(J0))^a; non-integer ``a`` needs c G > 0 on the spectrum."""
    return FnOfJ0("Gpow", (float(c), float(a)))


def q_pow(a: float, b: float) -> FnOfJ0:
    """q^(a + b J0)."""
    return FnOfJ0("qpow", (float(a), float(b)))


def lagrange(nodes, k: int) -> FnOfJ0:
    """Lagrange basis polynomial equal to 1 at nodes[k] and 0 at the other nodes."""
    return FnOfJ0("lagrange", (tuple(float(x) for x in nodes), int(k)))


# --- scalar catalogue -------------------------------------------------------

def _gpow(z, params, p):
    c, a = params
    base = c * qfunc.G_fn(z, p)
    if a != int(a):
        if np.any(base <= 0.0):
            raise LogDomainError(f"({c:+g} G)^{a:g} needs a positive base")
    elif a < 0 and np.any(np.abs(base) < p.tol * (1.0 + np.abs(z))):
        raise SingularPoint("negative power of G at its zero")
    return base ** a


def _logq_g(z, params, p):
    (c,) = params
    base = c * qfunc.G_fn(z, p)
    if np.any(base <= 0.0):
        raise LogDomainError(f"log_q({c:+g} G) needs a positive argument")
    return np.log(base) / np.log(p.q)


def _lagrange(z, params, p):
    nodes, k = params
    out = np.ones_like(z)
    for j, x in enumerate(nodes):
        if j != k:
            out = out * (z - x) / (nodes[k] - x)
    return out


CATALOGUE: dict[str, Callable] = {
    "id": lambda z, a, p: z,
    "G": lambda z, a, p: qfunc.G_fn(z, p),
    "Gpow": _gpow,
    "pow": lambda z, a, p: z ** a[0],
    "affine": lambda z, a, p: a[0] + a[1] * z,
    "logqG": _logq_g,
    "qpow": lambda z, a, p: p.q ** (a[0] + a[1] * z),
    "lagrange": _lagrange,
}

_INVOLUTIVE = {"sigma", "antipode", "neg"}


def _chain_map(m, z, p):
    if m[0] == "sigma":
        return qfunc.sigma_scalar(z, p)
    if m[0] == "antipode":
        return qfunc.antipode_scalar(z, m[1], p)
    if m[0] == "neg":
        return -z
    raise MalformedExpr(f"unknown chain map {m!r}")


def _eval_fn(e: FnOfJ0, z, p):
    if e.kind not in CATALOGUE:
        raise MalformedExpr(f"function {e.kind!r} is not in the catalogue")
    for m in reversed(e.chain):
        z = _chain_map(m, z, p)
    return np.asarray(CATALOGUE[e.kind](np.asarray(z, dtype=float), e.params, p), dtype=float)


def eval_expr(e: Expr, rep, p: QParams) -> np.ndarray:
    """Substitute the generator images of ``rep`` into ``e``."""
    if isinstance(e, GenJ0):
        return rep.j0
    if isinstance(e, GenJp):
        return rep.jplus
    if isinstance(e, GenJm):
        return rep.jminus
    if isinstance(e, Unit):
        return np.eye(rep.dim)
    if isinstance(e, FnOfJ0):
        return np.diag(_eval_fn(e, rep.j0diag, p))
    if isinstance(e, Scale):
        return e.c * eval_expr(e.child, rep, p)
    if isinstance(e, Prod):
        if not e.children:
            raise MalformedExpr("empty product")
        out = eval_expr(e.children[0], rep, p)
        for c in e.children[1:]:
            out = out @ eval_expr(c, rep, p)
        return out
    if isinstance(e, Sum):
        if not e.children:
            raise MalformedExpr("empty sum")
        return sum(eval_expr(c, rep, p) for c in e.children)
    raise MalformedExpr(f"not an expression: {e!r}")


# --- substitutions ----------------------------------------------------------

def _push(chain: tuple, m: tuple) -> tuple:
    # adjacent copies of the same involution cancel
    if chain and chain[-1] == m and m[0] in _INVOLUTIVE:
        return chain[:-1]
    return chain + (m,)


def _fn(kind, params, chain) -> Expr:
    if kind == "id" and not chain:
        return J0
    return FnOfJ0(kind, params, chain)


def _substitute(e: Expr, m: tuple, ladder: Callable[[Expr], Expr], reverse: bool) -> Expr:
    if isinstance(e, GenJ0):
        return _fn("id", (), (m,))
    if isinstance(e, (GenJp, GenJm)):
        return ladder(e)
    if isinstance(e, Unit):
        return e
    if isinstance(e, FnOfJ0):
        return _fn(e.kind, e.params, _push(e.chain, m))
    if isinstance(e, Scale):
        return Scale(e.c, _substitute(e.child, m, ladder, reverse))
    if isinstance(e, Prod):
        kids = tuple(_substitute(c, m, ladder, reverse) for c in e.children)
        return Prod(kids[::-1] if reverse else kids)
    if isinstance(e, Sum):
        return Sum(tuple(_substitute(c, m, ladder, reverse) for c in e.children))
    raise MalformedExpr(f"not an expression: {e!r}")


def apply_sigma(e: Expr) -> Expr:
    """Involution J0 -> 2/(q-1) - J0, J+- -> J+-, applied homomorphically."""
    return _substitute(e, ("sigma",), lambda g: g, reverse=False)


def apply_sigma_delta(e: Expr, s: int) -> Expr:
    return e if check_colour(s) == 1 else apply_sigma(e)


def apply_antipode(e: Expr, zeta: int, delta: int, p: QParams) -> Expr:
    """Generalized antipode S^zeta_delta, an antihomomorphism.

    J+ -> -q J+, J- -> -q^-1 J-, J0 -> (1 - zeta delta G(J0)^-1) / (q - 1).
    """
    s = check_colour(zeta) * check_colour(delta)
    q = p.q
    ladder = lambda g: Scale(-q, g) if isinstance(g, GenJp) else Scale(-1.0 / q, g)
    return _substitute(e, ("antipode", s), ladder, reverse=True)


def apply_antipode_inverse(e: Expr, zeta: int, delta: int, p: QParams) -> Expr:
    """Inverse of S^zeta_delta: J+ -> -q^-1 J+, J- -> -q J-, same J0 image."""
    s = check_colour(zeta) * check_colour(delta)
    q = p.q
    ladder = lambda g: Scale(-1.0 / q, g) if isinstance(g, GenJp) else Scale(-q, g)
    return _substitute(e, ("antipode", s), ladder, reverse=True)


def apply_antipode_suq2(e: Expr, p: QParams) -> Expr:
    """su_q(2) antipode: j0 -> -j0, j+- -> -q^{+-1} j+-."""
    q = p.q
    ladder = lambda g: Scale(-q, g) if isinstance(g, GenJp) else Scale(-1.0 / q, g)
    return _substitute(e, ("neg",), ladder, reverse=True)
