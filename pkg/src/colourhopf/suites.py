"""Verification suites over (q, N, colour) grids.

Each suite is a list of independent check jobs. Jobs run on a thread pool,
and the collected reports are sorted into a canonical order so the output
does not depend on scheduling. An exception raised inside a check becomes a
failed report with infinite residual.
"""
from __future__ import annotations

import fnmatch
import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import cg, hopf, qfunc, reps, rmatrix
from .errors import ConfigError, QAlgebraError
from .qfunc import QParams
from .report import CheckReport, finish, max_abs
from .reps import Algebra

__all__ = ["SUITES", "SuiteConfig", "RepFactory", "run_suites", "suite_jobs", "colour_string",
           "r_matrix_dump"]

SUITES = ("algebra", "scalar", "hopf", "rmatrix", "cybe", "cg")
C = (1, -1)


def colour_string(colours) -> str:
    return "".join("+" if c > 0 else "-" for c in colours)


@dataclass(frozen=True)
class SuiteConfig:
    q_values: tuple = (0.5, 0.8)
    n_max: int = 3
    colour_filter: tuple = ()
    tol: float = 1e-9
    suites: tuple = SUITES
    out: str | None = None
    format: str = "json"
    dump_matrices: bool = False
    perturb: float = 0.0
    timing: bool = True
    workers: int = 4

    def __post_init__(self):
        if not self.q_values:
            raise ConfigError("at least one q value is required")
        for q in self.q_values:
            QParams(q)  # raises ConfigError outside (0, 1)
        if not isinstance(self.n_max, int) or self.n_max < 0:
            raise ConfigError(f"n_max must be a nonnegative integer, got {self.n_max!r}")
        if not (self.tol > 0.0):
            raise ConfigError(f"tol must be positive, got {self.tol!r}")
        bad = [s for s in self.suites if s not in SUITES]
        if bad or not self.suites:
            raise ConfigError(f"unknown or empty suite selection {list(self.suites)!r}; choose from {SUITES}")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {self.format!r}")
        for pat in self.colour_filter:
            if not pat or set(pat) - set("+-*?[]!"):
                raise ConfigError(f"bad colour pattern {pat!r}; use +, - and glob wildcards")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        object.__setattr__(self, "q_values", tuple(float(q) for q in self.q_values))
        object.__setattr__(self, "colour_filter", tuple(self.colour_filter))
        object.__setattr__(self, "suites", tuple(s for s in SUITES if s in self.suites))

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("out", "timing", "workers"):
            d.pop(k)
        d["q_values"] = list(d["q_values"])
        d["colour_filter"] = list(d["colour_filter"])
        d["suites"] = list(d["suites"])
        return d

    def wants(self, colours) -> bool:
        if not self.colour_filter or not colours:
            return True
        s = colour_string(colours)
        return any(fnmatch.fnmatchcase(s, pat) for pat in self.colour_filter)


@dataclass(frozen=True)
class RepFactory:
    """Irreps for the suites, optionally with J0[0, 0] shifted by ``eps`` (negative control)."""
    p: QParams
    eps: float = 0.0

    def suq2(self, N: int) -> reps.GeneratorRep:
        return reps.perturbed(reps.suq2_rep(N, self.p), self.eps)

    def dqa(self, N: int, delta: int) -> reps.GeneratorRep:
        return reps.perturbed(reps.dqa_rep(N, delta, self.p), self.eps)


@dataclass
class Job:
    suite: str
    name: str
    fn: Callable[[], CheckReport]
    params: dict = field(default_factory=dict)


def _run(job: Job, timing: bool) -> CheckReport:
    t0 = time.perf_counter()
    try:
        rep = job.fn()
    except (QAlgebraError, ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
        rep = finish(job.name, math.inf, 0.0, t0, **job.params, error=f"{type(exc).__name__}: {exc}")
    rep.suite = job.suite
    rep.params = {**job.params, **{k: v for k, v in rep.params.items() if k not in job.params}}
    if not timing:
        rep.elapsed_micros = 0
    return rep


# --- job builders -------------------------------------------------------------

def _ns(cfg):
    return range(cfg.n_max + 1)


def _scalar_jobs(cfg, p, f) -> Iterator[Job]:
    yield Job("scalar", "FGH_consistency", lambda: qfunc.check_consistency_FGH(p), {"q": p.q})
    for d in C:
        if not cfg.wants([d]):
            continue
        pr = {"q": p.q, "colours": [d]}
        yield Job("scalar", "p_equation", lambda d=d: qfunc.check_p_equation(d, p), pr)
        yield Job("scalar", "inverse_pair", lambda d=d: qfunc.check_inverse_pair(d, p), pr)
        for N in _ns(cfg):
            pr = {"q": p.q, "N": [N], "colours": [d]}
            yield Job("scalar", "map_equivalence", lambda N=N, d=d: check_map_equivalence(N, d, p, f), pr)
            yield Job("scalar", "amplitude_forms", lambda N=N, d=d: check_amplitude_forms(N, d, p, f), pr)
            yield Job("scalar", "casimir_value", lambda N=N, d=d: check_casimir_value(N, d, p), pr)


def check_map_equivalence(N: int, delta: int, p: QParams, factory: RepFactory | None = None) -> CheckReport:
    """dqa_rep_via_map against the directly built irrep."""
    t0 = time.perf_counter()
    direct = (factory or RepFactory(p)).dqa(N, delta)
    res = reps.image_difference(reps.dqa_rep_via_map(N, delta, p), direct)
    return finish("map_equivalence", res, p.tol, t0, q=p.q, N=[N], colours=[delta])


def check_amplitude_forms(N: int, delta: int, p: QParams, factory: RepFactory | None = None) -> CheckReport:
    """Ladder amplitudes from Casimir differences against the q-number product form.

    The Casimir differences are taken at the spectrum of the supplied irrep.
    """
    t0 = time.perf_counter()
    rep = (factory or RepFactory(p)).dqa(N, delta)
    gamma = qfunc.p_delta(N / 2.0, delta, p)
    h_top = qfunc.H_fn(gamma, p)
    up = np.sqrt(np.clip(h_top - qfunc.H_fn(rep.j0diag[1:], p), 0.0, None))
    down = np.sqrt(np.clip(h_top - qfunc.H_fn(p.q * rep.j0diag[:-1] - 1.0, p), 0.0, None))
    amps = reps.ladder_amplitudes(N, p)
    res = max(max_abs(up - amps), max_abs(down - amps))
    return finish("amplitude_forms", res, p.tol, t0, q=p.q, N=[N], colours=[delta])


def check_casimir_value(N: int, delta: int, p: QParams) -> CheckReport:
    """H at the top eigenvalue equals [N/2]_q [N/2+1]_q for either colour."""
    t0 = time.perf_counter()
    expected = qfunc.q_number(N / 2.0, p) * qfunc.q_number(N / 2.0 + 1.0, p)
    res = abs(qfunc.casimir_value(N, delta, p) - expected)
    return finish("casimir_value", res, p.tol, t0, q=p.q, N=[N], colours=[delta])


def _algebra_jobs(cfg, p, f) -> Iterator[Job]:
    for N in _ns(cfg):
        pr = {"q": p.q, "N": [N]}
        yield Job("algebra", "commutators", lambda N=N: reps.check_commutators(f.suq2(N), Algebra.SUQ2, p),
                  dict(pr, algebra="SUQ2"))
        yield Job("algebra", "casimir", lambda N=N: reps.check_casimir(f.suq2(N), Algebra.SUQ2, N, p),
                  dict(pr, algebra="SUQ2"))
        for d in C:
            if not cfg.wants([d]):
                continue
            pr = {"q": p.q, "N": [N], "colours": [d]}
            yield Job("algebra", "commutators",
                      lambda N=N, d=d: reps.check_commutators(f.dqa(N, d), Algebra.DQA, p), dict(pr, algebra="DQA"))
            yield Job("algebra", "casimir",
                      lambda N=N, d=d: reps.check_casimir(f.dqa(N, d), Algebra.DQA, N, p), dict(pr, algebra="DQA"))
            yield Job("algebra", "transmutation", lambda N=N, d=d: reps.check_transmutation(N, d, p), pr)


def _hopf_jobs(cfg, p, f) -> Iterator[Job]:
    ns = list(_ns(cfg))
    for N1, N2, N3 in itertools.product(ns, repeat=3):
        Ns = [N1, N2, N3]
        yield Job("hopf", "suq2_hopf",
                  lambda Ns=Ns: hopf.check_suq2_hopf(*Ns, p, reps=[f.suq2(n) for n in Ns]), {"q": p.q, "N": Ns})
        for cols in itertools.product(C, repeat=6):
            if not cfg.wants(cols):
                continue
            z, e, m, n, r, d = cols
            yield Job("hopf", "coassociativity",
                      lambda Ns=Ns, cols=cols: hopf.check_coassociativity(
                          cols, (f.dqa(Ns[0], cols[0]), f.dqa(Ns[1], cols[1]), f.dqa(Ns[2], cols[3])), p),
                      {"q": p.q, "N": Ns, "colours": list(cols)})
    for N in ns:
        for cols in itertools.product(C, repeat=3):
            if cfg.wants(cols):
                z, e, d = cols
                yield Job("hopf", "counit_axiom",
                          lambda N=N, z=z, e=e, d=d: hopf.check_counit_axiom(
                              z, e, d, f.dqa(N, e), p, rep_right=f.dqa(N, z)),
                          {"q": p.q, "N": [N], "colours": list(cols)})
        for cols in itertools.product(C, repeat=4):
            if not cfg.wants(cols):
                continue
            yield Job("hopf", "antipode_axiom",
                      lambda N=N, cols=cols: hopf.check_antipode_axiom(*cols, f.dqa(N, cols[2]), p),
                      {"q": p.q, "N": [N], "colours": list(cols)})
            yield Job("hopf", "antipode_sigma_law",
                      lambda N=N, cols=cols: hopf.check_antipode_sigma_law(*cols, f.dqa(N, cols[3]), p),
                      {"q": p.q, "N": [N], "colours": list(cols)})
    for N1, N2 in itertools.product(ns, repeat=2):
        for cols in itertools.product(C, repeat=6):
            if not cfg.wants(cols):
                continue
            yield Job("hopf", "coproduct_sigma_law",
                      lambda N1=N1, N2=N2, cols=cols: hopf.check_coproduct_sigma_law(
                          cols, f.dqa(N1, cols[3]), f.dqa(N2, cols[4]), p),
                      {"q": p.q, "N": [N1, N2], "colours": list(cols)})
        for d in C:
            if cfg.wants([d]):
                yield Job("hopf", "specialization", lambda N1=N1, N2=N2, d=d: hopf.check_specialization(d, N1, N2, p),
                          {"q": p.q, "N": [N1, N2], "colours": [d]})
    for cols in itertools.product(C, repeat=2):
        if cfg.wants(cols):
            yield Job("hopf", "counit_sigma_law", lambda cols=cols: hopf.check_counit_sigma_law(*cols, p),
                      {"q": p.q, "colours": list(cols)})


def _rmatrix_jobs(cfg, p, f) -> Iterator[Job]:
    ns = list(_ns(cfg))
    for N1, N2 in itertools.product(ns, repeat=2):
        Ns = [N1, N2]
        for d in C:
            if cfg.wants([d]):
                yield Job("rmatrix", "r_matches_su", lambda N1=N1, N2=N2, d=d: check_r_matches_su_f(d, N1, N2, p, f),
                          {"q": p.q, "N": Ns, "colours": [d]})
        for cols in itertools.product(C, repeat=3):
            if cfg.wants(cols):
                z, e, d = cols
                yield Job("rmatrix", "intertwiner",
                          lambda N1=N1, N2=N2, z=z, e=e, d=d: rmatrix.check_intertwiner(
                              z, e, d, f.dqa(N1, z), f.dqa(N2, e), p),
                          {"q": p.q, "N": Ns, "colours": list(cols)})
        for cols in itertools.product(C, repeat=4):
            if not cfg.wants(cols):
                continue
            z, e, m, n = cols
            yield Job("rmatrix", "colour_flip",
                      lambda N1=N1, N2=N2, z=z, e=e, m=m, n=n: rmatrix.check_colour_flip(
                          (z, e), (m, n), f.dqa(N1, z), f.dqa(N2, e), p),
                      {"q": p.q, "N": Ns, "colours": list(cols)})
            lam, mu, z, e = cols
            yield Job("rmatrix", "antipode_r",
                      lambda N1=N1, N2=N2, cols=cols: rmatrix.check_antipode_r(
                          *cols, f.dqa(N1, cols[2]), f.dqa(N2, cols[3]), p),
                      {"q": p.q, "N": Ns, "colours": list(cols)})
    for N in ns:
        for cols in itertools.product(C, repeat=2):
            if cfg.wants(cols):
                z, e = cols
                yield Job("rmatrix", "counit_r",
                          lambda N=N, z=z, e=e: rmatrix.check_counit_r(z, e, f.dqa(N, e), p, left=f.dqa(N, z)),
                          {"q": p.q, "N": [N], "colours": list(cols)})
    for Ns in itertools.product(ns, repeat=3):
        for cols in itertools.product(C, repeat=5):
            if not cfg.wants(cols):
                continue
            lam, mu, z, nu, e = cols
            yield Job("rmatrix", "fusion",
                      lambda Ns=Ns, cols=cols: rmatrix.check_fusion(
                          *cols, f.dqa(Ns[0], cols[0]), f.dqa(Ns[1], cols[1]), f.dqa(Ns[2], cols[3]), p),
                      {"q": p.q, "N": list(Ns), "colours": list(cols)})


def check_r_matches_su_f(delta, N1, N2, p, f: RepFactory) -> CheckReport:
    """R^{delta,delta} on the factory irreps against the su_q(2) R-matrix."""
    t0 = time.perf_counter()
    Rc = rmatrix.r_coloured((delta, delta), f.dqa(N1, delta), f.dqa(N2, delta), p)
    res = max_abs(Rc - rmatrix.r_su(reps.suq2_rep(N1, p), reps.suq2_rep(N2, p), p))
    return finish("r_matches_su", res, p.tol, t0, q=p.q, N=[N1, N2], colours=[delta])


def _cybe_jobs(cfg, p, f) -> Iterator[Job]:
    for Ns in itertools.product(_ns(cfg), repeat=3):
        for cols in itertools.product(C, repeat=3):
            if cfg.wants(cols):
                yield Job("cybe", "coloured_ybe",
                          lambda Ns=Ns, cols=cols: rmatrix.check_cybe(
                              *cols, *(f.dqa(n, c) for n, c in zip(Ns, cols)), p),
                          {"q": p.q, "N": list(Ns), "colours": list(cols)})


def _cg_jobs(cfg, p, f) -> Iterator[Job]:
    for N1, N2 in itertools.product(_ns(cfg), repeat=2):
        Ns = [N1, N2]
        yield Job("cg", "cg_orthonormality",
                  lambda N1=N1, N2=N2: cg.check_orthonormality(cg.cg_suq2(N1, N2, p, f.suq2(N1), f.suq2(N2)), p),
                  {"q": p.q, "N": Ns})
        for cols in itertools.product(C, repeat=3):
            if not cfg.wants(cols):
                continue
            z, e, d = cols
            pr = {"q": p.q, "N": Ns, "colours": list(cols)}
            yield Job("cg", "cg_equality",
                      lambda N1=N1, N2=N2, z=z, e=e, d=d: cg.check_cg_equality(
                          N1, N2, z, e, d, p, f.dqa(N1, z), f.dqa(N2, e)), pr)
            yield Job("cg", "selection_rule",
                      lambda N1=N1, N2=N2, z=z, e=e, d=d: cg.check_selection_rule(
                          cg.cg_dqa(N1, N2, z, e, d, p, f.dqa(N1, z), f.dqa(N2, e)), z, e, d, p), pr)
            yield Job("cg", "block_diagonalization",
                      lambda N1=N1, N2=N2, z=z, e=e, d=d: cg.check_block_diagonalization(
                          N1, N2, z, e, d, p, f.dqa(N1, z), f.dqa(N2, e)), pr)


_BUILDERS = {
    "algebra": _algebra_jobs, "scalar": _scalar_jobs, "hopf": _hopf_jobs,
    "rmatrix": _rmatrix_jobs, "cybe": _cybe_jobs, "cg": _cg_jobs,
}


def suite_jobs(cfg: SuiteConfig, suite: str) -> list[Job]:
    jobs = []
    for q in cfg.q_values:
        p = QParams(q, cfg.tol)
        jobs.extend(_BUILDERS[suite](cfg, p, RepFactory(p, cfg.perturb)))
    return jobs


def _sort_key(r: CheckReport):
    pr = r.params
    return (SUITES.index(r.suite), pr.get("q", 0.0), tuple(pr.get("N", ())),
            tuple(-c for c in pr.get("colours", ())), r.name, str(sorted(pr.items())))


def run_suites(cfg: SuiteConfig) -> list[CheckReport]:
    """Run the selected suites and return reports in canonical order."""
    def run_suite(suite):
        return [_run(job, cfg.timing) for job in suite_jobs(cfg, suite)]

    if cfg.workers == 1 or len(cfg.suites) == 1:
        results = [run_suite(s) for s in cfg.suites]
    else:
        with ThreadPoolExecutor(max_workers=min(cfg.workers, len(cfg.suites))) as pool:
            results = list(pool.map(run_suite, cfg.suites))
    return sorted((r for rs in results for r in rs), key=_sort_key)


def r_matrix_dump(cfg: SuiteConfig) -> list[dict]:
    """Dense R^{zeta,eta} on colour-matched irrep pairs, with (n1, n2) basis labels."""
    out = []
    for q in cfg.q_values:
        p = QParams(q, cfg.tol)
        f = RepFactory(p, cfg.perturb)
        for N1, N2 in itertools.product(_ns(cfg), repeat=2):
            for cols in itertools.product(C, repeat=2):
                if not cfg.wants(cols):
                    continue
                R = rmatrix.r_coloured(cols, f.dqa(N1, cols[0]), f.dqa(N2, cols[1]), p)
                out.append({"name": "R", "q": q, "N": [N1, N2], "colours": list(cols),
                            "basis": [[a, b] for a in range(N1 + 1) for b in range(N2 + 1)],
                            "data": R.tolist()})
    return out
