"""Numerical verification of su_q(2), A_q^+(1) and its two-colour Hopf structure."""
from .errors import *  # noqa: F401,F403
from .qfunc import QParams, COLOURS, check_colour
from .report import CheckReport
from .reps import Algebra, RepLabel, GeneratorRep, suq2_rep, dqa_rep, dqa_rep_via_map

__version__ = "0.1.0"
