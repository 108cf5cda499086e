"""
Coloured R-matrices and the Yang-Baxter equation
================================================

Each ordered pair of colours gives an R-matrix on the product of two irreps.
On matched colours it reproduces the su_q(2) R-matrix; with three colours
the factors satisfy the coloured Yang-Baxter equation.
"""

import itertools

import numpy as np

from colourhopf import QParams, dqa_rep, suq2_rep
from colourhopf import rmatrix

p = QParams(0.5)

# spin-1/2: the familiar 4 x 4 matrix
R = rmatrix.r_su(suq2_rep(1, p), suq2_rep(1, p), p)
print("su_q(2) R on two doublets:\n", np.round(R, 6))

# the coloured construction agrees on matched colours
Rc = rmatrix.r_coloured((-1, -1), dqa_rep(1, -1, p), dqa_rep(1, -1, p), p)
print("coloured (-,-) minus su_q(2):", np.max(np.abs(Rc - R)))

# coloured YBE over all eight colour triples on 2 x 3 x 4 dimensional spaces
for cols in itertools.product((1, -1), repeat=3):
    legs = [dqa_rep(N, c, p) for N, c in zip((1, 2, 3), cols)]
    rep = rmatrix.check_cybe(*cols, *legs, p)
    print(f"colours {cols}: YBE residual {rep.residual:.1e}")

# R intertwines the coloured coproduct with its opposite
rep = rmatrix.check_intertwiner(1, -1, 1, dqa_rep(2, 1, p), dqa_rep(2, -1, p), p)
print("intertwiner residual:", rep.residual)

# the series defining R stops after min(N1, N2) + 1 terms since J+ and J- are nilpotent
_, order = rmatrix.r_coloured((1, -1), dqa_rep(3, 1, p), dqa_rep(2, -1, p), p, return_order=True)
print("series terms used for 4 x 3:", order)
