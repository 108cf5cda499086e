"""Classical (q = 1) Clebsch-Gordan oracle shared by the CG and acceptance tests."""
import itertools
from math import factorial, sqrt

import numpy as np

from colourhopf.cg import admissible_totals


def racah(j1, m1, j2, m2, j, m):
    """Classical Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> by the Racah sum."""
    if m1 + m2 != m:
        return 0.0
    f = lambda x: factorial(int(round(x)))
    pre = sqrt((2 * j + 1) * f(j1 + j2 - j) * f(j1 - j2 + j) * f(-j1 + j2 + j) / f(j1 + j2 + j + 1))
    pre *= sqrt(f(j + m) * f(j - m) * f(j1 - m1) * f(j1 + m1) * f(j2 - m2) * f(j2 + m2))
    total = 0.0
    for k in range(0, int(round(j1 + j2 + j)) + 1):
        args = [k, j1 + j2 - j - k, j1 - m1 - k, j2 + m2 - k, j - j2 + m1 + k, j - j1 - m2 + k]
        if min(args) < -1e-9:
            continue
        denom = 1
        for a in args:
            denom *= f(a)
        total += (-1) ** k / denom
    return pre * total


def classical_table(N1, N2):
    """Rows |N, n> (n = 0 highest weight) in the left-major basis, classical phases."""
    j1, j2 = N1 / 2, N2 / 2
    blocks = {}
    for N in admissible_totals(N1, N2):
        j = N / 2
        m = np.zeros((N + 1, (N1 + 1) * (N2 + 1)))
        for n in range(N + 1):
            for n1, n2 in itertools.product(range(N1 + 1), range(N2 + 1)):
                m[n, n1 * (N2 + 1) + n2] = racah(j1, j1 - n1, j2, j2 - n2, j, j - n)
        blocks[N] = m
    return blocks
