#!/usr/bin/env python3
"""Independent ILP oracle for (partial) burning numbers of small grids.

Solves the covering formulation with scipy's MILP (HiGHS): one binary per
(radius, center); at most one center per radius in {0..k-1}; every target
vertex covered by some chosen ball. The smallest feasible k is b(G, S).
Used once to freeze regression constants in the C++ test suites.
"""
import itertools
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def feasible(m, n, targets, k):
    verts = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    nv = len(verts)
    nvar = k * nv
    rows = []
    lb = []
    ub = []
    for rad in range(k):
        row = np.zeros(nvar)
        row[rad * nv:(rad + 1) * nv] = 1
        rows.append(row)
        lb.append(0)
        ub.append(1)
    for (tr, tc) in targets:
        row = np.zeros(nvar)
        for rad in range(k):
            for j, (r, c) in enumerate(verts):
                if abs(r - tr) + abs(c - tc) <= rad:
                    row[rad * nv + j] = 1
        rows.append(row)
        lb.append(1)
        ub.append(np.inf)
    res = milp(c=np.zeros(nvar), constraints=LinearConstraint(np.array(rows), lb, ub),
               integrality=np.ones(nvar), bounds=Bounds(0, 1))
    return res.status == 0


def burning_number(m, n, heights=None):
    if heights is None:
        targets = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    else:
        targets = [(h, c) for h in heights for c in range(1, n + 1)]
    k = 1
    while not feasible(m, n, targets, k):
        k += 1
    return k


if __name__ == "__main__":
    mode = sys.argv[1] if len(sys.argv) > 1 else "table"
    if mode == "table":
        for m in range(1, 5):
            print(m, [burning_number(m, n) for n in range(1, 21)], flush=True)
    elif mode == "partial":
        m, n = int(sys.argv[2]), int(sys.argv[3])
        hs = [int(x) for x in sys.argv[4].split(",")]
        print(burning_number(m, n, hs))
    else:
        m, n = int(sys.argv[2]), int(sys.argv[3])
        print(burning_number(m, n))
