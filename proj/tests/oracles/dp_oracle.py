#!/usr/bin/env python3
"""Reference p-spreads of the unit square by adaptive double quadrature.

Each ordered edge pair is integrated separately with scipy's dblquad; pairs on
the same edge are split along the diagonal so the |s - t|^p singularity sits
on a boundary. A midpoint double sum is printed alongside for p > 0 as a sanity check.
"""
import math
import warnings

import numpy as np
from scipy import integrate

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def edge(i):
    a = np.array(SQUARE[i])
    b = np.array(SQUARE[(i + 1) % 4])
    return a, b - a


def g(r, p):
    return math.log(r) if p == 0 else r ** p


def pair_mean(i, j, p):
    (a, d), (b, e) = edge(i), edge(j)

    def f(t, s):
        x = a + s * d - b - t * e
        return g(math.hypot(x[0], x[1]), p)

    opts = dict(epsabs=1e-13, epsrel=1e-12)
    if i == j:
        lo, _ = integrate.dblquad(f, 0, 1, lambda s: 0.0, lambda s: s, **opts)
        hi, _ = integrate.dblquad(f, 0, 1, lambda s: s, lambda s: 1.0, **opts)
        return lo + hi
    v, _ = integrate.dblquad(f, 0, 1, lambda s: 0.0, lambda s: 1.0, **opts)
    return v


def spread(p):
    m = sum(pair_mean(i, j, p) for i in range(4) for j in range(4)) / 16.0
    return math.exp(m) if p == 0 else m ** (1.0 / p)


def midpoint(p, k=2000):
    pts = []
    for i in range(4):
        a, d = edge(i)
        s = (np.arange(k) + 0.5) / k
        pts.append(a[None, :] + s[:, None] * d[None, :])
    x = np.concatenate(pts)
    total = 0.0
    for row in np.array_split(x, 16):
        r = np.linalg.norm(row[:, None, :] - x[None, :, :], axis=2)
        r = r[r > 0]
        total += np.sum(np.log(r)) if p == 0 else np.sum(r ** p)
    m = total / (len(x) ** 2)
    return math.exp(m) if p == 0 else m ** (1.0 / p)


if __name__ == "__main__":
    warnings.simplefilter("ignore", integrate.IntegrationWarning)
    for p in (1.0, -0.5, 0.0, 2.0, 4.0):
        # The midpoint sum drops the singular diagonal cells, so it is only
        # meaningful as a check for p > 0.
        check = f"  midpoint {midpoint(p):.8f}" if p > 0 else ""
        print(f"p={p:5}: quadrature {spread(p):.15f}{check}")
    print(f"closed form D2 = sqrt(2/3) = {math.sqrt(2.0 / 3.0):.15f}")
