#!/usr/bin/env python3
"""Dense-sampling references for rounded lattice polygons.

The rounded curve is rebuilt here from the corner construction (trim by r on
both sides of each turning vertex, quarter circle centred at v - r a + r b)
and sampled uniformly in arclength. Printed values are frozen into
tests/test_smoothfunc.cpp and tests/test_certify.cpp.
"""
import math
from pathlib import Path

import numpy as np

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    pts = []
    for line in (DATA / name).read_text().splitlines():
        line = line.split("#")[0].strip()
        if line:
            pts.append([int(t) for t in line.split()])
    return np.array(pts, dtype=float)


def sample(poly, r, per_unit):
    """Arclength-uniform midpoint samples of the rounded curve."""
    n = len(poly)
    pts = []
    turning = [i for i in range(n)
               if not np.array_equal(poly[i] - poly[i - 1], poly[(i + 1) % n] - poly[i])]
    for k, i in enumerate(turning):
        v = poly[i]
        a = v - poly[i - 1]
        b = poly[(i + 1) % n] - v
        c = v - r * a + r * b
        m = max(4, int(round(per_unit * r * math.pi / 2)))
        th = (np.arange(m) + 0.5) / m * (math.pi / 2)
        # theta = 0 is v - r a, theta = pi/2 is v + r b.
        pts.append(c[None, :] + r * (np.cos(th)[:, None] * (-b)[None, :] + np.sin(th)[:, None] * a[None, :]))
        j = turning[(k + 1) % len(turning)]
        w = poly[j]
        a2 = w - poly[j - 1]
        p0, p1 = v + r * b, w - r * a2
        length = np.linalg.norm(p1 - p0)
        m = max(1, int(round(per_unit * length)))
        s = (np.arange(m) + 0.5) / m
        pts.append(p0[None, :] + s[:, None] * (p1 - p0)[None, :])
    return np.concatenate(pts)


def length(poly, r):
    n = len(poly)
    k = sum(1 for i in range(n)
            if not np.array_equal(poly[i] - poly[i - 1], poly[(i + 1) % n] - poly[i]))
    return n - k * (2 * r - math.pi * r / 2)


def d2(x):
    c = x.mean(axis=0)
    return math.sqrt(2.0 * np.mean(np.sum((x - c) ** 2, axis=1)))


def diameter(x):
    best = 0.0
    for row in np.array_split(x, max(1, len(x) // 2000)):
        best = max(best, float(np.max(np.linalg.norm(row[:, None, :] - x[None, :, :], axis=2))))
    return best


def min_distance_excluding(x, total, sep):
    """Smallest distance between samples at arclength separation >= sep."""
    n = len(x)
    s = np.arange(n) * (total / n)
    best = math.inf
    for idx in np.array_split(np.arange(n), max(1, n // 2000)):
        d = np.linalg.norm(x[idx][:, None, :] - x[None, :, :], axis=2)
        gap = np.abs(s[idx][:, None] - s[None, :])
        gap = np.minimum(gap, total - gap)
        d[gap < sep] = math.inf
        best = min(best, float(d.min()))
    return best


def main():
    for name in ("unit_square.txt", "trefoil24.txt"):
        poly = load(name)
        r = 0.25
        L = length(poly, r)
        dense = sample(poly, r, 1_000_000 / L)
        medium = sample(poly, r, 12_000 / L)
        print(f"{name}: L={L:.12f} samples={len(dense)}")
        print(f"  D2 (dense)        {d2(dense):.10f}")
        print(f"  diameter (medium) {diameter(medium):.10f}")
        print(f"  min distance at separation >= pi r (medium) {min_distance_excluding(medium, L, math.pi * r):.10f}")


if __name__ == "__main__":
    main()
