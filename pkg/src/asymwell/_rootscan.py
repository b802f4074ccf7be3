"""Sign-change bracketing and vectorized bisection shared by both eigensolvers."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

_EPS = np.finfo(float).eps


def scan_step(a: float, b: float) -> float:
    """Default energy scan resolution.

    The level spacing of the enclosing flat well of width (a + b) lower-bounds
    the root separation, so half its ground-state energy is a safe cell size;
    0.1 caps the cell for narrow wells.
    """
    return min(0.1, math.pi**2 / (2.0 * (a + b) ** 2))


def bracket_and_bisect(
    fn: Callable[[np.ndarray], np.ndarray],
    e_max: float,
    step: float,
    tol_rel: float,
) -> list[float]:
    """All odd-multiplicity roots of ``fn`` in (0, e_max], in increasing order.

    ``fn`` must accept a 1-D energy array and return function values of the
    same shape.  Cells of width ``step`` are scanned for sign changes and each
    bracket is refined by bisection until the interval width drops below
    ``tol_rel * max(1, E)`` (floored at a few ulp).  Roots landing exactly on
    a grid point are returned as-is.
    """
    n_cells = int(math.ceil(e_max / step))
    grid = np.minimum(step * np.arange(1, n_cells + 1), e_max)
    grid = np.unique(grid)
    if len(grid) < 2:
        return []
    vals = fn(grid)

    exact: list[float] = [float(g) for g, v in zip(grid, vals) if v == 0.0]
    sign = np.sign(vals)
    nz = sign != 0
    # a sign change across a cell whose endpoints are both nonzero
    flips = nz[:-1] & nz[1:] & (sign[:-1] != sign[1:])
    lo = grid[:-1][flips].copy()
    hi = grid[1:][flips].copy()
    flo = vals[:-1][flips].copy()

    active = np.ones(lo.shape, dtype=bool)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        tol = np.maximum(tol_rel * np.maximum(1.0, mid), 8.0 * _EPS * np.maximum(1.0, mid))
        active &= (hi - lo) > tol
        if not active.any():
            break
        fm = np.empty_like(mid)
        fm[active] = fn(mid[active])
        hit = active & (fm == 0.0)
        lo[hit] = mid[hit]
        hi[hit] = mid[hit]
        active &= ~hit
        same = active & (np.sign(fm) == np.sign(flo))
        lo[same] = mid[same]
        flo[same] = fm[same]
        other = active & ~same
        hi[other] = mid[other]
    roots = [float(0.5 * (l + h)) for l, h in zip(lo, hi)] + exact
    return sorted(roots)


def count_sign_changes(values: np.ndarray) -> int:
    """Sign alternations of the nonzero entries (tangential zeros ignored)."""
    nz = values[values != 0.0]
    if nz.size < 2:
        return 0
    s = np.sign(nz)
    return int(np.sum(s[1:] != s[:-1]))
