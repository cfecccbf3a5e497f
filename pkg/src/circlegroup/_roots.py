"""Vectorized root finding for increasing functions."""

import numpy as np

from .errors import ConvergenceFailure


def solve_increasing(f, df, y, lo, hi, x0=None, tol=1e-12, maxiter=50, fdf=None):
    """Solve ``f(x) = y`` elementwise for increasing ``f`` bracketed by ``[lo, hi]``.

    Newton steps are taken from ``x0``; any node whose Newton iterate leaves the
    bracket or fails to converge within ``maxiter`` steps is finished by
    bisection on its bracket.  ``fdf``, if given, returns ``(f(x), df(x))`` in
    one call and is used for the Newton steps.
    """
    if fdf is None:
        def fdf(t):
            return f(t), df(t)

    y = np.asarray(y, dtype=float)
    lo = np.broadcast_to(np.asarray(lo, dtype=float), y.shape).copy()
    hi = np.broadcast_to(np.asarray(hi, dtype=float), y.shape).copy()
    x = 0.5 * (lo + hi) if x0 is None else np.clip(np.asarray(x0, dtype=float), lo, hi)
    done = np.zeros(y.shape, dtype=bool)
    for _ in range(maxiter):
        idx = np.nonzero(~done)[0]
        if idx.size == 0:
            break
        xi = x[idx]
        fx, d = fdf(xi)
        r = fx - y[idx]
        # shrink brackets with the sign information we already paid for
        pos = r > 0
        hi[idx[pos]] = np.minimum(hi[idx[pos]], xi[pos])
        lo[idx[~pos]] = np.maximum(lo[idx[~pos]], xi[~pos])
        conv = np.abs(r) <= tol * (1.0 + np.abs(y[idx]))
        done[idx[conv]] = True
        with np.errstate(divide="ignore", invalid="ignore"):
            step = xi - r / d
        bad = ~np.isfinite(step) | (step <= lo[idx]) | (step >= hi[idx])
        step[bad] = 0.5 * (lo[idx[bad]] + hi[idx[bad]])
        x[idx[~conv]] = step[~conv]
    idx = np.nonzero(~done)[0]
    if idx.size:
        x[idx] = _bisect(f, y[idx], lo[idx], hi[idx], tol)
    return x


def _bisect(f, y, lo, hi, tol):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        r = f(mid) - y
        if np.all(np.abs(r) <= tol * (1.0 + np.abs(y))) or np.all(hi - lo <= 4 * np.finfo(float).eps * (1 + np.abs(mid))):
            return mid
        pos = r > 0
        hi = np.where(pos, mid, hi)
        lo = np.where(pos, lo, mid)
    mid = 0.5 * (lo + hi)
    if np.any(np.abs(f(mid) - y) > 1e3 * tol * (1.0 + np.abs(y))):
        raise ConvergenceFailure("Newton and bisection both failed to converge")
    return mid
