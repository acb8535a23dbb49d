"""Small numerical routines: adaptive Simpson quadrature, a fourth-order
derivative stencil, and bisection for increasing functions."""

from __future__ import annotations

from typing import Callable

PANEL_TOL = 1e-10


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = PANEL_TOL
) -> float:
    """Integrate f over [a, b], refining panels until the Richardson error
    estimate drops below the (halved per split) absolute tolerance."""
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_step(f, a, fa, b, fb, m, fm, whole, tol)


def _simpson_step(f, a, fa, b, fb, m, fm, whole, tol, depth=0):
    left_m = 0.5 * (a + m)
    right_m = 0.5 * (m + b)
    fl, fr = f(left_m), f(right_m)
    left = (m - a) / 6.0 * (fa + 4.0 * fl + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * fr + fb)
    err = left + right - whole
    if abs(err) <= 15.0 * tol or depth >= 50:
        return left + right + err / 15.0
    return _simpson_step(
        f, a, fa, m, fm, left_m, fl, left, 0.5 * tol, depth + 1
    ) + _simpson_step(f, m, fm, b, fb, right_m, fr, right, 0.5 * tol, depth + 1)


def derivative(f: Callable[[float], float], x: float, h: float = 1e-3) -> float:
    """Fourth-order central five-point stencil."""
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h)


def bisect_increasing(
    f: Callable[[float], float], target: float, lo: float, hi: float, tol: float = 1e-14
) -> float:
    """Solve f(x) = target for increasing f, to absolute tolerance tol on x.

    The bracket is widened geometrically if it does not already straddle the
    target.
    """
    while f(hi) < target:
        hi *= 2.0
    while f(lo) > target:
        lo *= 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
