"""Adaptive numerical integration engines.

Two small engines with explicit budgets:

* Gauss-Kronrod 7/15 with a caller-supplied initial panel list.  Used by the
  transform oracle, where the panels are pre-split below the oscillation
  scale so the embedded error estimate is trustworthy.
* Adaptive Simpson with a Richardson error estimate, for the weighted-norm
  integrals.

Both refine the worst panel first and raise :class:`ConvergenceError` instead
of ever returning a silently inaccurate value.
"""

import heapq
from typing import Callable

from .errors import ConvergenceError

# node, Gauss weight, Kronrod weight
_GK15 = (
    (+0.949107912342759, 0.129484966168870, 0.063092092629979),
    (-0.949107912342759, 0.129484966168870, 0.063092092629979),
    (+0.741531185599394, 0.279705391489277, 0.140653259715525),
    (-0.741531185599394, 0.279705391489277, 0.140653259715525),
    (+0.405845151377397, 0.381830050505119, 0.190350578064785),
    (-0.405845151377397, 0.381830050505119, 0.190350578064785),
    (0.000000000000000, 0.417959183673469, 0.209482141084728),
    (+0.991455371120813, 0.000000000000000, 0.022935322010529),
    (-0.991455371120813, 0.000000000000000, 0.022935322010529),
    (+0.864864423359769, 0.000000000000000, 0.104790010322250),
    (-0.864864423359769, 0.000000000000000, 0.104790010322250),
    (+0.586087235467691, 0.000000000000000, 0.169004726639267),
    (-0.586087235467691, 0.000000000000000, 0.169004726639267),
    (+0.207784955007898, 0.000000000000000, 0.204432940075298),
    (-0.207784955007898, 0.000000000000000, 0.204432940075298),
)


def _gk_panel(fn, a: float, b: float):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    acc_g = 0.0j
    acc_k = 0.0j
    for xi, wg, wk in _GK15:
        fx = fn(mid + half * xi)
        if wg != 0.0:
            acc_g += wg * fx
        acc_k += wk * fx
    value = acc_k * half
    err = abs((acc_k - acc_g) * half)
    return value, err


def gauss_kronrod_adaptive(
    fn: Callable[[float], complex],
    panels: list[tuple[float, float]],
    abs_tol: float,
    max_panels: int = 65536,
) -> tuple[complex, float]:
    """Integrate fn over the given disjoint panels to absolute accuracy abs_tol.

    Returns (integral, error_estimate).  The worst panel is bisected until
    the summed estimate drops below abs_tol or the panel budget is exhausted.
    """
    if len(panels) > max_panels:
        raise ConvergenceError(
            f"initial panel count {len(panels)} exceeds the budget of {max_panels}"
        )
    heap = []
    counter = 0
    total = 0.0j
    total_err = 0.0
    for a, b in panels:
        val, err = _gk_panel(fn, a, b)
        heapq.heappush(heap, (-err, counter, a, b, val, err))
        counter += 1
        total += val
        total_err += err
    while total_err > abs_tol:
        if len(heap) >= max_panels:
            raise ConvergenceError(
                f"quadrature did not reach tolerance {abs_tol:g} within "
                f"{max_panels} panels (error estimate {total_err:g})"
            )
        neg_err, _, a, b, val, err = heapq.heappop(heap)
        total -= val
        total_err -= err
        mid = 0.5 * (a + b)
        for lo, hi in ((a, mid), (mid, b)):
            v, e = _gk_panel(fn, lo, hi)
            heapq.heappush(heap, (-e, counter, lo, hi, v, e))
            counter += 1
            total += v
            total_err += e
    return total, total_err


def _simpson_panel(fn, a: float, b: float, fa: float, fm: float, fb: float):
    # Richardson: compare one Simpson step against two half-steps.
    mid = 0.5 * (a + b)
    lm = 0.5 * (a + mid)
    rm = 0.5 * (mid + b)
    flm = fn(lm)
    frm = fn(rm)
    h = b - a
    coarse = h / 6.0 * (fa + 4.0 * fm + fb)
    fine = h / 12.0 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb)
    err = abs(fine - coarse) / 15.0
    value = fine + (fine - coarse) / 15.0
    return value, err, flm, frm


def simpson_adaptive(
    fn: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float,
    abs_tol: float = 0.0,
    max_panels: int = 2**20,
    initial_splits: int = 1,
) -> tuple[float, float]:
    """Adaptive Simpson integral of fn over [a, b].

    Stops when the summed Richardson estimate is below
    ``abs_tol + rel_tol * |integral|``; raises on budget exhaustion.
    """
    if b <= a:
        return 0.0, 0.0
    initial_splits = max(1, initial_splits)
    heap = []
    counter = 0
    total = 0.0
    total_err = 0.0

    def push(lo, hi, flo, fmid, fhi):
        nonlocal counter, total, total_err
        val, err, flm, frm = _simpson_panel(fn, lo, hi, flo, fmid, fhi)
        heapq.heappush(heap, (-err, counter, lo, hi, flo, fmid, fhi, flm, frm, val, err))
        counter += 1
        total += val
        total_err += err

    edges = [a + (b - a) * i / initial_splits for i in range(initial_splits + 1)]
    edges[-1] = b
    edge_vals = [fn(x) for x in edges]
    for i in range(len(edges) - 1):
        lo, hi = edges[i], edges[i + 1]
        if hi <= lo:
            continue
        push(lo, hi, edge_vals[i], fn(0.5 * (lo + hi)), edge_vals[i + 1])
    while total_err > abs_tol + rel_tol * abs(total):
        if len(heap) >= max_panels:
            raise ConvergenceError(
                f"quadrature did not reach relative tolerance {rel_tol:g} within "
                f"{max_panels} panels (error estimate {total_err:g})"
            )
        _, _, lo, hi, flo, fmid, fhi, flm, frm, val, err = heapq.heappop(heap)
        total -= val
        total_err -= err
        mid = 0.5 * (lo + hi)
        push(lo, mid, flo, flm, fmid)
        push(mid, hi, fmid, frm, fhi)
    return total, total_err
