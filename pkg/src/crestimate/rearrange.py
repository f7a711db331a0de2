"""Decreasing rearrangement, its partial integrals, and weighted norms.

The rearrangement of a step function is computed by sorting value/measure
pairs (value descending, ties kept in left-to-right order) and concatenating
the measures from the origin; that is exact in the sense that no arithmetic
beyond sums of the original piece widths is performed.

For a piecewise-linear function the distribution function
``alpha -> |{f > alpha}|`` is itself piecewise linear in alpha, with
breakpoints only at node values, so its generalized inverse -- the
rearrangement -- is piecewise linear in x and is constructed analytically:
a node at measure |{f > lam}| for every level lam, plus a plateau of length
|{f = lam}| where f is flat at lam.  Nothing is sampled.
"""

import math
from dataclasses import dataclass

from .errors import ValidationError
from .piecewise import (
    PiecewiseFunction,
    PiecewiseLinearFunction,
    StepFunction,
    integrate,
    make_step,
)
from .quadrature import simpson_adaptive

__all__ = [
    "Rearrangement",
    "distribution",
    "rearrangement",
    "rearrangement_integral",
    "lorentz_lambda_norm",
]

_LORENTZ_REL_TOL = 1e-9


def distribution(f: PiecewiseFunction, alpha: float) -> float:
    """Lebesgue measure of the super-level set {x : f(x) > alpha}, alpha > 0.

    Exact closed form per piece; sums are correctly rounded (fsum), so the
    result is independent of piece order.
    """
    if alpha <= 0.0:
        raise ValidationError("alpha must be positive")
    return _distribution_any(f, alpha)


def _distribution_any(f: PiecewiseFunction, alpha: float) -> float:
    if isinstance(f, StepFunction):
        return math.fsum(b - a for a, b, v in f.pieces() if v > alpha)
    if isinstance(f, PiecewiseLinearFunction):
        return math.fsum(
            _segment_superlevel(t0, t1, y0, y1, alpha) for t0, t1, y0, y1 in f.segments()
        )
    raise ValidationError(f"cannot measure object of type {type(f).__name__}")


def _segment_superlevel(t0, t1, y0, y1, alpha) -> float:
    above0 = y0 > alpha
    above1 = y1 > alpha
    if above0 and above1:
        return t1 - t0
    if not above0 and not above1:
        return 0.0
    crossing = t0 + (alpha - y0) * (t1 - t0) / (y1 - y0)
    return t1 - crossing if above1 else crossing - t0


def _plateau_measure(f: PiecewiseLinearFunction, level: float) -> float:
    return math.fsum(
        t1 - t0 for t0, t1, y0, y1 in f.segments() if y0 == level and y1 == level
    )


@dataclass(frozen=True)
class Rearrangement:
    """The decreasing rearrangement f*, nonincreasing on [0, oo)."""

    star: PiecewiseFunction

    def integral_up_to(self, t: float) -> float:
        return integrate(self.star, 0.0, t)

    def measure_above(self, alpha: float) -> float:
        return distribution(self.star, alpha)


def rearrangement(f: PiecewiseFunction) -> Rearrangement:
    """Compute f*, equimeasurable with f and nonincreasing from the origin."""
    if isinstance(f, StepFunction):
        return Rearrangement(_step_star(f))
    if isinstance(f, PiecewiseLinearFunction):
        return Rearrangement(_linear_star(f))
    raise ValidationError(f"cannot rearrange object of type {type(f).__name__}")


def _step_star(f: StepFunction) -> StepFunction:
    pairs = [(v, b - a) for a, b, v in f.pieces() if v > 0.0]
    if not pairs:
        return make_step((0.0, 1.0), (0.0,))
    pairs.sort(key=lambda p: -p[0])  # stable: equal values keep their order
    breakpoints = [0.0]
    values = []
    for v, m in pairs:
        values.append(v)
        breakpoints.append(breakpoints[-1] + m)
    return make_step(breakpoints, values)


def _linear_star(f: PiecewiseLinearFunction) -> PiecewiseLinearFunction:
    if f.is_zero:
        return PiecewiseLinearFunction((0.0, 1.0), (0.0, 0.0))
    levels = sorted({0.0, *f.node_values})
    top = levels[-1]
    xs = [0.0]
    ys = [top]

    def append(x: float, y: float) -> None:
        # the measures are nondecreasing along descending levels; a band whose
        # mass rounds away (or loses an ulp) collapses onto the previous node
        if x <= xs[-1]:
            ys[-1] = y
            return
        xs.append(x)
        ys.append(y)

    top_plateau = _plateau_measure(f, top)
    if top_plateau > 0.0:
        append(top_plateau, top)
    for level in reversed(levels[:-1]):
        above = _distribution_any(f, level)
        append(above, level)
        if level > 0.0:
            plateau = _plateau_measure(f, level)
            if plateau > 0.0:
                append(above + plateau, level)
    return PiecewiseLinearFunction(tuple(xs), tuple(ys))


def rearrangement_integral(f: PiecewiseFunction, t: float) -> float:
    """Exact integral of f* over [0, t] for t > 0."""
    if t <= 0.0:
        raise ValidationError("t must be positive")
    return rearrangement(f).integral_up_to(t)


def lorentz_lambda_norm(f: PiecewiseFunction, v: StepFunction, p: float) -> float:
    """Weighted norm ( integral (f*)^p v )^(1/p) against a step weight v.

    Exact piecewise products when f* is a step function; adaptive quadrature
    (relative tolerance 1e-9) on each weight piece when f* is piecewise
    linear, split at the f* nodes so every panel is smooth.
    """
    if p <= 0.0:
        raise ValidationError("p must be positive")
    if not isinstance(v, StepFunction):
        raise ValidationError("the weight must be a step function")
    star = rearrangement(f).star
    if isinstance(star, StepFunction):
        total = math.fsum(
            (sv**p) * wv * (min(b, d) - max(a, c))
            for a, b, sv in star.pieces()
            if sv > 0.0
            for c, d, wv in v.pieces()
            if wv > 0.0 and min(b, d) > max(a, c)
        )
        return total ** (1.0 / p)
    total = 0.0
    cut_candidates = list(star.nodes)
    for c, d, wv in v.pieces():
        if wv == 0.0:
            continue
        lo = max(c, 0.0)
        hi = min(d, star.support_max)
        if hi <= lo:
            continue
        cuts = [lo] + [x for x in cut_candidates if lo < x < hi] + [hi]
        for s0, s1 in zip(cuts, cuts[1:]):
            part, _ = simpson_adaptive(
                lambda x: star.value_on_line(x) ** p, s0, s1, rel_tol=_LORENTZ_REL_TOL
            )
            total += wv * part
    return total ** (1.0 / p)
