"""Crest counting and minimal unimodal decompositions.

A function crests once when it is nondecreasing left of some point b and
nonincreasing right of it (monotone in the wider sense: plateaus are fine).
The crest count of a piecewise function is the least number of nonnegative
summands with almost disjoint supports, each cresting once, that add up to
it.

For the representations used here the count has a closed form: pad the piece
value sequence (node value sequence for piecewise-linear input) with zeros at
both ends, collapse repeated values, and count strict descent-to-ascent
transitions; the count is one plus the number of those valleys.  Plateaus
never create or terminate a valley.  The independent
:func:`brute_force_crests` oracle minimizes over every contiguous-cell
partition at piece boundaries; for step functions cells at piece boundaries
suffice, because a once-cresting summand has an interval of positivity and a
cell edge inside a constant piece can always be slid to the piece boundary
without breaking unimodality of either neighbor.
"""

import math
from dataclasses import dataclass

from .errors import ValidationError, ZeroFunctionError
from .piecewise import (
    PiecewiseFunction,
    PiecewiseLinearFunction,
    StepFunction,
    make_step,
)

__all__ = [
    "CrestReport",
    "count_crests",
    "decompose",
    "brute_force_crests",
]


@dataclass(frozen=True)
class CrestReport:
    """A witness decomposition achieving the minimal crest count."""

    count: int
    cut_points: tuple[float, ...]
    crest_locations: tuple[float, ...]
    pieces: tuple[PiecewiseFunction, ...]

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "cut_points": list(self.cut_points),
            "crest_locations": list(self.crest_locations),
        }


def _collapse(seq):
    out = []
    for v in seq:
        if not out or out[-1] != v:
            out.append(v)
    return out


def _valley_count(values) -> int:
    s = _collapse([0.0, *values, 0.0])
    return sum(1 for i in range(1, len(s) - 1) if s[i - 1] > s[i] < s[i + 1])


def _profile(f: PiecewiseFunction):
    if isinstance(f, StepFunction):
        return f.values
    if isinstance(f, PiecewiseLinearFunction):
        return f.node_values
    raise ValidationError(f"cannot count crests of object of type {type(f).__name__}")


def _reject_zero(f: PiecewiseFunction) -> None:
    if f.is_zero:
        raise ZeroFunctionError("the crest count of the zero function is not defined")


def count_crests(f: PiecewiseFunction) -> int:
    """Minimal number of once-cresting summands for a nonzero input."""
    _reject_zero(f)
    return 1 + _valley_count(_profile(f))


def decompose(f: PiecewiseFunction) -> CrestReport:
    """Cut f at one point per valley and report the resulting summands.

    Cuts sit at the midpoint of a zero-valued valley and at the leftmost
    minimizing point otherwise; each summand's crest location is its leftmost
    maximizer.  The summands restrict f to the cells between cuts, so they
    are nonnegative, sum to f, and overlap only at the cuts themselves.
    """
    _reject_zero(f)
    if isinstance(f, StepFunction):
        cuts = _step_cuts(f)
        pieces = _split_step(f, cuts)
        crest_locations = tuple(_step_leftmost_max(p) for p in pieces)
    else:
        cuts = _linear_cuts(f)
        pieces = _split_linear(f, cuts)
        crest_locations = tuple(_linear_leftmost_max(p) for p in pieces)
    return CrestReport(
        count=len(pieces),
        cut_points=cuts,
        crest_locations=crest_locations,
        pieces=pieces,
    )


def _step_cuts(f: StepFunction) -> tuple[float, ...]:
    vals = f.values
    bp = f.breakpoints
    n = len(vals)
    cuts = []
    for j in range(n):
        left = vals[j - 1] if j > 0 else 0.0
        right = vals[j + 1] if j < n - 1 else 0.0
        if left > vals[j] < right:
            if vals[j] == 0.0:
                cuts.append(0.5 * (bp[j] + bp[j + 1]))
            else:
                cuts.append(bp[j])
    return tuple(cuts)


def _linear_cuts(f: PiecewiseLinearFunction) -> tuple[float, ...]:
    # collapse plateau runs of node values, remembering node index ranges
    runs: list[tuple[int, int, float]] = []
    for i, v in enumerate(f.node_values):
        if runs and runs[-1][2] == v:
            runs[-1] = (runs[-1][0], i, v)
        else:
            runs.append((i, i, v))
    cuts = []
    for k, (i0, i1, v) in enumerate(runs):
        left = runs[k - 1][2] if k > 0 else 0.0
        right = runs[k + 1][2] if k < len(runs) - 1 else 0.0
        if left > v < right:
            if v == 0.0:
                cuts.append(0.5 * (f.nodes[i0] + f.nodes[i1]))
            else:
                cuts.append(f.nodes[i0])
    return tuple(cuts)


def _split_step(f: StepFunction, cuts) -> tuple[StepFunction, ...]:
    edges = [-math.inf, *cuts, math.inf]
    out = []
    for lo, hi in zip(edges, edges[1:]):
        breakpoints = []
        values = []
        for a, b, v in f.pieces():
            s, e = max(a, lo), min(b, hi)
            if e <= s:
                continue
            if not breakpoints:
                breakpoints.append(s)
            values.append(v)
            breakpoints.append(e)
        out.append(make_step(breakpoints, values))
    return tuple(out)


def _split_linear(f: PiecewiseLinearFunction, cuts) -> tuple[PiecewiseLinearFunction, ...]:
    edges = [f.nodes[0], *cuts, f.nodes[-1]]
    out = []
    for lo, hi in zip(edges, edges[1:]):
        xs = [lo]
        for t in f.nodes:
            if lo < t < hi:
                xs.append(t)
        xs.append(hi)
        ys = [f.value_on_line(x) for x in xs]
        out.append(PiecewiseLinearFunction(tuple(xs), tuple(ys)))
    return tuple(out)


def _step_leftmost_max(p: StepFunction) -> float:
    best = max(p.values)
    for a, _, v in p.pieces():
        if v == best:
            return a
    raise AssertionError("unreachable")


def _linear_leftmost_max(p: PiecewiseLinearFunction) -> float:
    best = max(p.node_values)
    for t, v in zip(p.nodes, p.node_values):
        if v == best:
            return t
    raise AssertionError("unreachable")


def _is_unimodal(values) -> bool:
    # nondecreasing then nonincreasing, as a function (zero outside the cell)
    falling = False
    prev = 0.0
    for v in [*values, 0.0]:
        if v > prev:
            if falling:
                return False
        elif v < prev:
            falling = True
        prev = v
    return True


def brute_force_crests(f: StepFunction, max_pieces: int = 10) -> int:
    """Exhaustive minimum over contiguous-cell partitions at piece boundaries.

    Ground truth for :func:`count_crests` on small step functions; the
    combinatorial budget rejects inputs with more than ``max_pieces``
    canonical pieces.
    """
    if not isinstance(f, StepFunction):
        raise ValidationError("the brute-force oracle handles step functions only")
    _reject_zero(f)
    vals = f.values
    n = len(vals)
    if n > max_pieces:
        raise ValidationError(
            f"too many pieces for the brute-force oracle ({n} > {max_pieces})"
        )
    best = n  # each piece alone is unimodal, so n cells always work
    for mask in range(1 << (n - 1)):
        cells = []
        start = 0
        for j in range(n - 1):
            if mask >> j & 1:
                cells.append(vals[start : j + 1])
                start = j + 1
        cells.append(vals[start:])
        if len(cells) < best and all(_is_unimodal(c) for c in cells):
            best = len(cells)
    return best
