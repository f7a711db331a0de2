"""Exact piecewise-constant and piecewise-linear functions on the line.

The two representations share conventions:

* Half-open evaluation.  A step function takes ``values[i]`` on
  ``[breakpoints[i], breakpoints[i+1])`` and is zero outside
  ``[breakpoints[0], breakpoints[-1])``.  A piecewise-linear function
  interpolates its nodes for ``nodes[0] <= x < nodes[-1]`` and is zero
  outside; a nonzero boundary node value therefore denotes a jump at that
  endpoint (such functions arise as decreasing rearrangements, which live on
  ``[0, oo)`` and may start at a positive value).
* Everything is immutable, nonnegative and compactly supported, so every
  integral below is finite and computed in closed form per piece.  No
  quadrature is involved anywhere in this module.

Step functions are kept canonical: adjacent pieces with equal values are
merged and zero-valued leading/trailing pieces are trimmed (an identically
zero function keeps a single zero piece).  Canonical form makes equality
comparisons and structural monotonicity checks reliable.
"""

import csv
import io
import math
import statistics
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ValidationError

__all__ = [
    "StepFunction",
    "PiecewiseLinearFunction",
    "PiecewiseFunction",
    "make_step",
    "evaluate",
    "integrate",
    "from_samples",
    "is_nonincreasing_on_halfline",
    "require_nonincreasing_on_halfline",
    "function_to_json_dict",
    "function_from_json_dict",
    "samples_from_csv_text",
]


def _check_finite(name: str, xs: Sequence[float]) -> None:
    if not all(math.isfinite(x) for x in xs):
        raise ValidationError(f"{name} must be finite")


def _check_increasing(name: str, xs: Sequence[float]) -> None:
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValidationError(f"{name} must be strictly increasing")


def _check_nonnegative(name: str, ys: Sequence[float]) -> None:
    if any(y < 0.0 for y in ys):
        raise ValidationError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class StepFunction:
    """Nonnegative step function, canonical and zero outside its breakpoints."""

    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        bp = tuple(float(x) for x in self.breakpoints)
        vals = tuple(float(v) for v in self.values)
        if len(bp) != len(vals) + 1:
            raise ValidationError(
                "expected len(breakpoints) == len(values) + 1, got "
                f"{len(bp)} breakpoints for {len(vals)} values"
            )
        if not vals:
            raise ValidationError("a step function needs at least one piece")
        _check_finite("breakpoints", bp)
        _check_increasing("breakpoints", bp)
        _check_finite("values", vals)
        _check_nonnegative("values", vals)
        bp, vals = _canonical_step(bp, vals)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def pieces(self) -> Iterator[tuple[float, float, float]]:
        """Yield (left, right, value) for each piece."""
        for i, v in enumerate(self.values):
            yield self.breakpoints[i], self.breakpoints[i + 1], v

    @property
    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.values)

    @property
    def support_min(self) -> float:
        return self.breakpoints[0]

    @property
    def support_max(self) -> float:
        return self.breakpoints[-1]

    @property
    def total_integral(self) -> float:
        return math.fsum(
            v * (b - a) for a, b, v in self.pieces()
        )


def _canonical_step(bp, vals):
    # merge equal adjacent values
    new_bp = [bp[0]]
    new_vals = []
    for i, v in enumerate(vals):
        if new_vals and new_vals[-1] == v:
            new_bp[-1] = bp[i + 1]
            continue
        new_vals.append(v)
        new_bp.append(bp[i + 1])
    # trim zero-valued ends, but keep one piece for the zero function
    while len(new_vals) > 1 and new_vals[0] == 0.0:
        new_vals.pop(0)
        new_bp.pop(0)
    while len(new_vals) > 1 and new_vals[-1] == 0.0:
        new_vals.pop()
        new_bp.pop()
    return tuple(new_bp), tuple(new_vals)


@dataclass(frozen=True)
class PiecewiseLinearFunction:
    """Nonnegative piecewise-linear function, zero outside its node range.

    Node values at the boundary are usually zero, which makes the function
    continuous on the whole line; ingestion through :func:`from_samples`
    guarantees this.  A positive boundary value is permitted and represents a
    jump there (decreasing rearrangements need it).
    """

    nodes: tuple[float, ...]
    node_values: tuple[float, ...]

    def __post_init__(self):
        nd = tuple(float(x) for x in self.nodes)
        vals = tuple(float(v) for v in self.node_values)
        if len(nd) != len(vals):
            raise ValidationError(
                f"expected len(nodes) == len(node_values), got {len(nd)} != {len(vals)}"
            )
        if len(nd) < 2:
            raise ValidationError("a piecewise-linear function needs at least two nodes")
        _check_finite("nodes", nd)
        _check_increasing("nodes", nd)
        _check_finite("node_values", vals)
        _check_nonnegative("node_values", vals)
        object.__setattr__(self, "nodes", nd)
        object.__setattr__(self, "node_values", vals)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def segments(self) -> Iterator[tuple[float, float, float, float]]:
        """Yield (left, right, left_value, right_value) for each segment."""
        for i in range(len(self.nodes) - 1):
            yield (
                self.nodes[i],
                self.nodes[i + 1],
                self.node_values[i],
                self.node_values[i + 1],
            )

    def value_on_line(self, x: float) -> float:
        """Interpolated value treating the node range as closed.

        Unlike :func:`evaluate` this returns the boundary node values at the
        endpoints, which is what piece restrictions need.
        """
        nd = self.nodes
        if x <= nd[0]:
            return self.node_values[0]
        if x >= nd[-1]:
            return self.node_values[-1]
        i = bisect_right(nd, x) - 1
        t0, t1 = nd[i], nd[i + 1]
        y0, y1 = self.node_values[i], self.node_values[i + 1]
        return y0 + (x - t0) * (y1 - y0) / (t1 - t0)

    @property
    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.node_values)

    @property
    def support_min(self) -> float:
        return self.nodes[0]

    @property
    def support_max(self) -> float:
        return self.nodes[-1]

    @property
    def total_integral(self) -> float:
        return math.fsum(
            (t1 - t0) * (y0 + y1) * 0.5 for t0, t1, y0, y1 in self.segments()
        )


PiecewiseFunction = StepFunction | PiecewiseLinearFunction


def make_step(breakpoints: Sequence[float], values: Sequence[float]) -> StepFunction:
    """Build the canonical step function with the given pieces."""
    return StepFunction(tuple(breakpoints), tuple(values))


def evaluate(f: PiecewiseFunction, x: float) -> float:
    """f(x) under the half-open convention; zero outside the support."""
    if isinstance(f, StepFunction):
        bp = f.breakpoints
        if x < bp[0] or x >= bp[-1]:
            return 0.0
        return f.values[bisect_right(bp, x) - 1]
    if isinstance(f, PiecewiseLinearFunction):
        nd = f.nodes
        if x < nd[0] or x >= nd[-1]:
            return 0.0
        return f.value_on_line(x)
    raise ValidationError(f"cannot evaluate object of type {type(f).__name__}")


def integrate(f: PiecewiseFunction, a: float, b: float) -> float:
    """Exact integral of f over [a, b], closed form per piece.

    If a > b the bounds are swapped and the result negated.  Infinite bounds
    are fine: the support is compact, so they clip to it.
    """
    if a > b:
        return -integrate(f, b, a)
    if isinstance(f, StepFunction):
        terms = []
        for lo, hi, v in f.pieces():
            if v == 0.0:
                continue
            width = min(b, hi) - max(a, lo)
            if width > 0.0:
                terms.append(v * width)
        return math.fsum(terms)
    if isinstance(f, PiecewiseLinearFunction):
        terms = []
        for t0, t1, y0, y1 in f.segments():
            lo = max(a, t0)
            hi = min(b, t1)
            if hi <= lo:
                continue
            slope = (y1 - y0) / (t1 - t0)
            ylo = y0 + (lo - t0) * slope
            yhi = y0 + (hi - t0) * slope
            terms.append((hi - lo) * (ylo + yhi) * 0.5)
        return math.fsum(terms)
    raise ValidationError(f"cannot integrate object of type {type(f).__name__}")


def from_samples(
    xs: Sequence[float], ys: Sequence[float], mode: str = "left-step"
) -> PiecewiseFunction:
    """Turn sampled data into an exact representable function.

    ``left-step``: sample i becomes a box of height ys[i] whose width is the
    gap to the next sample; the final sample's box reuses the previous gap.
    ``linear``: nodes are interpolated; if an endpoint value is nonzero, one
    zero-valued padding node is appended there, offset by the median sample
    spacing, so the result is continuous on the line.

    Either way the returned function agrees with ys at every sample abscissa.
    """
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(xs) != len(ys):
        raise ValidationError(f"expected len(xs) == len(ys), got {len(xs)} != {len(ys)}")
    if len(xs) < 2:
        raise ValidationError("need at least two samples")
    _check_finite("xs", xs)
    _check_increasing("xs", xs)
    _check_finite("ys", ys)
    _check_nonnegative("ys", ys)
    if mode == "left-step":
        last_gap = xs[-1] - xs[-2]
        return make_step(xs + [xs[-1] + last_gap], ys)
    if mode == "linear":
        pad = statistics.median(b - a for a, b in zip(xs, xs[1:]))
        nodes = list(xs)
        vals = list(ys)
        if vals[0] != 0.0:
            nodes.insert(0, nodes[0] - pad)
            vals.insert(0, 0.0)
        if vals[-1] != 0.0:
            nodes.append(nodes[-1] + pad)
            vals.append(0.0)
        return PiecewiseLinearFunction(tuple(nodes), tuple(vals))
    raise ValidationError(f"unknown sampling mode {mode!r} (use 'left-step' or 'linear')")


def is_nonincreasing_on_halfline(f: PiecewiseFunction) -> bool:
    """True when f is nonincreasing on [0, oo) in the wider sense.

    Structural check on the representation: the support must start exactly at
    0 (otherwise the function rises from 0 somewhere on the positive axis)
    and the piece/node values must never increase.
    """
    if f.is_zero:
        return False
    if f.support_min != 0.0:
        return False
    if isinstance(f, StepFunction):
        vals = f.values
    else:
        vals = f.node_values
    return all(a >= b for a, b in zip(vals, vals[1:]))


def require_nonincreasing_on_halfline(f: PiecewiseFunction) -> None:
    if f.is_zero:
        raise ValidationError("input must not be identically zero")
    if f.support_min != 0.0:
        raise ValidationError(
            "a nonincreasing input on [0, oo) must have its support start at 0 "
            f"(support starts at {f.support_min})"
        )
    if not is_nonincreasing_on_halfline(f):
        raise ValidationError("input values must be nonincreasing")


# ---------------------------------------------------------------------------
# interchange formats

def function_to_json_dict(f: PiecewiseFunction) -> dict:
    if isinstance(f, StepFunction):
        return {
            "type": "step",
            "breakpoints": list(f.breakpoints),
            "values": list(f.values),
        }
    if isinstance(f, PiecewiseLinearFunction):
        return {
            "type": "linear",
            "nodes": list(f.nodes),
            "node_values": list(f.node_values),
        }
    raise ValidationError(f"cannot serialize object of type {type(f).__name__}")


def function_from_json_dict(obj: object) -> PiecewiseFunction:
    if not isinstance(obj, dict):
        raise ValidationError("function JSON must be an object")
    if "type" not in obj:
        raise ValidationError("function JSON is missing field 'type'")
    kind = obj["type"]
    if kind == "step":
        for field in ("breakpoints", "values"):
            if field not in obj:
                raise ValidationError(f"step function JSON is missing field '{field}'")
        return make_step(_number_list(obj, "breakpoints"), _number_list(obj, "values"))
    if kind == "linear":
        for field in ("nodes", "node_values"):
            if field not in obj:
                raise ValidationError(f"linear function JSON is missing field '{field}'")
        return PiecewiseLinearFunction(
            tuple(_number_list(obj, "nodes")), tuple(_number_list(obj, "node_values"))
        )
    raise ValidationError(f"unknown function type {kind!r} (use 'step' or 'linear')")


def _number_list(obj: dict, field: str) -> list[float]:
    raw = obj[field]
    if not isinstance(raw, list):
        raise ValidationError(f"field '{field}' must be a list of numbers")
    out = []
    for item in raw:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ValidationError(f"field '{field}' must be a list of numbers")
        out.append(float(item))
    return out


def samples_from_csv_text(text: str) -> tuple[list[float], list[float]]:
    """Parse the two-column x,y sample format; a header row is optional."""
    xs: list[float] = []
    ys: list[float] = []
    reader = csv.reader(io.StringIO(text))
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise ValidationError(f"CSV line {lineno}: expected two columns, got {len(row)}")
        try:
            x, y = float(row[0]), float(row[1])
        except ValueError:
            if lineno == 1:
                continue  # header
            raise ValidationError(f"CSV line {lineno}: could not parse numbers from {row!r}")
        xs.append(x)
        ys.append(y)
    if not xs:
        raise ValidationError("CSV contained no samples")
    return xs, ys
