"""Pointwise transform bounds, the diagnostic ratio Q, and certificates.

For a nonnegative integrable f with crest count N the transform obeys

    |fhat(z)| <= N * pi * sqrt(10) * integral_0^{1/z} f*(x) dx      (z > 0),

so the ratio ``Q(z) = |fhat(z)| / (pi sqrt(10) integral_0^{1/z} f*)`` never
exceeds N.  Contrapositively, observing Q(z) > N at any z certifies that f
crests more than N times; that is what :func:`crest_lower_bound` turns into a
certificate, together with the derived count of roots of f' for smooth-like
inputs.

The constants ``pi*sqrt(10)`` and ``(pi/2)*sqrt(10)`` are always computed,
never hard-coded decimal approximations, so any slack observed in the
verification suites is attributable to the mathematics alone.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .crests import count_crests, decompose
from .errors import ValidationError, ZeroFunctionError
from .piecewise import (
    PiecewiseFunction,
    StepFunction,
    integrate,
    make_step,
    require_nonincreasing_on_halfline,
)
from .rearrange import Rearrangement, rearrangement
from .transform import fourier

__all__ = [
    "PI_SQRT_10",
    "HALF_PI_SQRT_10",
    "QReport",
    "BoundCertificate",
    "CombResonance",
    "bound_report",
    "check_decreasing_bound",
    "check_one_crest_bound",
    "comb_example",
    "comb_size",
    "comb_resonance",
    "crest_lower_bound",
    "default_z_grid",
    "grid_csv_lines",
]

PI_SQRT_10 = math.pi * math.sqrt(10.0)
HALF_PI_SQRT_10 = 0.5 * math.pi * math.sqrt(10.0)

# Strict-threshold guard: Q must exceed an integer by more than this before
# the certificate counts an extra crest, so float noise can never do it.
CERTIFICATE_GUARD = 1e-9


@dataclass(frozen=True)
class QReport:
    """One grid point: transform size against the rearrangement tail."""

    z: float
    transform_magnitude: float
    tail_integral: float
    bound: float
    q_value: float
    crest_count: int

    def to_json_dict(self) -> dict:
        return {
            "z": self.z,
            "transform_magnitude": self.transform_magnitude,
            "tail_integral": self.tail_integral,
            "bound": self.bound,
            "q_value": self.q_value,
            "crest_count": self.crest_count,
        }


@dataclass(frozen=True)
class BoundCertificate:
    """Certified lower bounds extracted from a grid of Q values.

    ``crest_lower_bound`` is floor(best_q - guard) + 1, at least 1 (a nonzero
    function crests at least once).  ``root_lower_bound`` is 2M - 1 for M the
    largest integer strictly exceeded by best_q, clamped at zero.  The
    stronger ``derived_root_bound`` = 2 * crest_lower_bound - 1 follows from
    the crest bound itself (k maxima of a smooth-like profile interleave with
    k - 1 minima, so f' crosses zero at least 2k - 1 times); it is reported
    separately, clearly labeled, and never substituted for
    ``root_lower_bound``.
    """

    best_z: float
    best_q: float
    crest_lower_bound: int
    root_lower_bound: int
    derived_root_bound: int
    grid: tuple[QReport, ...]

    def to_json_dict(self) -> dict:
        return {
            "best_z": self.best_z,
            "best_q": self.best_q,
            "crest_lower_bound": self.crest_lower_bound,
            "root_lower_bound": self.root_lower_bound,
            "derived_root_bound": self.derived_root_bound,
            "grid": [r.to_json_dict() for r in self.grid],
        }


def _validate_nonzero(f: PiecewiseFunction) -> None:
    if f.is_zero:
        raise ZeroFunctionError("the zero function has no meaningful Q ratio")


def _q_report(f, z, crest_count: int, star: Rearrangement) -> QReport:
    if z <= 0.0:
        raise ValidationError("z must be positive")
    magnitude = abs(fourier(f, z))
    tail = star.integral_up_to(1.0 / z)
    scale = PI_SQRT_10 * tail
    return QReport(
        z=z,
        transform_magnitude=magnitude,
        tail_integral=tail,
        bound=crest_count * scale,
        q_value=magnitude / scale,
        crest_count=crest_count,
    )


def bound_report(f: PiecewiseFunction, z: float) -> QReport:
    """Evaluate the crest-count bound and the ratio Q at one z > 0."""
    _validate_nonzero(f)
    return _q_report(f, z, count_crests(f), rearrangement(f))


def check_decreasing_bound(f: PiecewiseFunction, z: float) -> tuple[float, float]:
    """(lhs, rhs) of |fhat(z)| <= (pi/2) sqrt(10) integral_0^{1/z} f.

    Requires f nonincreasing on [0, oo); contract: lhs <= rhs.
    """
    require_nonincreasing_on_halfline(f)
    if z <= 0.0:
        raise ValidationError("z must be positive")
    lhs = abs(fourier(f, z))
    rhs = HALF_PI_SQRT_10 * integrate(f, 0.0, 1.0 / z)
    return lhs, rhs


def check_one_crest_bound(f: PiecewiseFunction, z: float) -> tuple[float, float, float]:
    """(lhs, rhs, b): |fhat(z)| against the window integral around the crest.

    Requires f to crest exactly once at some b; then
    lhs = |fhat(z)| <= (pi/2) sqrt(10) integral_{b-1/z}^{b+1/z} f = rhs.
    """
    if z <= 0.0:
        raise ValidationError("z must be positive")
    report = decompose(f)
    if report.count != 1:
        raise ValidationError(
            f"input must crest exactly once (found {report.count} crests)"
        )
    b = report.crest_locations[0]
    lhs = abs(fourier(f, z))
    rhs = HALF_PI_SQRT_10 * integrate(f, b - 1.0 / z, b + 1.0 / z)
    return lhs, rhs, b


def comb_example(n: int) -> StepFunction:
    """5n unit boxes at even offsets: sum of boxes on [2j, 2j+1), j < 5n.

    The sharpness witness: it crests 5n times, its rearrangement is the
    single box on [0, 5n), and at z an odd multiple of pi its transform has
    magnitude 10n/z, so Q(z) = sqrt(10) n / pi (about 1.007 n).
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n must be a positive integer")
    breakpoints = [float(k) for k in range(10 * n)]
    values = [1.0 if k % 2 == 0 else 0.0 for k in range(10 * n - 1)]
    return make_step(breakpoints, values)


def comb_size(f: PiecewiseFunction) -> int | None:
    """n when f equals comb_example(n) exactly, else None."""
    if not isinstance(f, StepFunction):
        return None
    pieces = len(f.values)
    if pieces % 10 != 9:
        return None
    n = (pieces + 1) // 10
    return n if f == comb_example(n) else None


@dataclass(frozen=True)
class CombResonance:
    """Q of a comb at one odd and one even multiple of pi.

    The transform of the comb vanishes identically at even multiples of pi;
    the stated peak magnitude 10n/z holds at odd multiples.  Both evaluations
    are recorded so reports make the distinction explicit.
    """

    size: int
    odd: QReport
    even: QReport
    peak_ratio_expected: float
    note: str = (
        "the transform of this comb vanishes at even multiples of pi; the peak "
        "ratio sqrt(10)*n/pi is attained at odd multiples z = (2l+1)*pi"
    )

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "odd": self.odd.to_json_dict(),
            "even": self.even.to_json_dict(),
            "peak_ratio_expected": self.peak_ratio_expected,
            "note": self.note,
        }


def comb_resonance(n: int, l: int = 50) -> CombResonance:
    if l < 1:
        raise ValidationError("l must be a positive integer")
    f = comb_example(n)
    crests = count_crests(f)
    star = rearrangement(f)
    return CombResonance(
        size=n,
        odd=_q_report(f, (2 * l + 1) * math.pi, crests, star),
        even=_q_report(f, 2 * l * math.pi, crests, star),
        peak_ratio_expected=math.sqrt(10.0) * n / math.pi,
    )


def default_z_grid(
    z_min: float = 1e-2, z_max: float = 1e3, count: int = 512, odd_pi_multiples: bool = True
) -> list[float]:
    """Log-spaced grid plus the odd multiples of pi (the comb resonances)."""
    if z_min <= 0.0 or z_max <= z_min:
        raise ValidationError("need 0 < z_min < z_max")
    if count < 1:
        raise ValidationError("count must be at least 1")
    if count == 1:
        zs = {z_min}
    else:
        lo, hi = math.log10(z_min), math.log10(z_max)
        zs = {10.0 ** (lo + (hi - lo) * i / (count - 1)) for i in range(count)}
    if odd_pi_multiples:
        k = 1
        while k * math.pi <= z_max:
            if k * math.pi >= z_min:
                zs.add(k * math.pi)
            k += 2
    return sorted(zs)


def crest_lower_bound(
    f: PiecewiseFunction,
    z_grid: list[float],
    refine_depth: int = 0,
    max_workers: int | None = None,
) -> BoundCertificate:
    """Scan Q over the grid and certify lower bounds on crests and roots.

    Q is continuous, so ``refine_depth`` rounds of local grid refinement
    around the running maximum converge toward the true supremum.  Grid
    evaluation may run on ``max_workers`` threads; results are assembled in
    ascending z order and ties break to the leftmost z, so the outcome is
    identical no matter the thread count.
    """
    _validate_nonzero(f)
    if not z_grid:
        raise ValidationError("the z grid must not be empty")
    if any(z <= 0.0 for z in z_grid):
        raise ValidationError("grid points must be positive")
    crests = count_crests(f)
    star = rearrangement(f)

    def evaluate_grid(zs: list[float]) -> list[QReport]:
        zs = sorted(set(zs))
        if max_workers is not None and max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                return list(pool.map(lambda z: _q_report(f, z, crests, star), zs))
        return [_q_report(f, z, crests, star) for z in zs]

    reports = evaluate_grid(list(z_grid))
    for _ in range(max(0, refine_depth)):
        i = max(range(len(reports)), key=lambda k: (reports[k].q_value, -k))
        lo = reports[i - 1].z if i > 0 else reports[i].z * 0.5
        hi = reports[i + 1].z if i + 1 < len(reports) else reports[i].z * 2.0
        fresh = [lo + (hi - lo) * j / 17.0 for j in range(1, 17)]
        known = {r.z for r in reports}
        extra = evaluate_grid([z for z in fresh if z not in known])
        reports = sorted(reports + extra, key=lambda r: r.z)

    best = reports[0]
    for r in reports[1:]:
        if r.q_value > best.q_value:
            best = r
    strictly_exceeded = math.floor(best.q_value - CERTIFICATE_GUARD)
    lower = max(1, strictly_exceeded + 1)
    m = lower - 1
    return BoundCertificate(
        best_z=best.z,
        best_q=best.q_value,
        crest_lower_bound=lower,
        root_lower_bound=max(0, 2 * m - 1),
        derived_root_bound=2 * lower - 1,
        grid=tuple(reports),
    )


def grid_csv_lines(reports) -> list[str]:
    """Fixed CSV schema for plotting pipelines, 17 significant digits."""
    lines = ["z,abs_fhat,tail_integral,bound,q"]
    for r in reports:
        lines.append(
            f"{r.z:.17g},{r.transform_magnitude:.17g},{r.tail_integral:.17g},"
            f"{r.bound:.17g},{r.q_value:.17g}"
        )
    return lines
