import cmath
import math

import pytest

from crestimate import (
    ConvergenceError,
    PiecewiseLinearFunction,
    ValidationError,
    comb_example,
    cosine_transform,
    fourier,
    fourier_quadrature_oracle,
    make_step,
    sine_transform,
    window_bounds,
)
from crestimate.generators import (
    log_uniform,
    random_decreasing_step,
    random_step_function,
    rng_for,
)

BOX = make_step([0, 1], [1])
TRIANGLE = PiecewiseLinearFunction((0.0, 1.0, 2.0), (0.0, 1.0, 0.0))


def test_fourier_at_zero_is_total_integral():
    rng = rng_for(31, "zero-frequency")
    for _ in range(50):
        f = random_step_function(rng)
        fh = fourier(f, 0.0)
        assert fh.imag == 0.0
        assert math.isclose(fh.real, f.total_integral, rel_tol=1e-14)


def test_fourier_box_at_pi():
    fh = fourier(BOX, math.pi)
    assert abs(abs(fh) - 2.0 / math.pi) < 1e-15
    oracle = fourier_quadrature_oracle(BOX, math.pi, 1e-9)
    assert abs(fh - oracle) < 1e-8


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("l", [1, 7, 50])
def test_fourier_comb_resonances(n, l):
    f = comb_example(n)
    z_odd = (2 * l + 1) * math.pi
    fh = fourier(f, z_odd)
    assert abs(fh.real) < 1e-11
    assert math.isclose(fh.imag, -10.0 * n / z_odd, rel_tol=1e-9)
    assert abs(fourier(f, 2 * l * math.pi)) < 1e-12


def test_fourier_triangle_against_closed_form():
    # the triangle is the autocorrelation of a box: |that(z)| = (2 sin(z/2)/z)^2
    for z in (0.5, 1.0, 3.3, 20.0):
        assert math.isclose(
            abs(fourier(TRIANGLE, z)), (2.0 * math.sin(z / 2.0) / z) ** 2, rel_tol=1e-12
        )


def test_conjugate_symmetry_is_exact():
    rng = rng_for(32, "conjugate")
    for _ in range(100):
        f = random_step_function(rng)
        z = log_uniform(rng, 1e-3, 1e3)
        assert fourier(f, -z) == fourier(f, z).conjugate()


def test_transform_magnitude_bounded_by_mass():
    rng = rng_for(33, "mass-bound")
    for _ in range(100):
        f = random_step_function(rng)
        z = log_uniform(rng, 1e-3, 1e3)
        assert abs(fourier(f, z)) <= f.total_integral * (1.0 + 1e-12)


def test_small_phase_series_branch_agrees_with_stable_form():
    # reference: for the unit box, fhat(z) = exp(-iz/2) * sin(z/2)/(z/2),
    # which stays accurate for small z (no cancellation); the naive
    # (1 - exp(-iz))/(iz) loses ~5 digits at z = 1e-6.
    f = make_step([0, 1], [1])
    for z in (9e-5, 1.1e-4, 1e-6, 1e-8):
        value = fourier(f, z)
        stable = cmath.exp(-0.5j * z) * (math.sin(0.5 * z) / (0.5 * z))
        assert abs(value - stable) <= 1e-12 * abs(stable)


def test_sine_cosine_box_at_pi():
    assert math.isclose(sine_transform(BOX, math.pi), 2.0 / math.pi, rel_tol=1e-14)
    assert abs(cosine_transform(BOX, math.pi)) < 1e-15


def test_sine_transform_positive_for_decreasing():
    rng = rng_for(34, "sine-positive")
    for _ in range(100):
        f = random_decreasing_step(rng)
        z = log_uniform(rng, 1e-3, 1e3)
        assert sine_transform(f, z) > 0.0


def test_sine_transform_small_z_branch():
    z = 1e-9
    assert math.isclose(sine_transform(BOX, z), z / 2.0, rel_tol=1e-6)


def test_fourier_equals_cosine_minus_i_sine():
    rng = rng_for(35, "split-identity")
    for _ in range(100):
        f = random_step_function(rng, min_pieces=1, max_pieces=10)
        if f.support_min < 0.0:
            f = make_step(
                [b - f.support_min for b in f.breakpoints], f.values
            )
        z = log_uniform(rng, 1e-3, 1e3)
        fh = fourier(f, z)
        split = complex(cosine_transform(f, z), -sine_transform(f, z))
        assert abs(fh - split) <= 1e-12 * max(1.0, abs(fh))


def test_sine_cosine_reject_negative_support():
    shifted = make_step([-1, 1], [1])
    with pytest.raises(ValidationError, match=r"supported on \[0, oo\)"):
        sine_transform(shifted, 1.0)
    with pytest.raises(ValidationError, match=r"supported on \[0, oo\)"):
        cosine_transform(shifted, 1.0)


def test_sine_cosine_reject_nonpositive_z():
    with pytest.raises(ValidationError, match="z must be positive"):
        sine_transform(BOX, 0.0)


def test_oracle_self_consistency():
    assert abs(
        fourier_quadrature_oracle(BOX, math.pi, 1e-9) - fourier(BOX, math.pi)
    ) < 1e-8
    f = comb_example(2)
    assert abs(fourier_quadrature_oracle(f, 7.3, 1e-9) - fourier(f, 7.3)) < 1e-8
    assert abs(fourier_quadrature_oracle(TRIANGLE, 0.0, 1e-9) - 1.0) < 1e-9


def test_oracle_validation_and_budget():
    with pytest.raises(ValidationError, match="tol"):
        fourier_quadrature_oracle(BOX, 1.0, 0.0)
    with pytest.raises(ConvergenceError, match="panel"):
        fourier_quadrature_oracle(comb_example(4), 90.0, 1e-12, max_panels=8)


def test_closed_form_matches_oracle_random():
    f_rng = rng_for(36, "oracle/functions")
    z_rng = rng_for(36, "oracle/z")
    for _ in range(50):
        f = random_step_function(
            f_rng, max_pieces=8, max_width_units=16, start_range_units=64
        )
        z = log_uniform(z_rng, 1e-2, 100.0) * z_rng.choice([-1.0, 1.0])
        mass = f.total_integral
        oracle = fourier_quadrature_oracle(f, z, 1e-9 * (1.0 + mass))
        closed = fourier(f, z)
        assert abs(closed - oracle) <= 1e-6 * max(abs(closed), 1e-3 * mass)


def test_window_bounds_narrow_sine_counterexample():
    # Sf(pi) = 2/pi for the unit box, but the pi/(2z) window only holds 1/2.
    wb = window_bounds(BOX, math.pi)
    assert wb.sine_value > wb.sine_narrow_rhs
    assert wb.sine_value <= wb.sine_wide_rhs + 1e-12
    assert abs(wb.cosine_value) <= wb.cosine_rhs + 1e-12


def test_window_bounds_hold_for_random_decreasing():
    rng = rng_for(37, "windows")
    for _ in range(100):
        f = random_decreasing_step(rng)
        z = log_uniform(rng, 1e-3, 1e3)
        wb = window_bounds(f, z)
        assert wb.sine_value <= wb.sine_wide_rhs + 1e-12
        assert abs(wb.cosine_value) <= wb.cosine_rhs + 1e-12
