"""Quadrature engines checked against closed-form integrals."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rfrac.errors import ConvergenceError, DomainError, SupportProximityError
from rfrac.measures import (
    Measure,
    QuadratureConfig,
    circle_contour,
    discrete,
    integrate,
    interval,
    normalization,
    stieltjes,
    vertical_line,
    weighted_gram,
)


def unit_circle_cauchy():
    return circle_contour(
        1.0,
        lambda th: 1.0 / (2j * math.pi * np.exp(1j * th)),
        support_meta="|t| = 1",
    )


def chebyshev_unit_mass():
    return interval(
        -1.0, 1.0,
        lambda x: (2.0 / math.pi) * np.sqrt(1.0 - x * x),
        chebyshev_second_kind=True,
        support_meta="[-1, 1] with second-kind weight",
    )


def halfline_measure(a=1.0, b=4.0):
    c = 2.0 * (math.sqrt(a) + math.sqrt(b)) / math.pi
    return interval(
        -math.inf, 0.0,
        lambda x: c * np.sqrt(-x) / ((a - x) * (b - x)),
        support_meta="(-inf, 0]",
    )


def test_circle_cauchy_kernel_has_unit_mass():
    val = normalization(unit_circle_cauchy())
    assert abs(val - 1.0) < 1e-12


def test_circle_contour_deformation_invariance():
    # analytic density in an annulus: the radius must not matter
    def density_at(r):
        return lambda th: (
            lambda t: (1.0 + t / 2.0 + t * t / 3.0) / (2j * math.pi * t)
        )(r * np.exp(1j * th))

    inner = normalization(circle_contour(0.6, density_at(0.6)))
    outer = normalization(circle_contour(1.0, density_at(1.0)))
    assert abs(inner - outer) < 1e-9
    assert abs(inner - 1.0) < 1e-9


def test_second_kind_weight_poisson_product():
    m = chebyshev_unit_mass()
    al, de = 0.5, 0.25

    def f(x):
        return 1.0 / ((1.0 - 2.0 * al * x + al * al)
                      * (1.0 - 2.0 * de * x + de * de))

    val = integrate(m, f)
    assert abs(val - 1.0 / (1.0 - al * de)) < 1e-10
    # doubling stability: a different starting resolution lands on the
    # same answer
    again = integrate(m, f, QuadratureConfig(nodes=96))
    assert abs(val - again) < 2e-10


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=-0.8, max_value=0.8),
    st.floats(min_value=-0.8, max_value=0.8),
)
def test_poisson_product_property(al, de):
    m = chebyshev_unit_mass()

    def f(x):
        return 1.0 / ((1.0 - 2.0 * al * x + al * al)
                      * (1.0 - 2.0 * de * x + de * de))

    assert abs(integrate(m, f) - 1.0 / (1.0 - al * de)) < 1e-9


def test_gram_of_second_kind_chebyshev_family():
    m = chebyshev_unit_mass()

    def u(n):
        def val(x):
            p_prev, p = x * 0 + 1.0, 2.0 * x
            if n == 0:
                return p_prev
            for _ in range(n - 1):
                p_prev, p = p, 2.0 * x * p - p_prev
            return p
        return val

    fam = [u(n) for n in range(3)]
    G = weighted_gram(m, fam, fam, 3)
    assert np.max(np.abs(G - np.eye(3))) < 1e-11


def test_legendre_panels_on_plain_weight():
    m = interval(0.0, 1.0, lambda x: x * 0 + 1.0)
    val = integrate(m, np.exp)
    assert abs(val - (math.e - 1.0)) < 1e-12


def test_halfline_total_mass():
    assert abs(normalization(halfline_measure()) - 2.0) < 1e-9


def test_halfline_transform_closed_form():
    # partial fractions give exactly 1/3 for this parameter pair
    val = stieltjes(halfline_measure(a=1.0, b=4.0), 1.0)
    assert abs(val - 1.0 / 3.0) < 1e-8


def test_discrete_geometric_masses_sum_to_one():
    pts = [(0.5 ** k, 0.5 ** (k + 1)) for k in range(200)]
    # truncation error tracks cfg.tol, so tighten it for this check
    val = normalization(discrete(pts), QuadratureConfig(tol=1e-13))
    assert abs(val - 1.0) < 1e-12


def test_discrete_single_mass_transform():
    m = discrete([(0.0, 1.0)])
    assert stieltjes(m, 2.0) == 0.5


def test_discrete_tail_cap_is_normal_termination():
    pts = [(float(k), 1.0 / (k + 1)) for k in range(100)]
    cfg = QuadratureConfig(tail_terms=10)
    val = integrate(discrete(pts), lambda z: 1.0, cfg)
    expected = sum(1.0 / (k + 1) for k in range(10))
    assert abs(val - expected) < 1e-14


def test_line_cauchy_density_mass_and_transform():
    m = vertical_line(0.5, lambda y: 1.0 / (math.pi * (1.0 + y * y)))
    assert abs(normalization(m) - 1.0) < 1e-10
    # residue calculus: 1/pi * integral dy/((1+y^2)(2.5-iy)) = 2/7
    val = stieltjes(m, 3.0)
    assert abs(val - 2.0 / 7.0) < 1e-9


def test_line_nonintegrable_density_fails_loudly():
    m = vertical_line(0.0, lambda y: 1.0 / (1.0 + np.abs(y)))
    with pytest.raises(ConvergenceError):
        normalization(m, QuadratureConfig(max_refinements=3))


def test_unresolvable_oscillation_fails_loudly():
    m = unit_circle_cauchy()
    with pytest.raises(ConvergenceError):
        integrate(m, lambda t: np.exp(40.0 / t),
                  QuadratureConfig(nodes=8, max_refinements=1))


def test_transform_decay_recovers_total_mass():
    m = chebyshev_unit_mass()
    for z, bound in ((1e3, 1e-2), (1e4, 1e-3)):
        assert abs(z * stieltjes(m, z) - 1.0) < bound


def test_transform_conjugate_symmetry():
    z = 0.7 + 0.4j
    for m in (chebyshev_unit_mass(), halfline_measure()):
        assert abs(stieltjes(m, z.conjugate())
                   - stieltjes(m, z).conjugate()) < 1e-14


def test_support_proximity_guard():
    cases = [
        (chebyshev_unit_mass(), 0.5),
        (halfline_measure(), -3.0),
        (halfline_measure(), 1e-14),
        (unit_circle_cauchy(), 1.0j),
        (vertical_line(0.5, lambda y: 0.0), 0.5 + 7.0j),
        (discrete([(0.0, 1.0)]), 0.0),
    ]
    for m, z in cases:
        with pytest.raises(SupportProximityError):
            stieltjes(m, z)


def test_config_validation():
    for bad in (
        dict(nodes=4),
        dict(tail_terms=0),
        dict(tol=0.0),
        dict(max_refinements=0),
        dict(threads=0),
    ):
        with pytest.raises(DomainError):
            QuadratureConfig(**bad)


def test_measure_validation():
    with pytest.raises(DomainError):
        interval(1.0, -1.0, lambda x: 1.0)
    with pytest.raises(DomainError):
        interval(0.0, math.inf, lambda x: 1.0)
    with pytest.raises(DomainError):
        circle_contour(0.0, lambda th: 1.0)
    with pytest.raises(DomainError):
        interval(0.0, 2.0, lambda x: 1.0, chebyshev_second_kind=True)
    with pytest.raises(DomainError):
        discrete([])
    with pytest.raises(DomainError):
        Measure(variant="nonsense")


def test_thread_count_does_not_change_bits():
    m = chebyshev_unit_mass()

    def scalar_only(x):
        return 1.0 / (1.3 - float(x))

    vals = [integrate(m, scalar_only, QuadratureConfig(threads=k))
            for k in (1, 2, 3)]
    assert vals[0] == vals[1] == vals[2]
