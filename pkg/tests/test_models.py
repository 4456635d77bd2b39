"""The seven explicit models: construction, closed minimal solutions, branches."""

import cmath
import math

import pytest

from rfrac.errors import BranchBoundaryError, DomainError, OutOfSpanError
from rfrac.models import (
    MODEL_NAMES,
    biorth,
    instantiate,
    minimal_closed_form,
)
from rfrac.qseries import QContext, multi_q_pochhammer
from rfrac.recurrence import R_II, minimal_solution_backward, pincherle_residual

# one interior parameter set per model, away from every degenerate corner
PARAMS = {
    "Pastro21": {"q": 0.5, "a": 0.3, "b": 0.4},
    "ChebyshevR2_31": {"a": 1.0, "b": 4.0},
    "Cauchy2F1_32": {"a": 1.5, "b": -0.5},
    "UnitCircle41": {"q": 0.5, "a": 0.3, "b": 0.2, "t1": 0.3, "t2": 0.3},
    "SinhLattice42": {"q": 0.5, "t1": 0.2, "t2": 0.3, "t3": 0.4, "t4": 0.1},
    "ChebyRational51": {"q": 0.5, "alpha": 0.3, "delta": 0.2},
    "Rahman52": {"q": 0.5, "alpha": 0.2, "beta": 0.3, "delta": 0.1},
}

# evaluation points off the support and off the branch boundaries; for the
# split-plane models the list covers both branches
POINTS = {
    "Pastro21": (0.2 + 0.1j, -0.25 + 0.2j, 1.5 + 0.5j, -2.0 + 1.0j),
    "ChebyshevR2_31": (9.0, 2.0 + 3.0j, -1.0 + 2.0j),
    "Cauchy2F1_32": (-0.5 + 0.3j, 0.2 - 0.6j, 0.8 + 0.5j, 1.2 - 0.4j),
    "UnitCircle41": (0.2 + 0.1j, 0.3 - 0.2j, 1.4 - 0.6j, 2.0 + 0.4j),
    "SinhLattice42": (1.1 + 0.7j, -0.8 + 0.5j, 2.3 - 0.9j),
    "ChebyRational51": (2.5 + 0.3j, -1.7 + 0.8j, 0.3 + 1.2j),
    "Rahman52": (2.5 + 0.3j, -1.7 + 0.8j, 0.3 + 1.2j),
}


def build(name):
    return instantiate(name, PARAMS[name])


def test_registry_order_and_unknown_name():
    assert MODEL_NAMES == (
        "Pastro21",
        "ChebyshevR2_31",
        "Cauchy2F1_32",
        "UnitCircle41",
        "SinhLattice42",
        "ChebyRational51",
        "Rahman52",
    )
    with pytest.raises(OutOfSpanError, match="Rahman52"):
        instantiate("NoSuchModel", {})


@pytest.mark.parametrize(
    "name,params,fragment",
    [
        ("Pastro21", {"q": 0.5, "a": 0.3, "b": 1.5}, "|b| < 1"),
        ("Pastro21", {"q": 0.5, "a": 2.5, "b": 0.3}, "|a q| < 1"),
        ("ChebyshevR2_31", {"a": -1.0, "b": 4.0}, "a > 0"),
        ("Cauchy2F1_32", {"a": 0.5, "b": 0.5}, "Re(a - b) > 0"),
        ("Cauchy2F1_32", {"a": 1.5, "b": 1.0}, "b != 1"),
        ("UnitCircle41",
         {"q": 0.5, "a": 0.3, "b": 0.2, "t1": 0.8, "t2": 0.3},
         "|t1| < sqrt(q)"),
        ("UnitCircle41",
         {"q": 0.5, "a": 1.2, "b": 0.2, "t1": 0.3, "t2": 0.3},
         "|a| < 1"),
        ("SinhLattice42",
         {"q": 0.5, "t1": 0.9, "t2": 0.9, "t3": 0.9, "t4": 0.9},
         "|t1 t2 t3 t4| < q^3"),
        ("ChebyRational51", {"q": 0.5, "alpha": 1.2, "delta": 0.2},
         "max(|alpha|, |delta|) < 1"),
        ("Rahman52", {"q": 0.5, "alpha": 0.2, "beta": 0.0, "delta": 0.1},
         "beta != 0"),
        ("Rahman52", {"q": 0.5, "alpha": 0.99, "beta": 0.99, "delta": 0.99},
         "|alpha beta^2 delta| < q"),
    ],
)
def test_domain_violations_name_the_condition(name, params, fragment):
    with pytest.raises(DomainError) as err:
        instantiate(name, params)
    assert fragment in str(err.value)


def test_pastro_first_coefficient():
    m = instantiate("Pastro21", {"q": 0.5, "a": 0.2, "b": 0.3})
    want = -math.sqrt(0.5) * (1 - 0.3) / (1 - 0.2 * 0.5)
    assert abs(m.spec.c(1) - want) < 1e-15


def test_chebyshev_constant_middle_coefficient():
    m = build("ChebyshevR2_31")
    for n in range(1, 7):
        assert abs(m.spec.c(n) - (-2.0)) < 1e-15


def test_cheby_rational_zero_parameter_corner():
    m = instantiate("ChebyRational51", {"q": 0.5, "alpha": 0.0, "delta": 0.0})
    fam = biorth(m)
    assert abs(fam.norm(0) - 1.0) < 1e-15
    # the coefficient maps divide by alpha*delta, so the ladder solution is
    # unavailable there and says so
    with pytest.raises(DomainError):
        m.minimal(1, 2.0 + 1.0j)


def test_rahman_minimal_needs_nonzero_endpoints():
    m = instantiate("Rahman52",
                    {"q": 0.5, "alpha": 0.0, "beta": 0.3, "delta": 0.1})
    with pytest.raises(DomainError):
        m.minimal(0, 2.0 + 1.0j)


def test_minimal_closed_form_chebyshev_point():
    m = build("ChebyshevR2_31")
    # at z = 9 the decaying solution is ((3-1)(3-2)/2)^n
    assert abs(minimal_closed_form(m, 3, 9.0) - 1.0) < 1e-12


def test_minimal_closed_form_pastro_origin():
    m = build("Pastro21")
    q, a, b = 0.5, 0.3, 0.4
    ctx = QContext(q)
    want = (multi_q_pochhammer(ctx, (a * q, b * q))
            / multi_q_pochhammer(ctx, (q, a * b * q)))
    got = minimal_closed_form(m, 0, 0.0)
    assert abs(got - want) < 1e-12 * abs(want)


def test_minimal_closed_form_rejects_negative_index():
    m = build("ChebyshevR2_31")
    with pytest.raises(DomainError):
        minimal_closed_form(m, -1, 9.0)


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_recurrence_defect_of_closed_solutions(name):
    m = build(name)
    spec = m.spec
    for z in POINTS[name]:
        xs = [minimal_closed_form(m, n, z) for n in range(21)]
        for n in range(2, 21):
            w = spec.lam(n) * (z - spec.a(n))
            if spec.kind == R_II:
                w = w * (z - spec.b(n))
            rhs = (z - spec.c(n)) * xs[n - 1] - w * xs[n - 2]
            scale = max(abs(xs[n]), abs(xs[n - 1]), abs(xs[n - 2]), 1e-280)
            assert abs(xs[n] - rhs) / scale < 1e-10, (name, n, z)


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_backward_estimate_agrees_with_closed_branch(name):
    m = build(name)
    for z in POINTS[name]:
        est = minimal_solution_backward(m.spec, z, window=6)
        cf = m.cf_value(z)
        assert abs(est.ratio_at_0 - cf) < 1e-8 * abs(cf), (name, z)


def test_sinh_lattice_pincherle_residual():
    m = build("SinhLattice42")
    z = 1.1 + 0.7j
    est = minimal_solution_backward(m.spec, z, window=6)
    assert pincherle_residual(m.spec, z, m.cf_value(z), est) < 1e-8


@pytest.mark.parametrize(
    "name,z",
    [
        ("Pastro21", cmath.sqrt(0.5)),
        ("Pastro21", cmath.sqrt(0.5) * cmath.exp(0.7j)),
        ("UnitCircle41", cmath.sqrt(0.5) * cmath.exp(-1.3j)),
        ("Cauchy2F1_32", 0.5 + 0.3j),
        ("ChebyshevR2_31", -2.0),
    ],
)
def test_branch_boundary_is_rejected(name, z):
    m = build(name)
    with pytest.raises(BranchBoundaryError):
        minimal_closed_form(m, 0, z)


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_family_validity_and_nonzero_norms(name):
    fam = biorth(build(name))
    assert isinstance(fam.validity, str) and fam.validity
    for n in range(7):
        assert fam.norm(n) != 0


def test_sinh_lattice_cosh_companion():
    params = dict(PARAMS["SinhLattice42"], cosh=True)
    m = instantiate("SinhLattice42", params)
    assert m.extras["cosh_lattice"]
    assert len(m.extras["cosh_points"]) > 0
    fam = biorth(m)
    assert fam.norm is None
    val = fam.left(2)(1.3 + 0.4j)
    assert cmath.isfinite(val)


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_coordinate_maps_round_trip(name):
    m = build(name)
    z = POINTS[name][0]
    u = m.coordinate.inverse(z)
    back = m.coordinate.forward(u)
    assert abs(back - z) < 1e-12 * max(1.0, abs(z))
