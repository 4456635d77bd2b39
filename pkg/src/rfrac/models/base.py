"""Shared wiring for the concrete model catalog.

A model bundles a recurrence coefficient family with its closed-form
minimal solution, the continued fraction value, a spectral measure, and a
coordinate map between the fraction variable and the plane the measure
naturally lives in.  Everything is carried as plain closures so the
numerical layers (recurrence, measures) can consume a model without
knowing which one it is.
"""

import cmath
import math
from dataclasses import dataclass, field

from ..errors import DomainError, SupportProximityError

__all__ = [
    "BiorthFamily",
    "CoordinateMap",
    "ModelSpec",
    "exp_sinh_inverse",
    "joukowski_coordinate",
    "joukowski_split",
    "plain_coordinate",
    "real_base",
    "require",
    "sinh_coordinate",
    "unit_circle_pair",
]

_UNIT_RTOL = 1e-12


def require(cond, condition):
    """Raise DomainError naming the violated parameter condition."""
    if not cond:
        raise DomainError(f"parameter domain violation: need {condition}")


def real_base(value):
    """The base q as a float, rejecting anything off the open interval (0, 1)."""
    qc = complex(value)
    require(qc.imag == 0.0, "q real")
    require(0.0 < qc.real < 1.0, "0 < q < 1")
    return qc.real


@dataclass(frozen=True)
class CoordinateMap:
    """Change of variable between the fraction plane and the model plane.

    ``forward`` maps the model's natural parameter (u on the unit-disk
    exterior, or the exponential argument) to the fraction variable;
    ``inverse`` goes back, always onto the branch the minimal solution
    closed forms are written on.
    """

    name: str
    forward: object
    inverse: object


@dataclass(frozen=True)
class ModelSpec:
    """A concrete recurrence model with all of its closed-form attachments.

    ``minimal`` is (n, z) -> value of the subdominant solution, ``cf_value``
    is z -> value of the associated continued fraction.  ``extras`` carries
    model-specific closures (polynomial families, weights, lattices) that
    the generic interface has no slot for.
    """

    name: str
    params: dict
    spec: object
    measure: object
    coordinate: CoordinateMap
    minimal: object
    cf_value: object
    extras: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BiorthFamily:
    """Two indexed function families paired against a fixed measure.

    ``left`` and ``right`` map an index n to a point-evaluation closure;
    ``norm`` gives the closed-form value of the diagonal pairing, or is
    None when no closed form is available.  ``pairing`` is the measure the
    gram matrix is taken against (it need not coincide with the model's
    spectral measure).
    """

    left: object
    right: object
    norm: object
    validity: str
    pairing: object = None


def _identity(z):
    return complex(z)


def plain_coordinate():
    return CoordinateMap(name="plain", forward=_identity, inverse=_identity)


def joukowski_split(z):
    """The root u of z = (u + 1/u)/2 with |u| >= 1.

    The two roots multiply to 1; the split square root keeps the selection
    stable up to the cut [-1, 1] where both roots hit the unit circle.
    """
    zc = complex(z)
    w = cmath.sqrt(zc - 1.0) * cmath.sqrt(zc + 1.0)
    u = zc + w
    if abs(u) < 1.0:
        u = zc - w
    return u


def _joukowski_forward(u):
    uc = complex(u)
    if uc == 0.0:
        raise DomainError("the midpoint map is singular at u = 0")
    return 0.5 * (uc + 1.0 / uc)


def _joukowski_inverse(z):
    u = joukowski_split(z)
    if abs(abs(u) - 1.0) <= _UNIT_RTOL:
        raise SupportProximityError(
            f"z = {complex(z)} lies on the segment [-1, 1] carrying the measure")
    return u


def joukowski_coordinate():
    return CoordinateMap(name="joukowski", forward=_joukowski_forward,
                         inverse=_joukowski_inverse)


def exp_sinh_inverse(z):
    """exp(xi) for z = sinh(xi), on the branch with modulus >= 1.

    The two candidates multiply to -1, so the small root is recovered from
    the large one without cancellation.
    """
    zc = complex(z)
    w = cmath.sqrt(zc * zc + 1.0)
    s = zc + w
    if abs(s) < 1.0:
        s = -1.0 / s
    return s


def _sinh_forward(xi):
    return cmath.sinh(complex(xi))


def _sinh_inverse(z):
    return cmath.log(exp_sinh_inverse(z))


def sinh_coordinate():
    return CoordinateMap(name="sinh", forward=_sinh_forward,
                         inverse=_sinh_inverse)


def unit_circle_pair(x):
    """The pair (e, 1/e) with e + 1/e = 2x.

    For real x in [-1, 1] this is the conjugate pair exp(+-i theta) with
    x = cos(theta); elsewhere e is the root of larger modulus.
    """
    xc = complex(x)
    if xc.imag == 0.0 and -1.0 <= xc.real <= 1.0:
        e = complex(xc.real, math.sqrt(max(0.0, 1.0 - xc.real * xc.real)))
        return e, e.conjugate()
    u = joukowski_split(xc)
    return u, 1.0 / u
