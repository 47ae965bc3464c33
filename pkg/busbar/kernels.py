"""
Integrand kernels of the fourfold force integrals.

Two filaments carrying current densities J1 and J2, separated by (l, m),
attract with the per-unit-length density

    f = mu0 J1 J2 / (2 pi sqrt(l^2 + m^2))

directed along (l, m). Projecting on x and y and factoring out the
constants leaves the kernels l / (l^2 + m^2) and m / (l^2 + m^2).
"""

import math

import numpy as np

from dataclasses import dataclass

from .exceptions import DomainError
from .model import FORCE_CONSTANT

X = 'x'
Y = 'y'
COMPONENTS = (X, Y)


@dataclass(frozen=True)
class DiffCoords:
    l: float
    m: float


def _check_origin(l, m):
    if l == 0 and m == 0:
        raise DomainError('kernel is singular at zero separation (l = m = 0)')


def kernel_x(l, m):
    _check_origin(l, m)

    return l / (l * l + m * m)


def kernel_y(l, m):
    _check_origin(l, m)

    return m / (l * l + m * m)


def kernel_density(l, m, currents, section):
    """
    Force density f between two filaments of the conductors, in N/m per
    square metre of each cross-section.
    """
    _check_origin(l, m)

    j1 = currents.i1 / section.area
    j2 = currents.i2 / section.area

    return FORCE_CONSTANT * j1 * j2 / math.hypot(l, m)


def diff_coords(x1, x2, y1, y2, layout):
    """
    Map conductor-local coordinates, x in [0, 2a] and y in [-b, b] for both
    conductors, to the separation of the two filaments.
    """
    return DiffCoords(layout.d + x2 - x1, layout.h + y2 - y1)


def kernel_array(component, l, m):
    """
    Vectorized kernel over numpy arrays. The caller guarantees that no
    point sits at the origin.
    """
    l = np.asarray(l, dtype=float)
    m = np.asarray(m, dtype=float)

    numerator = l if component == X else m

    return numerator / (l * l + m * m)


def get_kernel(component):
    if component == X:
        return kernel_x
    elif component == Y:
        return kernel_y

    raise DomainError('component must be one of {0}, got {1!r}'.format(COMPONENTS, component))
