"""
Domain types and validity checks for a pair of identical rectangular
conductors.

Lengths are in metres, currents in amperes and forces in newtons per metre.
Both conductors are 2a wide and 2b tall and carry a homogeneous current
density i/(4ab). Distances d and h are measured centre to centre, with
conductor 2 at (+d, +h) relative to conductor 1.
"""

import math

from dataclasses import dataclass
from typing import Optional

from .exceptions import DomainError

MU_0 = 4e-7 * math.pi

# mu0 / (2 pi), the factor in front of every force
FORCE_CONSTANT = MU_0 / (2 * math.pi)

ADJACENT = 'adjacent'
NON_ADJACENT = 'non-adjacent'


def _require_finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError('{0} must be finite, got {1!r}'.format(name, value))


@dataclass(frozen=True)
class CrossSection:
    a: float
    b: float

    def __post_init__(self):
        _require_finite(a=self.a, b=self.b)

        if self.a <= 0 or self.b <= 0:
            raise DomainError('conductor dimensions must be positive, got a={0!r}, b={1!r}'.format(self.a, self.b))

    @property
    def area(self):
        return 4 * self.a * self.b


@dataclass(frozen=True)
class AdjacentLayout:
    """
    Conductors side by side, offset horizontally by d.
    """
    section: CrossSection
    d: float

    kind = ADJACENT

    def __post_init__(self):
        _require_finite(d=self.d)

        gap = self.d - 2 * self.section.a

        if not gap > 0:
            raise DomainError(
                'd > 2a is required (conductors must not touch): d={0!r}, 2a={1!r}'.format(self.d, 2 * self.section.a)
            )

    @property
    def h(self):
        return 0.0


@dataclass(frozen=True)
class NonAdjacentLayout:
    """
    Conductors offset horizontally by d and vertically by h.
    """
    section: CrossSection
    d: float
    h: float

    kind = NON_ADJACENT

    def __post_init__(self):
        _require_finite(d=self.d, h=self.h)

        failed = []

        if not self.d - 2 * self.section.a > 0:
            failed.append('d > 2a (d={0!r}, 2a={1!r})'.format(self.d, 2 * self.section.a))

        if not self.h - 2 * self.section.b > 0:
            failed.append('h > 2b (h={0!r}, 2b={1!r})'.format(self.h, 2 * self.section.b))

        if failed:
            raise DomainError('required: {0}'.format(' and '.join(failed)))


@dataclass(frozen=True)
class CurrentPair:
    i1: float
    i2: float

    def __post_init__(self):
        _require_finite(i1=self.i1, i2=self.i2)

    @property
    def product(self):
        return self.i1 * self.i2


@dataclass(frozen=True)
class ForcePerLength:
    """
    Force per unit length on conductor 1 exerted by conductor 2. With
    same-sign currents both components are non-negative (attraction).
    """
    fx: Optional[float]
    fy: Optional[float] = 0.0

    def __neg__(self):
        return ForcePerLength(*[None if f is None else -f for f in (self.fx, self.fy)])


def validate_adjacent(section, d):
    return AdjacentLayout(section, d)


def validate_non_adjacent(section, d, h):
    return NonAdjacentLayout(section, d, h)


def make_layout(a, b, d, h=None):
    """
    Build the layout implied by the arguments: adjacent when h is None.
    """
    section = CrossSection(a, b)

    if h is None:
        return validate_adjacent(section, d)

    return validate_non_adjacent(section, d, h)
