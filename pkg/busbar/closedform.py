"""
Closed-form geometry factors.

The hat weight w_c(s) = 2c - |s| has second derivative
delta(s + 2c) - 2 delta(s) + delta(s - 2c). Integrating the hat-weighted
form of the force integral by parts twice in each variable moves all four
derivatives onto a primitive P with d^4 P / du^2 dv^2 = u / (u^2 + v^2),
leaving a nine-point (1, -2, 1) x (1, -2, 1) stencil of P around (d, h).

With z = u + iv, u / (u^2 + v^2) = Re(1/z), and P = -Re(z^3 log z) / 6
satisfies the equation because d^2/du^2 d^2/dv^2 of an analytic function
is minus its fourth derivative:

    P(u, v) = -(u^3 - 3uv^2) ln(u^2 + v^2) / 12 + (3u^2 v - v^3) atan2(v, u) / 6
"""

import math

from dataclasses import dataclass

from .exceptions import DomainError
from .kernels import X, get_kernel
from .quadrature import GeometryFactor


@dataclass(frozen=True)
class StencilCoefficients:
    weights: tuple = (1.0, -2.0, 1.0)
    offsets: tuple = (-1, 0, 1)

    def knots(self, center, half_width):
        return [center + 2 * half_width * k for k in self.offsets]


STENCIL = StencilCoefficients()


@dataclass(frozen=True)
class Primitive:
    """
    Fourth antiderivative of the x-kernel, twice in u and twice in v.

    With a reference point (u0, v0) the terms -(u^3 - 3uv^2) ln(r0^2) / 12
    and (3u^2 v - v^3) theta0 / 6 are dropped. Both are annihilated by the
    stencil and dropping them keeps the knot values small near the reference.
    The reference and every evaluation point must lie in the same open half
    plane through the origin.
    """
    u0: float = None
    v0: float = None

    def __call__(self, u, v):
        if u == 0 and v == 0:
            raise DomainError('the primitive is singular at the origin (u = v = 0)')

        r2 = u * u + v * v
        real = u * u * u - 3 * u * v * v
        imag = 3 * u * u * v - v * v * v

        if self.u0 is None:
            log_r2 = math.log(r2)
            angle = math.atan2(v, u)
        else:
            log_r2 = math.log(r2 / (self.u0 * self.u0 + self.v0 * self.v0))
            angle = math.atan2(v * self.u0 - u * self.v0, u * self.u0 + v * self.v0)

        # Zero on the axes exactly, not by rounding
        log_term = real * log_r2 if real != 0 else 0.0
        angle_term = imag * angle if imag != 0 else 0.0

        return -log_term / 12 + angle_term / 6


def primitive_P(u, v):
    return Primitive()(u, v)


def corner_stencil(primitive, layout, component=X):
    """
    Nine-point stencil of primitive around (d, h), normalized by the
    cross-section areas. For the y-component the primitive is evaluated
    with its arguments swapped.
    """
    get_kernel(component)

    a, b = layout.section.a, layout.section.b
    us = STENCIL.knots(layout.d, a)
    vs = STENCIL.knots(layout.h, b)

    terms = []

    for cu, u in zip(STENCIL.weights, us):
        for cv, v in zip(STENCIL.weights, vs):
            value = primitive(u, v) if component == X else primitive(v, u)
            terms.append(cu * cv * value)

    return math.fsum(terms) / (4 * a * b) ** 2


def stencil_geometry_factor(layout, component=X):
    if component == X:
        primitive = Primitive(layout.d, layout.h)
    else:
        primitive = Primitive(layout.h, layout.d)

    return GeometryFactor(corner_stencil(primitive, layout, component))
