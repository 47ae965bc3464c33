"""
Numerical evaluation of the fourfold force integral.

Both conductors are parametrized over [0, 2a] x [-b, b]. The filament
separation only depends on x2 - x1 and y2 - y1, and the difference of two
uniform variables on [0, 2c] has the triangular density 2c - |s|, so the
fourfold integral collapses exactly to

    G = 1 / (4ab)^2 * iint w_a(u - d) w_b(v - h) K(u, v) du dv

over [d - 2a, d + 2a] x [h - 2b, h + 2b]. The hat weights have kinks at
u = d and v = h, which is where the domain is split into four panels.
"""

import app_config
import functools
import logging
import math

import numpy as np

from dataclasses import dataclass

from .exceptions import ArgumentError, ConvergenceError
from .kernels import get_kernel, kernel_array

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


@dataclass(frozen=True)
class QuadratureSpec:
    order: int = app_config.QUADRATURE_ORDER
    max_subdivisions: int = app_config.QUADRATURE_MAX_SUBDIVISIONS
    rel_tol: float = app_config.QUADRATURE_REL_TOL

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 2:
            raise ArgumentError('quadrature order must be an integer >= 2, got {0!r}'.format(self.order))

        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 0:
            raise ArgumentError('max_subdivisions must be a non-negative integer, got {0!r}'.format(self.max_subdivisions))

        if not self.rel_tol > 0:
            raise ArgumentError('rel_tol must be positive, got {0!r}'.format(self.rel_tol))


@dataclass(frozen=True)
class GeometryFactor:
    """
    Current-independent part of the force: F = mu0 / (2 pi) * i1 * i2 * value.
    Units 1/m. error is the quadrature error estimate, 0 for exact paths.
    """
    value: float
    error: float = 0.0

    def __float__(self):
        return float(self.value)


@functools.lru_cache(maxsize=None)
def _rule(n):
    nodes, weights = np.polynomial.legendre.leggauss(n)

    # Mirror-symmetric to the last bit
    nodes = (nodes - nodes[::-1]) / 2
    weights = (weights + weights[::-1]) / 2

    nodes.flags.writeable = False
    weights.flags.writeable = False

    return nodes, weights


def gauss_legendre_rule(n):
    """
    Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials up
    to degree 2n - 1.
    """
    if int(n) != n or n < 1:
        raise ArgumentError('a Gauss-Legendre rule needs at least one point, got n={0!r}'.format(n))

    nodes, weights = _rule(int(n))

    return nodes.copy(), weights.copy()


def _mapped_rule(lo, hi, n):
    nodes, weights = _rule(n)
    mid = (lo + hi) / 2
    half = (hi - lo) / 2

    return mid + half * nodes, half * weights


def _bisect(box):
    halves = []

    for lo, hi in box:
        mid = (lo + hi) / 2
        halves.append(((lo, mid), (mid, hi)))

    children = [()]

    for pair in halves:
        children = [child + (half,) for child in children for half in pair]

    return children


def _measure(box):
    measure = 1.0

    for lo, hi in box:
        measure *= hi - lo

    return measure


class _Adaptive(object):
    """
    Tensor Gauss-Legendre on boxes with bisection of every box whose order-n
    and order-2n results differ by more than its share of the tolerance.
    """
    def __init__(self, rule, spec):
        self.rule = rule
        self.spec = spec
        self.unconverged = 0

    def integrate(self, boxes):
        n = self.spec.order
        roots = [(box, self.rule(box, n), self.rule(box, 2 * n)) for box in boxes]

        scale = math.fsum(fine[1] for _, _, fine in roots)
        total_measure = math.fsum(_measure(box) for box in boxes)
        tol = self.spec.rel_tol * scale if scale > 0 else self.spec.rel_tol

        leaves = []

        for box, coarse, fine in roots:
            self._refine(box, coarse, fine, tol / total_measure, 0, leaves)

        value = math.fsum(leaf[0] for leaf in leaves)
        error = math.fsum(leaf[1] for leaf in leaves)

        if self.unconverged:
            logger.warning('%d panels still above tolerance at depth %d', self.unconverged, self.spec.max_subdivisions)

            raise ConvergenceError(value, error)

        return value, error

    def _refine(self, box, coarse, fine, density, depth, leaves):
        error = abs(fine[0] - coarse[0])
        tol = density * _measure(box)

        if error <= tol:
            leaves.append((fine[0], error))
            return

        if depth >= self.spec.max_subdivisions:
            self.unconverged += 1
            leaves.append((fine[0], error))
            return

        logger.debug('bisecting panel %s at depth %d (error %.3e > %.3e)', box, depth, error, tol)

        n = self.spec.order

        for child in _bisect(box):
            self._refine(child, self.rule(child, n), self.rule(child, 2 * n), density, depth + 1, leaves)


def hat_weight(s, c):
    """
    Density of x2 - x1 for x1, x2 uniform on [0, 2c], unnormalized.
    """
    return np.maximum(2 * c - np.abs(s), 0.0)


@dataclass(frozen=True)
class ReducedIntegral:
    """
    The two-dimensional hat-weighted form of the fourfold integral of a
    layout.
    """
    d: float
    h: float
    a: float
    b: float

    @property
    def normalization(self):
        return (4 * self.a * self.b) ** 2

    @property
    def panels(self):
        d, h, a, b = self.d, self.h, self.a, self.b

        return [
            ((d - 2 * a, d), (h - 2 * b, h)),
            ((d - 2 * a, d), (h, h + 2 * b)),
            ((d, d + 2 * a), (h - 2 * b, h)),
            ((d, d + 2 * a), (h, h + 2 * b)),
        ]

    def _rule(self, func):
        def rule(box, n):
            (u0, u1), (v0, v1) = box
            u, wu = _mapped_rule(u0, u1, n)
            v, wv = _mapped_rule(v0, v1, n)

            wu = wu * hat_weight(u - self.d, self.a)
            wv = wv * hat_weight(v - self.h, self.b)

            terms = np.outer(wu, wv) * func(u[:, None], v[None, :])

            return math.fsum(terms.ravel()), math.fsum(np.abs(terms).ravel())

        return rule

    def integrate(self, func, spec, label='integral'):
        """
        Integrate func(u, v) against the hat weights, normalized so that
        func = 1 gives 1.
        """
        adaptive = _Adaptive(self._rule(func), spec)
        where = '{0} at d={1!r}, h={2!r}'.format(label, self.d, self.h)

        return _normalized(lambda: adaptive.integrate(self.panels), self.normalization, where, spec)

    def estimate(self, func, order):
        """
        Order-n result and its distance to the order-2n result on the four
        kink panels, without refinement.
        """
        rule = self._rule(func)
        coarse = math.fsum(rule(panel, order)[0] for panel in self.panels)
        fine = math.fsum(rule(panel, 2 * order)[0] for panel in self.panels)

        return coarse / self.normalization, abs(fine - coarse) / self.normalization


def _normalized(integral, normalization, where, spec):
    try:
        value, error = integral()
    except ConvergenceError as e:
        raise ConvergenceError(
            e.estimate / normalization, e.error / normalization,
            '{0} did not reach rel_tol={1:g} within {2} subdivisions (error estimate {3:.3e})'.format(
                where, spec.rel_tol, spec.max_subdivisions, e.error / normalization
            )
        )

    return GeometryFactor(value / normalization, error / normalization)


def reduce_to_2d(layout):
    return ReducedIntegral(layout.d, layout.h, layout.section.a, layout.section.b)


def _component_kernel(component):
    get_kernel(component)

    return functools.partial(kernel_array, component)


def integrate_reduced(layout, component, spec=None):
    spec = spec or QuadratureSpec()
    label = 'reduced quadrature of component {0}'.format(component)

    return reduce_to_2d(layout).integrate(_component_kernel(component), spec, label)


def integrate_4d(layout, component, spec=None):
    """
    Tensor Gauss-Legendre over the literal fourfold box (x1, x2, y1, y2).
    Cost grows as order^4; meant for cross-checks at modest order.
    """
    spec = spec or QuadratureSpec()
    kernel = _component_kernel(component)
    a, b = layout.section.a, layout.section.b
    d, h = layout.d, layout.h

    def rule(box, n):
        (x10, x11), (x20, x21), (y10, y11), (y20, y21) = box
        x1, w1 = _mapped_rule(x10, x11, n)
        x2, w2 = _mapped_rule(x20, x21, n)
        y1, wy1 = _mapped_rule(y10, y11, n)
        y2, wy2 = _mapped_rule(y20, y21, n)

        weights = w2[:, None, None] * wy1[None, :, None] * wy2[None, None, :]
        m = h + y2[None, None, :] - y1[None, :, None]

        values = []
        magnitudes = []

        # One x1 node at a time keeps memory at n^3
        for x, w in zip(x1, w1):
            terms = weights * kernel(d + x2[:, None, None] - x, m)
            values.append(w * np.sum(terms))
            magnitudes.append(w * np.sum(np.abs(terms)))

        return math.fsum(values), math.fsum(magnitudes)

    box = ((0.0, 2 * a), (0.0, 2 * a), (-b, b), (-b, b))
    adaptive = _Adaptive(rule, spec)
    where = 'direct 4D quadrature of component {0} at d={1!r}, h={2!r}'.format(component, d, h)

    return _normalized(lambda: adaptive.integrate([box]), (4 * a * b) ** 2, where, spec)
