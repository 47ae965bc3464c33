"""
Filament discretization of both conductors, an independent check on the
integral paths.

Each conductor is cut into nx * ny equal cells and each cell is replaced
by a thin wire at its centre carrying i / (nx * ny). The force is the sum
of the parallel-wire forces over all pairs of wires.
"""

import app_config
import logging
import math

import numpy as np

from dataclasses import dataclass

from .exceptions import ArgumentError, DomainError
from .kernels import COMPONENTS, X, Y, get_kernel, kernel_array
from .model import FORCE_CONSTANT, ForcePerLength
from .quadrature import GeometryFactor

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


@dataclass(frozen=True)
class FilamentGrid:
    section: object
    nx: int
    ny: int

    def __post_init__(self):
        for name in ('nx', 'ny'):
            value = getattr(self, name)

            if int(value) != value or value < 1:
                raise ArgumentError('{0} must be a positive integer, got {1!r}'.format(name, value))

    @property
    def dx(self):
        return 2 * self.section.a / self.nx

    @property
    def dy(self):
        return 2 * self.section.b / self.ny

    @property
    def x(self):
        return (np.arange(self.nx) + 0.5) * self.dx

    @property
    def y(self):
        return -self.section.b + (np.arange(self.ny) + 0.5) * self.dy

    def currents(self, i):
        return np.full((self.nx, self.ny), i / (self.nx * self.ny))


def _offsets(n):
    offsets = np.arange(-(n - 1), n)

    return offsets, (n - np.abs(offsets)).astype(float)


def filament_geometry_factor(layout, component, nx, ny, reaction=False):
    """
    Geometry factor of the filament model.

    Filament pairs only depend on the integer offset (p, q) between their
    cells, and offset p occurs nx - |p| times along x, so the double sum
    over pairs is evaluated exactly on the (2nx - 1) x (2ny - 1) offsets.
    With reaction=True the roles are exchanged and the result is the factor
    of the force on conductor 2 by conductor 1.
    """
    get_kernel(component)
    grid = FilamentGrid(layout.section, nx, ny)

    sign = -1.0 if reaction else 1.0
    p, px = _offsets(grid.nx)
    q, qy = _offsets(grid.ny)

    l = sign * layout.d + p * grid.dx
    m = sign * layout.h + q * grid.dy

    L, M = np.meshgrid(l, m, indexing='ij')

    if np.any((L == 0) & (M == 0)):
        raise DomainError('two filaments coincide; the conductors overlap')

    terms = np.outer(px, qy) * kernel_array(component, L, M)
    total = math.fsum(terms.ravel())

    return GeometryFactor(total / (grid.nx * grid.ny) ** 2)


def filament_force(layout, currents, nx=None, ny=None, reaction=False):
    nx = nx or app_config.FILAMENT_N
    ny = ny or nx

    logger.debug('filament sum with %dx%d filaments per conductor', nx, ny)

    scale = FORCE_CONSTANT * currents.i1 * currents.i2
    fx, fy = [scale * filament_geometry_factor(layout, c, nx, ny, reaction).value for c in COMPONENTS]

    return ForcePerLength(fx, fy)


def filament_pairs_force(layout, currents, nx, ny=None):
    """
    The same sum taken literally over every pair of filaments. Quartic in
    the grid size; kept as the reference for the offset grouping.
    """
    ny = ny or nx
    grid = FilamentGrid(layout.section, nx, ny)

    x1, y1 = np.meshgrid(grid.x, grid.y, indexing='ij')
    x1, y1 = x1.ravel(), y1.ravel()
    i1 = grid.currents(currents.i1).ravel()
    i2 = grid.currents(currents.i2).ravel()

    l = layout.d + x1[None, :] - x1[:, None]
    m = layout.h + y1[None, :] - y1[:, None]
    weight = FORCE_CONSTANT * np.outer(i1, i2)

    fx = math.fsum((weight * kernel_array(X, l, m)).ravel())
    fy = math.fsum((weight * kernel_array(Y, l, m)).ravel())

    return ForcePerLength(fx, fy)
