"""
Parametric sweeps over d (adjacent) or over the d x h grid (non-adjacent).
"""

import app_config
import logging

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .exceptions import ConfigError, DomainError
from .forces import MethodSpec, force
from .kernels import COMPONENTS, X
from .model import ADJACENT, NON_ADJACENT, CrossSection, CurrentPair, make_layout

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


@dataclass(frozen=True)
class LinearRange:
    """
    count points from start to stop, both included.
    """
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 1:
            raise ConfigError('range count must be a positive integer, got {0!r}'.format(self.count))

    def values(self):
        if self.count == 1:
            return [self.start]

        step = (self.stop - self.start) / (self.count - 1)
        values = [self.start + k * step for k in range(self.count - 1)]

        return values + [self.stop]


@dataclass(frozen=True)
class SweepConfig:
    section: CrossSection
    d_range: LinearRange
    h_range: Optional[LinearRange] = None
    currents: CurrentPair = CurrentPair(1.0, 1.0)
    components: Optional[Tuple[str, ...]] = None
    method: MethodSpec = field(default_factory=MethodSpec)

    @property
    def kind(self):
        return ADJACENT if self.h_range is None else NON_ADJACENT

    def requested_components(self):
        if self.components:
            return tuple(c for c in COMPONENTS if c in self.components)

        return (X,) if self.kind == ADJACENT else COMPONENTS

    def grid(self):
        """
        (d, h) points in output order: d ascending for a 1D sweep, h-major
        with d varying fastest for a 2D sweep.
        """
        ds = self.d_range.values()

        if self.h_range is None:
            return [(d, None) for d in ds]

        return [(d, h) for h in self.h_range.values() for d in ds]


@dataclass(frozen=True)
class SweepRow:
    d: float
    h: Optional[float]
    fx: Optional[float]
    fy: Optional[float]


@dataclass(frozen=True)
class SweepResult:
    kind: str
    components: Tuple[str, ...]
    rows: Tuple[SweepRow, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def columns(self):
        columns = ['d'] if self.kind == ADJACENT else ['d', 'h']

        return columns + ['f' + c for c in self.components]

    def table(self):
        return [[getattr(row, name) for name in self.columns] for row in self.rows]


def validate_grid(config):
    """
    Build the layout of every grid point, or raise ConfigError listing every
    point that violates the validity constraints.
    """
    layouts = []
    problems = []

    for d, h in config.grid():
        try:
            layouts.append(make_layout(config.section.a, config.section.b, d, h))
        except DomainError as e:
            where = 'd={0!r}'.format(d) if h is None else 'd={0!r}, h={1!r}'.format(d, h)
            problems.append('grid point {0}: {1}'.format(where, e.reason))

    if problems:
        raise ConfigError(problems)

    return layouts


def run_sweep(config):
    layouts = validate_grid(config)
    components = config.requested_components()

    logger.info('%s sweep over %d points with %s', config.kind, len(layouts), config.method.method)

    rows = []

    for layout in layouts:
        result = force(layout, config.currents, config.method, components)
        h = layout.h if config.kind == NON_ADJACENT else None
        rows.append(SweepRow(layout.d, h, result.fx, result.fy))

    metadata = {
        'kind': config.kind,
        'a': config.section.a,
        'b': config.section.b,
        'i1': config.currents.i1,
        'i2': config.currents.i2,
        'method': config.method.describe(),
    }

    return SweepResult(config.kind, components, tuple(rows), metadata)