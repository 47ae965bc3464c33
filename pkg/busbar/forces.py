"""
Public force API.

adjacent_fx, non_adjacent_fx and non_adjacent_fy mirror the three
functions of the classic busbar formulas; force() and force_series() work
on layouts directly. Every path factors the force as

    F = mu0 / (2 pi) * i1 * i2 * G(layout, component)

so the geometry factor G is computed once per layout and reused for any
currents, including whole time series.
"""

import app_config
import functools
import logging

import numpy as np

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from .closedform import stencil_geometry_factor
from .exceptions import ArgumentError, DomainError
from .filament_oracle import filament_geometry_factor
from .kernels import COMPONENTS, X, Y, get_kernel
from .model import (ADJACENT, FORCE_CONSTANT, CrossSection, ForcePerLength,
                    validate_adjacent, validate_non_adjacent)
from .quadrature import GeometryFactor, QuadratureSpec, integrate_4d, integrate_reduced

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


class Method(str, Enum):
    CLOSED_FORM = 'closed-form'
    REDUCED_QUADRATURE = 'reduced-quadrature'
    DIRECT_4D = 'direct-4d'
    FILAMENT = 'filament'
    THIN_WIRE = 'thin-wire'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MethodSpec:
    method: Method = Method(app_config.DEFAULT_METHOD)
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
    filament_n: Optional[int] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'method', Method(self.method))
        except ValueError:
            raise ArgumentError('unknown method {0!r}, expected one of {1}'.format(
                self.method, ', '.join(m.value for m in Method)
            ))

        if self.filament_n is None:
            object.__setattr__(self, 'filament_n', app_config.FILAMENT_N)

        if int(self.filament_n) != self.filament_n or self.filament_n < 1:
            raise ArgumentError('filament_n must be a positive integer, got {0!r}'.format(self.filament_n))

    def describe(self):
        """
        Parameters that matter for this method, for output metadata.
        """
        description = {'name': self.method.value}

        if self.method in (Method.REDUCED_QUADRATURE, Method.DIRECT_4D):
            description.update({
                'order': self.quadrature.order,
                'max_subdivisions': self.quadrature.max_subdivisions,
                'rel_tol': self.quadrature.rel_tol,
            })
        elif self.method == Method.FILAMENT:
            description['filament_n'] = self.filament_n

        return description


@dataclass(frozen=True)
class CurrentSeries:
    """
    Current samples (i1, i2), optionally time-stamped in seconds. When
    periodic_endpoint is set the last sample closes the period and repeats
    the phase of the first one.
    """
    samples: Tuple[Tuple[float, float], ...]
    timestamps: Optional[Tuple[float, ...]] = None
    periodic_endpoint: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'samples', tuple((float(i1), float(i2)) for i1, i2 in self.samples))

        if not self.samples:
            raise DomainError('a current series needs at least one sample')

        if not np.all(np.isfinite(self.samples)):
            raise DomainError('current samples must be finite')

        if self.timestamps is not None:
            object.__setattr__(self, 'timestamps', tuple(float(t) for t in self.timestamps))

            if len(self.timestamps) != len(self.samples):
                raise DomainError('{0} timestamps for {1} samples'.format(len(self.timestamps), len(self.samples)))

    def __len__(self):
        return len(self.samples)

    @property
    def i1(self):
        return np.array([s[0] for s in self.samples])

    @property
    def i2(self):
        return np.array([s[1] for s in self.samples])


@dataclass(frozen=True)
class SeriesSummary:
    peak: float
    mean: float
    dominant_frequency_hz: Optional[float]


def thin_wire_geometry_factor(layout, component):
    """
    Both conductors collapsed onto their centre lines.
    """
    get_kernel(component)

    d, h = layout.d, layout.h
    numerator = d if component == X else h

    return GeometryFactor(numerator / (d * d + h * h))


@functools.lru_cache(maxsize=1024)
def geometry_factor(layout, component, spec):
    """
    G for one component of one layout by the method of spec. Cached: the
    arguments are immutable and the computation is pure.
    """
    method = spec.method

    if method == Method.CLOSED_FORM:
        return stencil_geometry_factor(layout, component)
    elif method == Method.REDUCED_QUADRATURE:
        return integrate_reduced(layout, component, spec.quadrature)
    elif method == Method.DIRECT_4D:
        return integrate_4d(layout, component, spec.quadrature)
    elif method == Method.FILAMENT:
        return filament_geometry_factor(layout, component, spec.filament_n, spec.filament_n)

    return thin_wire_geometry_factor(layout, component)


def _scale(i1, i2, factor):
    # One expression for scalars and arrays, so a series matches a per-sample loop
    return FORCE_CONSTANT * i1 * i2 * factor.value


def default_components(layout):
    return (X,) if layout.kind == ADJACENT else COMPONENTS


def force(layout, currents, spec=None, components=None):
    """
    Force per unit length on conductor 1 by conductor 2. The y-component of
    an adjacent layout vanishes by symmetry and is returned as 0 without
    being computed. Components not requested are None.
    """
    spec = spec or MethodSpec()

    if components is None:
        components = COMPONENTS

    values = {}

    for component in COMPONENTS:
        if component not in components:
            values[component] = None
        elif component == Y and layout.kind == ADJACENT:
            values[component] = 0.0
        else:
            values[component] = _scale(currents.i1, currents.i2, geometry_factor(layout, component, spec))

    return ForcePerLength(values[X], values[Y])


def adjacent_fx(a, b, d, i1, i2, spec=None):
    layout = validate_adjacent(CrossSection(a, b), d)

    return _scale(i1, i2, geometry_factor(layout, X, spec or MethodSpec()))


def non_adjacent_fx(a, b, d, h, i1, i2, spec=None):
    layout = validate_non_adjacent(CrossSection(a, b), d, h)

    return _scale(i1, i2, geometry_factor(layout, X, spec or MethodSpec()))


def non_adjacent_fy(a, b, d, h, i1, i2, spec=None):
    layout = validate_non_adjacent(CrossSection(a, b), d, h)

    return _scale(i1, i2, geometry_factor(layout, Y, spec or MethodSpec()))


def force_series(layout, series, components=None, spec=None):
    """
    Forces for every sample of a current series, with the geometry factor
    computed once per component.
    """
    spec = spec or MethodSpec()

    if components is None:
        components = default_components(layout)

    i1, i2 = series.i1, series.i2
    columns = {}

    for component in COMPONENTS:
        if component not in components:
            columns[component] = [None] * len(series)
        elif component == Y and layout.kind == ADJACENT:
            columns[component] = [0.0] * len(series)
        else:
            columns[component] = _scale(i1, i2, geometry_factor(layout, component, spec)).tolist()

    return [ForcePerLength(fx, fy) for fx, fy in zip(columns[X], columns[Y])]


def shape_factor(layout, component, spec=None):
    """
    Ratio of the massive-conductor force to the force between the centre
    lines.
    """
    thin = thin_wire_geometry_factor(layout, component).value

    if thin == 0:
        raise DomainError('the thin-wire {0}-force of this layout is zero; no shape factor'.format(component))

    return geometry_factor(layout, component, spec or MethodSpec()).value / thin


def waveform_series(amplitude, frequency_hz, phase1_rad=0.0, phase2_rad=0.0, samples=500, periods=1):
    """
    Sinusoidal currents i_k = A sin(2 pi f t + phase_k) sampled at
    linspace(0, periods / f, samples), both ends included.
    """
    if not frequency_hz > 0:
        raise DomainError('frequency must be positive, got {0!r}'.format(frequency_hz))

    if int(samples) != samples or samples < 1:
        raise DomainError('samples must be a positive integer, got {0!r}'.format(samples))

    if not periods > 0:
        raise DomainError('periods must be positive, got {0!r}'.format(periods))

    w = 2 * np.pi * frequency_hz
    t = np.linspace(0, periods / frequency_hz, int(samples))
    i1 = amplitude * np.sin(w * t + phase1_rad)
    i2 = amplitude * np.sin(w * t + phase2_rad)

    return CurrentSeries(tuple(zip(i1, i2)), tuple(t), periodic_endpoint=int(samples) > 1)


def series_summary(values, series):
    """
    Peak magnitude, mean and dominant non-zero frequency of one force
    component over a series. The frequency needs evenly spaced timestamps.
    """
    values = np.asarray(values, dtype=float)
    peak = float(np.max(np.abs(values)))
    body = values[:-1] if series.periodic_endpoint else values

    mean = float(np.mean(body))
    frequency = None

    if series.timestamps is not None and len(body) > 2:
        t = np.asarray(series.timestamps)
        steps = np.diff(t)

        if np.allclose(steps, steps[0], rtol=1e-9, atol=0):
            spectrum = np.abs(np.fft.rfft(body - mean))
            frequencies = np.fft.rfftfreq(len(body), steps[0])

            if spectrum[1:].size and np.max(spectrum[1:]) > 0:
                frequency = float(frequencies[1 + int(np.argmax(spectrum[1:]))])

    return SeriesSummary(peak, mean, frequency)
