"""
Run configs: JSON documents describing one scalar, sweep or time-series
computation and where its output goes.
"""

import json

from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from .exceptions import ConfigError, DomainError
from .forces import CurrentSeries, MethodSpec, default_components, waveform_series
from .forms import CSV, SWEEP, TIMESERIES, RunConfigForm, form_errors
from .model import CrossSection, CurrentPair, make_layout
from .quadrature import QuadratureSpec
from .sweep import LinearRange, SweepConfig, validate_grid


@dataclass(frozen=True)
class OutputSpec:
    format: str = CSV
    path: Optional[str] = None


@dataclass(frozen=True)
class RunConfig:
    mode: str
    section: CrossSection
    d: object
    h: object = None
    currents: Optional[CurrentPair] = None
    series: Optional[CurrentSeries] = None
    components: Optional[Tuple[str, ...]] = None
    method: MethodSpec = field(default_factory=MethodSpec)
    output: OutputSpec = field(default_factory=OutputSpec)

    @property
    def layout(self):
        return make_layout(self.section.a, self.section.b, self.d, self.h)

    def requested_components(self):
        if self.components:
            return self.components

        return default_components(self.layout)

    def sweep_config(self):
        return SweepConfig(
            section=self.section,
            d_range=_as_range(self.d),
            h_range=None if self.h is None else _as_range(self.h),
            currents=self.currents,
            components=self.components,
            method=self.method,
        )

    def with_output(self, format=None, path=None):
        output = replace(self.output, format=format or self.output.format, path=path or self.output.path)

        return replace(self, output=output)


def _as_range(value):
    if isinstance(value, LinearRange):
        return value

    return LinearRange(value, value, 1)


def method_spec(method):
    """
    MethodSpec from the cleaned method object of a config, defaults filled
    in from app_config.
    """
    if not method:
        return MethodSpec()

    defaults = QuadratureSpec()
    quadrature = QuadratureSpec(
        order=method.get('order') or defaults.order,
        max_subdivisions=defaults.max_subdivisions if method.get('max_subdivisions') is None else method['max_subdivisions'],
        rel_tol=method.get('rel_tol') or defaults.rel_tol,
    )

    return MethodSpec(method['name'], quadrature, method.get('filament_n'))


def _series(cleaned_data):
    waveform = cleaned_data.get('waveform')

    if waveform:
        return waveform_series(
            waveform['amplitude'],
            waveform['frequency_hz'],
            waveform.get('phase1_rad') or 0.0,
            waveform.get('phase2_rad') or 0.0,
            waveform['samples'],
            waveform.get('periods') or 1,
        )

    currents = cleaned_data['currents']

    return CurrentSeries(tuple(zip(currents['i1'], currents['i2'])), currents.get('t'))


def parse_run_config(data):
    """
    Validate a decoded JSON config, schema first and then the validity
    constraints of every geometry it describes. Raises ConfigError with
    every problem found.
    """
    form = RunConfigForm(data)

    if not form.is_valid():
        raise ConfigError(form_errors(form))

    cleaned_data = form.cleaned_data
    geometry = cleaned_data['geometry']
    mode = cleaned_data['mode']
    output = cleaned_data.get('output') or {}

    try:
        section = CrossSection(geometry['a'], geometry['b'])
    except DomainError as e:
        raise ConfigError('geometry: {0}'.format(e.reason))

    if mode == TIMESERIES:
        try:
            extra = {'series': _series(cleaned_data)}
        except DomainError as e:
            raise ConfigError('currents: {0}'.format(e.reason))
    else:
        currents = cleaned_data['currents']
        extra = {'currents': CurrentPair(currents['i1'], currents['i2'])}

    config = RunConfig(
        mode=mode,
        section=section,
        d=geometry['d'],
        h=geometry.get('h'),
        components=cleaned_data.get('components'),
        method=method_spec(cleaned_data.get('method')),
        output=OutputSpec(output.get('format') or CSV, output.get('path') or None),
        **extra
    )

    try:
        if mode == SWEEP:
            validate_grid(config.sweep_config())
        else:
            make_layout(section.a, section.b, config.d, config.h)
    except DomainError as e:
        raise ConfigError('geometry: {0}'.format(e.reason))

    return config


def load_run_config(path):
    """
    Read and validate a config file. OSError propagates for I/O problems.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise ConfigError('{0} is not valid UTF-8: {1}'.format(path, e))

    return loads_run_config(text, path)


def loads_run_config(text, source='<config>'):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ConfigError('{0} is not valid JSON: {1}'.format(source, e))

    return parse_run_config(data)
