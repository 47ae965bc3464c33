"""
CSV and JSON writers for scalar, sweep and time-series results.

Column contract, stable across releases:

    scalar      fx[,fy]
    sweep       d[,h],fx[,fy]
    timeseries  t,i1,i2,fx[,fy]

Numbers are written in scientific notation with 9 significant digits, so
the same run always produces the same bytes.
"""

import app_config
import csv
import io
import json
import logging
import sys

from dataclasses import dataclass, field
from typing import Tuple

from .forms import CSV, JSON, SWEEP, TIMESERIES
from .kernels import COMPONENTS

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


@dataclass(frozen=True)
class OutputTable:
    mode: str
    columns: Tuple[str, ...]
    rows: Tuple[tuple, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError('row {0!r} does not match columns {1}'.format(row, self.columns))


def format_number(value):
    return app_config.NUMBER_FORMAT.format(float(value))


def _metadata(config, **extra):
    metadata = {
        'units': app_config.FORCE_UNITS,
        'method': config.method.describe(),
        'version': app_config.VERSION,
        'mode': config.mode,
        'a': config.section.a,
        'b': config.section.b,
    }
    metadata.update(extra)

    return metadata


def _force_columns(components):
    return tuple('f' + c for c in COMPONENTS if c in components)


def _force_values(result, components):
    return tuple(getattr(result, 'f' + c) for c in COMPONENTS if c in components)


def scalar_table(config, result):
    components = config.requested_components()
    metadata = _metadata(config, d=config.d, h=config.h, i1=config.currents.i1, i2=config.currents.i2)

    return OutputTable(config.mode, _force_columns(components), (_force_values(result, components),), metadata)


def sweep_table(config, result):
    metadata = _metadata(config, kind=result.kind, i1=config.currents.i1, i2=config.currents.i2)

    return OutputTable(SWEEP, tuple(result.columns), tuple(tuple(row) for row in result.table()), metadata)


def timeseries_table(config, forces, summaries=None):
    """
    One row per sample. Without timestamps in the config, t is the sample
    index.
    """
    series = config.series
    components = config.requested_components()
    timestamps = series.timestamps or tuple(float(k) for k in range(len(series)))

    rows = tuple(
        (t, i1, i2) + _force_values(result, components)
        for t, (i1, i2), result in zip(timestamps, series.samples, forces)
    )

    metadata = _metadata(
        config,
        d=config.d,
        h=config.h,
        t_units='s' if series.timestamps else 'sample',
    )

    if summaries:
        metadata['summary'] = {
            'f' + component: {
                'peak': summary.peak,
                'mean': summary.mean,
                'dominant_frequency_hz': summary.dominant_frequency_hz,
            }
            for component, summary in summaries.items()
        }

    return OutputTable(TIMESERIES, ('t', 'i1', 'i2') + _force_columns(components), rows, metadata)


def render_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(table.columns)

    for row in table.rows:
        writer.writerow([format_number(value) for value in row])

    return buffer.getvalue()


def _rounded(value):
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}

    if isinstance(value, float):
        return float(format_number(value))

    return value


def render_json(table):
    document = {
        'metadata': _rounded(table.metadata),
        'columns': list(table.columns),
        'rows': [[float(format_number(value)) for value in row] for row in table.rows],
    }

    return json.dumps(document, indent=2, sort_keys=True) + '\n'


RENDERERS = {
    CSV: render_csv,
    JSON: render_json,
}


def emit(table, output, stream=None):
    """
    Write a table in the format of the output spec, to its path or to
    stream (standard output by default) when it has none. OSError
    propagates.
    """
    text = RENDERERS[output.format](table)

    if output.path:
        with open(output.path, 'w', newline='') as f:
            f.write(text)

        logger.info('wrote %d rows to %s', len(table.rows), output.path)
    else:
        (stream or sys.stdout).write(text)

    return text
