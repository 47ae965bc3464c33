"""
Schema validation of JSON run configs.

Each object of the config is bound to a Django form; unknown keys, missing
keys and malformed values are all collected before anything is reported.
"""

import math

from django import forms

from .forces import Method
from .kernels import COMPONENTS
from .model import ADJACENT, NON_ADJACENT
from .sweep import LinearRange

SWEEP = 'sweep'
TIMESERIES = 'timeseries'
MODES = (ADJACENT, NON_ADJACENT, SWEEP, TIMESERIES)

CSV = 'csv'
JSON = 'json'
FORMATS = (CSV, JSON)


def _choices(values):
    return [(value, value) for value in values]


class StrictForm(forms.Form):
    """
    A form over one JSON object that also rejects keys it does not know.
    """
    def __init__(self, data, *args, **kwargs):
        self.unknown_keys = []

        if isinstance(data, dict):
            self.unknown_keys = sorted(set(data) - set(self.base_fields))
        else:
            data = {}

        super(StrictForm, self).__init__(data, *args, **kwargs)

    def clean(self):
        cleaned_data = super(StrictForm, self).clean()

        for key in self.unknown_keys:
            self.add_error(None, 'unknown key "{0}"'.format(key))

        return cleaned_data


class NumberField(forms.FloatField):
    """
    A finite JSON number. Strings and booleans are not numbers here.
    """
    def to_python(self, value):
        if value in self.empty_values:
            return None

        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise forms.ValidationError('expected a number, got {0!r}'.format(value), code='invalid')

        return super(NumberField, self).to_python(value)


class CountField(forms.IntegerField):
    def to_python(self, value):
        if value in self.empty_values:
            return None

        integral = isinstance(value, int) or isinstance(value, float) and value.is_integer()

        if isinstance(value, bool) or not integral:
            raise forms.ValidationError('expected an integer, got {0!r}'.format(value), code='invalid')

        return super(CountField, self).to_python(value)


class NumberListField(forms.Field):
    def to_python(self, value):
        if value in self.empty_values:
            return None

        if not isinstance(value, list) or not value:
            raise forms.ValidationError('expected a non-empty list of numbers', code='invalid')

        for item in value:
            if isinstance(item, bool) or not isinstance(item, (int, float)) or not math.isfinite(item):
                raise forms.ValidationError('expected finite numbers, got {0!r}'.format(item), code='invalid')

        return [float(item) for item in value]


class RangeForm(StrictForm):
    start = NumberField()
    stop = NumberField()
    count = CountField(min_value=1)


class AxisField(forms.Field):
    """
    A number, or a {start, stop, count} linear range.
    """
    def to_python(self, value):
        if value in self.empty_values:
            return None

        if isinstance(value, dict):
            form = RangeForm(value)

            if not form.is_valid():
                raise forms.ValidationError(form_errors(form))

            return LinearRange(form.cleaned_data['start'], form.cleaned_data['stop'], form.cleaned_data['count'])

        return NumberField().clean(value)


class GeometryForm(StrictForm):
    a = NumberField()
    b = NumberField()
    d = AxisField()
    h = AxisField(required=False)


class CurrentsForm(StrictForm):
    i1 = NumberField()
    i2 = NumberField()


class SampledCurrentsForm(StrictForm):
    i1 = NumberListField()
    i2 = NumberListField()
    t = NumberListField(required=False)

    def clean(self):
        cleaned_data = super(SampledCurrentsForm, self).clean()
        lengths = set(len(cleaned_data[k]) for k in ('i1', 'i2', 't') if cleaned_data.get(k))

        if len(lengths) > 1:
            raise forms.ValidationError('i1, i2 and t must have the same length')

        return cleaned_data


class WaveformForm(StrictForm):
    amplitude = NumberField()
    frequency_hz = NumberField()
    phase1_rad = NumberField(required=False)
    phase2_rad = NumberField(required=False)
    samples = CountField(min_value=1)
    periods = NumberField(required=False)

    def clean_frequency_hz(self):
        value = self.cleaned_data['frequency_hz']

        if not value > 0:
            raise forms.ValidationError('frequency_hz must be positive')

        return value

    def clean_periods(self):
        value = self.cleaned_data.get('periods')

        if value is not None and not value > 0:
            raise forms.ValidationError('periods must be positive')

        return value


class MethodForm(StrictForm):
    name = forms.ChoiceField(choices=_choices([m.value for m in Method]))
    order = CountField(min_value=2, required=False)
    max_subdivisions = CountField(min_value=0, required=False)
    rel_tol = NumberField(required=False)
    filament_n = CountField(min_value=1, required=False)

    def clean_rel_tol(self):
        value = self.cleaned_data.get('rel_tol')

        if value is not None and not value > 0:
            raise forms.ValidationError('rel_tol must be positive')

        return value


class OutputForm(StrictForm):
    format = forms.ChoiceField(choices=_choices(FORMATS), required=False)
    path = forms.CharField(required=False)


class RunConfigForm(StrictForm):
    """
    Top level of a run config. Nested objects are bound to their own forms
    in clean(), and their errors are reported under their key.
    """
    mode = forms.ChoiceField(choices=_choices(MODES))
    geometry = forms.Field(required=False)
    currents = forms.Field(required=False)
    waveform = forms.Field(required=False)
    components = forms.Field(required=False)
    method = forms.Field(required=False)
    output = forms.Field(required=False)

    def _bind(self, key, form_class, required=True):
        value = self.cleaned_data.get(key)

        if value is None:
            if required:
                self.add_error(None, '{0}: this object is required'.format(key))
            return None

        if not isinstance(value, dict):
            self.add_error(None, '{0}: expected an object'.format(key))
            return None

        form = form_class(value)

        if not form.is_valid():
            for message in form_errors(form, key):
                self.add_error(None, message)
            return None

        return form.cleaned_data

    def clean(self):
        cleaned_data = super(RunConfigForm, self).clean()
        mode = cleaned_data.get('mode')

        cleaned_data['geometry'] = self._bind('geometry', GeometryForm)
        cleaned_data['method'] = self._bind('method', MethodForm, required=False)
        cleaned_data['output'] = self._bind('output', OutputForm, required=False)

        if mode == TIMESERIES:
            if cleaned_data.get('waveform') is not None and cleaned_data.get('currents') is not None:
                self.add_error(None, 'timeseries: give either waveform or currents, not both')
            elif cleaned_data.get('waveform') is not None:
                cleaned_data['waveform'] = self._bind('waveform', WaveformForm)
            else:
                cleaned_data['currents'] = self._bind('currents', SampledCurrentsForm)
        elif mode is not None:
            if cleaned_data.get('waveform') is not None:
                self.add_error(None, 'waveform: only allowed in timeseries mode')

            cleaned_data['currents'] = self._bind('currents', CurrentsForm)

        cleaned_data['components'] = self._clean_components(cleaned_data.get('components'))
        self._check_geometry(mode, cleaned_data['geometry'])

        return cleaned_data

    def _clean_components(self, value):
        if value is None:
            return None

        if not isinstance(value, list) or not value or any(c not in COMPONENTS for c in value):
            self.add_error(None, 'components: expected a non-empty list drawn from {0}'.format(list(COMPONENTS)))
            return None

        return tuple(value)

    def _check_geometry(self, mode, geometry):
        if not geometry:
            return

        ranged = [k for k in ('d', 'h') if isinstance(geometry.get(k), LinearRange)]

        if ranged and mode != SWEEP:
            self.add_error(None, 'geometry.{0}: ranges are only allowed in sweep mode'.format(ranged[0]))

        if mode == ADJACENT and geometry.get('h') is not None:
            self.add_error(None, 'geometry.h: not used by adjacent conductors')

        if mode == NON_ADJACENT and geometry.get('h') is None:
            self.add_error(None, 'geometry.h: required for non-adjacent conductors')


def form_errors(form, prefix=None):
    """
    Form errors as 'where: message' strings in field order, where is the
    dotted path of the offending key.
    """
    messages = []

    for name, errors in form.errors.items():
        if name == '__all__':
            where = prefix
        else:
            where = name if prefix is None else '{0}.{1}'.format(prefix, name)

        for error in errors:
            messages.append(error if where is None else '{0}: {1}'.format(where, error))

    return messages
