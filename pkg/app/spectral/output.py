"""
Deterministic CSV and JSON writers.

Floats are written with 17 significant digits and a '.' decimal point
whatever the locale, so identical runs give byte-identical files.
"""
import csv
import json
import math
import numbers

import numpy as np


def format_value(value):
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return '%.17g' % value
    return str(value)


def write_table(table, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_value(value) for value in row])
    if table.footer is not None:
        stream.write(table.footer + '\n')


def _plain(value):
    """Turn numpy scalars into JSON-friendly Python values."""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, numbers.Complex):
        return [float(value.real), float(value.imag)]
    return value


def write_json(data, stream):
    """Single write: command OutputWrappers end every write with a newline."""
    stream.write(json.dumps(_plain(data), indent=2, sort_keys=True) + '\n')


def table_payload(table):
    return _plain({
        'header': table.header,
        'rows': table.records(),
        'summary': table.summary,
        'footer': table.footer,
    })
