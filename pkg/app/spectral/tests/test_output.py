"""
Tests for the CSV and JSON writers.
"""
import io
import json
import math

import numpy as np

from django.test import SimpleTestCase

from spectral.output import (
    format_value,
    table_payload,
    write_json,
    write_table,
)
from spectral.tables import Table


class FormatTests(SimpleTestCase):
    """Test value formatting."""

    def test_format_value(self):
        samples = [
            (None, ''),
            (True, 'true'),
            (np.bool_(False), 'false'),
            (3, '3'),
            (np.int64(-2), '-2'),
            (0.1, '0.10000000000000001'),
            (np.float64(0.5), '0.5'),
            ('moments', 'moments'),
        ]
        for value, expected in samples:
            with self.subTest(value=value):
                self.assertEqual(format_value(value), expected)

    def test_float_roundtrip(self):
        value = math.pi / 7

        self.assertEqual(float(format_value(value)), value)


class WriterTests(SimpleTestCase):
    """Test writing tables and payloads."""

    def setUp(self):
        self.table = Table(['n', 'alpha', 'pass'],
                           [(1, 0.25, True), (2, None, False)],
                           {'max': 0.25}, 'PASS')

    def test_write_table(self):
        stream = io.StringIO()

        write_table(self.table, stream)

        self.assertEqual(
            stream.getvalue(),
            'n,alpha,pass\n1,0.25,true\n2,,false\nPASS\n',
        )

    def test_table_payload(self):
        payload = table_payload(self.table)

        self.assertEqual(payload['rows'][0], {'n': 1, 'alpha': 0.25,
                                              'pass': True})
        self.assertIsNone(payload['rows'][1]['alpha'])
        self.assertEqual(payload['footer'], 'PASS')

    def test_write_json(self):
        stream = io.StringIO()

        write_json({'b': 1 + 2j, 'a': float('inf'), 'c': np.bool_(True),
                    3: np.float64(0.5)}, stream)

        data = json.loads(stream.getvalue())
        self.assertEqual(data, {'a': None, 'b': [1.0, 2.0], 'c': True,
                                '3': 0.5})
        self.assertTrue(stream.getvalue().startswith('{\n  "3"'))
