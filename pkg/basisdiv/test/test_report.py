#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the report serialization.
"""

import json
import logging
import unittest

from pathlib import Path

from basisdiv.algebra import reduce_mod
from basisdiv.inputs import load_corpus
from basisdiv.models.semi import check_semi_division
from basisdiv.report import JSON, SCHEMA_VERSION, TEXT, Report, emit_report, write_report

logger = logging.getLogger(__name__)

def semi_report(timings=None):
    A = reduce_mod(load_corpus("ex1"), 2)
    results = {"semi": check_semi_division(A).to_dict(A)}
    return Report("classify-basis", {"algebra": "ex1", "reduce": 2}, results, exit_code=0, timings=timings)

class TestReport(unittest.TestCase):

    def test_json_schema(self):
        out = json.loads(emit_report(semi_report(), JSON).decode("utf-8"))
        self.assertEqual(SCHEMA_VERSION, out["schema_version"])
        self.assertEqual("classify-basis", out["command"])
        self.assertEqual({"algebra": "ex1", "reduce": 2}, out["arguments"])
        self.assertEqual(0, out["exit_code"])
        self.assertNotIn("timings", out)
        witness = out["results"]["semi"]["witness"]
        self.assertTrue(witness["replayed"])
        self.assertEqual(["b"], witness["missing"])

    def test_byte_stable(self):
        for format in (TEXT, JSON):
            self.assertEqual(emit_report(semi_report(), format), emit_report(semi_report(), format))

    def test_sorted_keys(self):
        data = emit_report(semi_report(), JSON).decode("utf-8")
        self.assertLess(data.index('"arguments"'), data.index('"command"'))
        self.assertTrue(data.endswith("}\n"))

    def test_timings(self):
        out = semi_report(timings={"total": 0.1234567891}).to_dict()
        self.assertEqual({"total": 0.123457}, out["timings"])

    def test_text(self):
        text = emit_report(semi_report(), TEXT).decode("utf-8")
        self.assertIn("command: classify-basis", text)
        self.assertIn("status: Fails", text)
        self.assertIn("replayed: yes", text)
        self.assertTrue(text.endswith("\n"))

    def test_text_scalars(self):
        report = Report("ann", {}, {"rank": 0, "basis": [], "empty": {}, "none": None})
        text = emit_report(report, TEXT).decode("utf-8")
        self.assertIn("basis: []", text)
        self.assertIn("empty: {}", text)
        self.assertIn("none: -", text)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            emit_report(semi_report(), "xml")

    def test_write_report(self):
        p = Path("basisdiv/test/test_data/test_report.json")
        report = semi_report()
        write_report(report, str(p), JSON)
        self.assertTrue(p.exists())
        self.assertEqual(emit_report(report, JSON), p.read_bytes())
        p.unlink()

    def test_str(self):
        self.assertEqual("Report of classify-basis with exit code 0", str(semi_report()))

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
