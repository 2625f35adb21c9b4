#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the command line front end.
"""

import argparse
import json
import logging
import unittest

from pathlib import Path

from basisdiv.cli import COMPLETED, INCONCLUSIVE, REFUTED, USAGE_ERROR, build_parser, main, parse_field, run_command
from basisdiv.field import FieldDescriptor

logger = logging.getLogger(__name__)

OUT = Path("basisdiv/test/test_data/test_cli_report.json")
DOT = Path("basisdiv/test/test_data/test_cli.dot")

def run(*argv):
    """ Runs the CLI with a JSON report file and returns exit code and parsed report """
    code = main(list(argv) + ["--format", "json", "--out", str(OUT)])
    report = None
    if OUT.exists():
        report = json.loads(OUT.read_text(encoding="utf-8"))
        OUT.unlink()
    return code, report

class TestParseField(unittest.TestCase):

    def test_spellings(self):
        F5 = FieldDescriptor.prime_field(5)
        for text in ("F5", "F_5", "Fp:5", "5"):
            self.assertEqual(F5, parse_field(text))
        self.assertEqual(FieldDescriptor.rationals(), parse_field("q"))

    def test_errors(self):
        for text in ("F6", "R", "F"):
            with self.assertRaises(argparse.ArgumentTypeError):
                parse_field(text)

class TestCommands(unittest.TestCase):

    def test_info(self):
        code, report = run("info", "ex1")
        self.assertEqual(COMPLETED, code)
        self.assertEqual("Q", report["results"]["field"])
        self.assertEqual(["b1", "b2"], report["results"]["basis"])

    def test_ann(self):
        code, report = run("ann", "ex1")
        self.assertEqual(COMPLETED, code)
        self.assertEqual(0, report["results"]["rank"])
        self.assertEqual("ann", report["command"])

    def test_ideal(self):
        code, report = run("ideal", "ex1", "b1")
        self.assertEqual(COMPLETED, code)
        self.assertEqual(1, report["results"]["rank"])
        self.assertFalse(report["results"]["whole_algebra"])
        _, report = run("ideal", "ex1", "b2")
        self.assertTrue(report["results"]["whole_algebra"])

    def test_classify_basis(self):
        code, report = run("classify-basis", "ex1", "--reduce", "2")
        self.assertEqual(COMPLETED, code)
        results = report["results"]
        self.assertEqual("Holds", results["weak"]["status"])
        self.assertEqual("Fails", results["semi"]["status"])
        self.assertEqual("Fails", results["i"]["status"])
        self.assertEqual(2, report["arguments"]["reduce"])

    def test_classify_basis_refute(self):
        code, report = run("classify-basis", "ex1")
        self.assertEqual(INCONCLUSIVE, code)
        self.assertEqual("Unknown", report["results"]["weak"]["status"])

    def test_classify_basis_exhaustive_over_rationals(self):
        code, report = run("classify-basis", "ex1", "--mode", "exhaustive")
        self.assertEqual(USAGE_ERROR, code)
        self.assertIsNone(report)

    def test_decompose(self):
        code, report = run("decompose", "zero")
        self.assertEqual(COMPLETED, code)
        self.assertEqual([["z1"], ["z2"]], [b["indices"] for b in report["results"]["blocks"]])

    def test_decompose_dot(self):
        code, _ = run("decompose", "sl2-Q", "--dot", str(DOT))
        self.assertEqual(COMPLETED, code)
        self.assertTrue(DOT.read_text(encoding="utf-8").startswith("graph connection_levels {"))
        DOT.unlink()

    def test_check_semisimple(self):
        code, report = run("check-semisimple", "ex1", "--reduce", "2", "--all-bases")
        self.assertEqual(REFUTED, code)
        self.assertEqual("NotSemisimple", report["results"]["verdict"])
        self.assertEqual("no semi-division basis", report["results"]["reason"])
        code, report = run("check-semisimple", "d2", "--reduce", "2")
        self.assertEqual(COMPLETED, code)
        self.assertEqual("Semisimple", report["results"]["verdict"])
        code, _ = run("check-semisimple", "ex1")
        self.assertEqual(INCONCLUSIVE, code)

    def test_check_semisimple_all_bases_over_rationals(self):
        self.assertEqual(USAGE_ERROR, run("check-semisimple", "ex1", "--all-bases")[0])

    def test_check_simple(self):
        code, report = run("check-simple", "sl2-F5")
        self.assertEqual(COMPLETED, code)
        self.assertEqual("Simple", report["results"]["verdict"])
        self.assertEqual(REFUTED, run("check-simple", "zero")[0])

    def test_oracle(self):
        code, report = run("oracle", "ex1", "--reduce", "2")
        self.assertEqual(COMPLETED, code)
        self.assertEqual(3, report["results"]["count"])
        self.assertEqual(COMPLETED, run("oracle", "d2", "--reduce", "2", "--semisimple")[0])
        self.assertEqual(REFUTED, run("oracle", "ex1", "--reduce", "2", "--simple")[0])
        self.assertEqual(USAGE_ERROR, run("oracle", "ex1")[0])

    def test_fuzz(self):
        code, report = run("fuzz", "--field", "F2", "--dim", "2", "--trials", "3", "--seed", "4", "--workers", "1")
        self.assertEqual(COMPLETED, code)
        self.assertEqual([4, 5, 6], [t["seed"] for t in report["results"]["trials"]])
        self.assertEqual("F_2", report["arguments"]["field"])

    def test_fuzz_over_rationals(self):
        self.assertEqual(USAGE_ERROR, run("fuzz", "--field", "Q", "--dim", "2", "--trials", "1")[0])

    def test_missing_file(self):
        self.assertEqual(USAGE_ERROR, run("ann", "basisdiv/test/test_data/missing.alg.json")[0])

    def test_malformed_file(self):
        self.assertEqual(USAGE_ERROR, run("ann", "basisdiv/test/test_data/bad_syntax.alg.json")[0])

    def test_bad_element(self):
        self.assertEqual(USAGE_ERROR, run("ideal", "ex1", "b7")[0])

    def test_usage_errors(self):
        for argv in (["bogus"], [], ["ann"], ["oracle", "ex1", "--simple", "--semisimple"], ["fuzz", "--field", "F6", "--dim", "2", "--trials", "1"]):
            with self.assertRaises(SystemExit) as cm:
                main(argv)
            self.assertEqual(USAGE_ERROR, cm.exception.code, argv)

    def test_timings(self):
        args = build_parser().parse_args(["ann", "w", "--timings"])
        report = run_command("ann", args).to_dict()
        self.assertIn("total", report["timings"])
        self.assertEqual({"algebra": "w", "reduce": None}, report["arguments"])

    def test_report_stable(self):
        first = run("classify-basis", "sl2-F5")[1]
        second = run("classify-basis", "sl2-F5")[1]
        self.assertEqual(first, second)

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
