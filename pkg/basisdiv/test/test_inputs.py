#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the algebra file format.
"""

import logging
import unittest

from fractions import Fraction
from pathlib import Path

from basisdiv.inputs import (
    CORPUS, corpus_names, dump_algebra, load_corpus, parse_algebra_file, parse_algebra_text,
    parse_element, presentation_to_dict, write_algebra_file,
)

logger = logging.getLogger(__name__)

TEST_DATA = Path("basisdiv/test/test_data")

class TestParse(unittest.TestCase):

    def test_corpus(self):
        self.assertEqual(["d2", "ex1", "m2-F2", "sl2-F5", "sl2-Q", "w", "zero"], corpus_names())
        for name in corpus_names():
            A = load_corpus(name)
            self.assertEqual(A, parse_algebra_file(str(CORPUS / f"{name}.alg.json")))

    def test_ex1(self):
        A = load_corpus("ex1")
        self.assertEqual(("b1", "b2"), A.labels)
        self.assertEqual({(0, 0): {0: Fraction(1)}, (1, 1): {0: Fraction(1), 1: Fraction(1)}}, A.products)

    def test_sl2_f5(self):
        A = load_corpus("sl2-F5")
        f, e, h = A.index("f"), A.index("e"), A.index("h")
        # f e = -h = 4 h
        self.assertEqual(4, int(A.structure_constant(f, e, h)))

    def test_unknown_corpus_entry(self):
        with self.assertRaises(ValueError):
            load_corpus("sl3")

    def test_syntax_error_position(self):
        p = TEST_DATA / "bad_syntax.alg.json"
        with self.assertRaises(ValueError) as cm:
            parse_algebra_file(str(p))
        self.assertTrue(str(cm.exception).startswith(f"{p}:4:3:"))

    def test_duplicate_label(self):
        with self.assertRaises(ValueError) as cm:
            parse_algebra_file(str(TEST_DATA / "duplicate_label.alg.json"))
        self.assertIn("duplicate label a", str(cm.exception))

    def test_zero_denominator(self):
        with self.assertRaises(ValueError) as cm:
            parse_algebra_file(str(TEST_DATA / "zero_denominator.alg.json"))
        self.assertIn("products[0].result.a", str(cm.exception))

    def test_missing_file(self):
        with self.assertRaises(OSError):
            parse_algebra_file(str(TEST_DATA / "missing.alg.json"))

    def test_schema_errors(self):
        base = '{"field": %s, "dim": %s, "basis": %s, "products": %s}'
        cases = [
            base % ('{"type": "R"}', 1, '["a"]', "[]"),
            base % ('{"type": "Fp", "p": 6}', 1, '["a"]', "[]"),
            base % ('{"type": "Q"}', 0, "[]", "[]"),
            base % ('{"type": "Q"}', 2, '["a"]', "[]"),
            base % ('{"type": "Q"}', 1, '["a"]', '[{"left": "a", "right": "b", "result": {}}]'),
            base % ('{"type": "Q"}', 1, '["a"]', '[{"left": "a", "right": "a", "result": {"a": "1.5"}}]'),
            base % ('{"type": "Q"}', 1, '["a"]', '[{"left": "a", "right": "a", "result": {}}, {"left": "a", "right": "a", "result": {}}]'),
            '{"field": {"type": "Q"}, "dim": 1, "basis": ["a"]}',
            "[]",
        ]
        for text in cases:
            with self.assertRaises(ValueError, msg=text):
                parse_algebra_text(text)

    def test_zero_coefficients_dropped(self):
        A = parse_algebra_text('{"field": {"type": "Fp", "p": 3}, "dim": 1, "basis": ["a"], '
                               '"products": [{"left": "a", "right": "a", "result": {"a": "3"}}]}')
        self.assertTrue(A.is_zero_product())

class TestWrite(unittest.TestCase):

    def test_write_read(self):
        p = TEST_DATA / "test_sl2.alg.json"
        A = load_corpus("sl2-F5")
        write_algebra_file(A, str(p))
        self.assertTrue(p.exists())
        self.assertEqual(A, parse_algebra_file(str(p)))
        p.unlink()

    def test_dump_stable(self):
        A = load_corpus("sl2-Q")
        self.assertEqual(dump_algebra(A), dump_algebra(parse_algebra_text(dump_algebra(A))))

    def test_presentation_to_dict(self):
        out = presentation_to_dict(load_corpus("ex1"))
        self.assertEqual({"type": "Q"}, out["field"])
        self.assertEqual({"left": "b2", "right": "b2", "result": {"b1": "1", "b2": "1"}}, out["products"][1])

class TestParseElement(unittest.TestCase):

    def test_label(self):
        A = load_corpus("ex1")
        self.assertEqual(A.vector([0, 1]), parse_element("b2", A))

    def test_pairs(self):
        A = load_corpus("ex1")
        self.assertEqual(A.vector([1, Fraction(-1, 2)]), parse_element("b1=1, b2=-1/2", A))
        self.assertEqual(A.vector([2, 0]), parse_element("b1,b1", A))

    def test_prime_field(self):
        A = load_corpus("sl2-F5")
        self.assertEqual(A.vector([4, 0, 0]), parse_element("e=-1", A))

    def test_errors(self):
        A = load_corpus("ex1")
        for text in ("", "b3", "b1=x", "b1=1/0"):
            with self.assertRaises((ValueError, ZeroDivisionError), msg=text):
                parse_element(text, A)

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
