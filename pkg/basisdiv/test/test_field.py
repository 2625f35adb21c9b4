#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the scalar fields.
"""

import logging
import unittest

from fractions import Fraction

from numpy.random import default_rng

from basisdiv.field import FieldDescriptor, Residue, is_prime, scalar_parse, scalar_arith, render, canonical, field_of

logger = logging.getLogger(__name__)

Q = FieldDescriptor.rationals()
F2 = FieldDescriptor.prime_field(2)
F3 = FieldDescriptor.prime_field(3)
F5 = FieldDescriptor.prime_field(5)

def random_scalar(rng, field):
    if field.is_finite:
        return field.element(int(rng.integers(field.order)))
    return Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 9)))

class TestFieldDescriptor(unittest.TestCase):

    def test_is_prime(self):
        self.assertEqual([2, 3, 5, 7, 11, 13], [p for p in range(15) if is_prime(p)])
        self.assertFalse(is_prime(True))

    def test_init_non_prime(self):
        with self.assertRaises(ValueError):
            FieldDescriptor.prime_field(4)
        with self.assertRaises(ValueError):
            FieldDescriptor.prime_field(1)

    def test_init_unknown_kind(self):
        with self.assertRaises(ValueError):
            FieldDescriptor("R")

    def test_order(self):
        self.assertEqual(5, F5.order)
        with self.assertRaises(ValueError):
            Q.order

    def test_elements(self):
        self.assertEqual([0, 1, 2, 3, 4], [int(e) for e in F5.elements()])
        self.assertEqual([1, 2, 3, 4], [int(e) for e in F5.nonzero_elements()])

    def test_vectors(self):
        vectors = [tuple(int(c) for c in v) for v in F2.vectors(2)]
        self.assertEqual([(0, 0), (0, 1), (1, 0), (1, 1)], vectors)

    def test_contains(self):
        self.assertTrue(F5.contains(Residue(3, 5)))
        self.assertFalse(F5.contains(Residue(1, 2)))
        self.assertFalse(F5.contains(3))
        self.assertTrue(Q.contains(Fraction(1, 2)))

    def test_equality(self):
        self.assertEqual(F5, FieldDescriptor("Fp", 5))
        self.assertNotEqual(F5, F2)
        self.assertNotEqual(Q, F2)
        self.assertEqual("F_5", str(F5))
        self.assertEqual("Q", str(Q))

    def test_to_dict(self):
        self.assertEqual({"type": "Fp", "p": 5}, F5.to_dict())
        self.assertEqual({"type": "Q"}, Q.to_dict())

class TestScalars(unittest.TestCase):

    def test_parse_rational(self):
        self.assertEqual(Fraction(-2, 3), scalar_parse("-4/6", Q))
        self.assertEqual(Fraction(7), scalar_parse("7", Q))

    def test_parse_prime_field(self):
        self.assertEqual(Residue(3, 5), scalar_parse("-2", F5))
        # 1/2 = 3 in F_5
        self.assertEqual(Residue(3, 5), scalar_parse("1/2", F5))

    def test_parse_errors(self):
        with self.assertRaises(ValueError):
            scalar_parse("1/0", Q)
        with self.assertRaises(ValueError):
            scalar_parse("1.5", Q)
        with self.assertRaises(ValueError):
            scalar_parse("1/5", F5)
        with self.assertRaises(TypeError):
            scalar_parse(3, Q)

    def test_render(self):
        self.assertEqual("-2/3", render(Fraction(-4, 6)))
        self.assertEqual("5", render(Fraction(10, 2)))
        self.assertEqual("4", render(Residue(-1, 5)))
        for text in ("0", "-7/3", "12"):
            self.assertEqual(text, render(scalar_parse(text, Q)))

    def test_canonical(self):
        self.assertEqual(Fraction(1, 2), canonical(Fraction(2, 4)))
        self.assertEqual(Residue(2, 5), canonical(Residue(7, 5)))

    def test_field_of(self):
        self.assertEqual(F5, field_of(Residue(1, 5)))
        self.assertEqual(Q, field_of(Fraction(1)))
        with self.assertRaises(TypeError):
            field_of(1.0)

    def test_arith(self):
        a, b = F5.element(3), F5.element(4)
        self.assertEqual(Residue(2, 5), scalar_arith("add", a, b))
        self.assertEqual(Residue(4, 5), scalar_arith("sub", a, b))
        self.assertEqual(Residue(2, 5), scalar_arith("mul", a, b))
        self.assertEqual(Residue(2, 5), scalar_arith("div", a, b))
        self.assertEqual(Fraction(-1, 6), scalar_arith("sub", Fraction(1, 3), Fraction(1, 2)))

    def test_arith_errors(self):
        with self.assertRaises(ZeroDivisionError):
            scalar_arith("div", F5.one, F5.zero)
        with self.assertRaises(ZeroDivisionError):
            scalar_arith("div", Q.one, Q.zero)
        with self.assertRaises(ValueError):
            scalar_arith("add", F5.one, F2.one)
        with self.assertRaises(ValueError):
            scalar_arith("add", F5.one, Q.one)
        with self.assertRaises(ValueError):
            scalar_arith("pow", F5.one, F5.one)

    def test_residue_mismatch(self):
        with self.assertRaises(ValueError):
            Residue(1, 5) + Residue(1, 2)

    def test_residue_hashing(self):
        self.assertEqual(1, len({Residue(1, 5), Residue(6, 5), Residue(-4, 5)}))
        self.assertEqual(2, len({Residue(1, 5), Residue(1, 2)}))
        self.assertNotEqual(Residue(1, 5), 1)
        self.assertNotIn(Residue(1, 5), {1: "one"})

    def test_inverse(self):
        for e in F5.nonzero_elements():
            self.assertEqual(F5.one, e * e.inverse())
        with self.assertRaises(ZeroDivisionError):
            F5.zero.inverse()

    def test_from_fraction(self):
        self.assertEqual(Residue(1, 2), F2.from_fraction(Fraction(3)))
        with self.assertRaises(ValueError):
            F2.from_fraction(Fraction(1, 2))

class TestFieldAxioms(unittest.TestCase):

    def setUp(self):
        self.rng = default_rng(13)

    def triples(self, field, count=40):
        for _ in range(count):
            yield tuple(random_scalar(self.rng, field) for _ in range(3))

    def test_ring_axioms(self):
        for field in (Q, F2, F3, F5):
            for a, b, c in self.triples(field):
                self.assertEqual((a + b) + c, a + (b + c), field)
                self.assertEqual((a * b) * c, a * (b * c), field)
                self.assertEqual(a + b, b + a, field)
                self.assertEqual(a * b, b * a, field)
                self.assertEqual(a * (b + c), a * b + a * c, field)
                self.assertEqual(a, a + field.zero, field)
                self.assertEqual(a, a * field.one, field)
                self.assertEqual(field.zero, a - a, field)

    def test_inverses(self):
        for field in (Q, F2, F3, F5):
            for a, b, _ in self.triples(field):
                if not b:
                    continue
                self.assertEqual(field.one, scalar_arith("div", b, b), field)
                self.assertEqual(a, scalar_arith("mul", scalar_arith("div", a, b), b), field)

    def test_parse_render_random(self):
        for field in (Q, F2, F3, F5):
            for s, _, _ in self.triples(field):
                self.assertEqual(s, scalar_parse(render(s), field))
                self.assertEqual(s, canonical(canonical(s)))

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
