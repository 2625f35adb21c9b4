#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the basis profile.
"""

import logging
import unittest

from basisdiv.algebra import Subspace
from basisdiv.inputs import load_corpus
from basisdiv.models.profile import basis_profile

logger = logging.getLogger(__name__)

class TestBasisProfile(unittest.TestCase):

    def test_ex1(self):
        A = load_corpus("ex1")
        profile = basis_profile(A)
        self.assertEqual(2, len(profile))
        self.assertEqual((frozenset({0}), frozenset({1})), profile.s_sets)
        self.assertEqual((frozenset({0, 1}), frozenset({1})), profile.p_sets)
        self.assertEqual([A.vector([1, 0]), A.vector([1, 1])], list(profile.pp_products[0]))
        self.assertEqual([A.vector([1, 1])], list(profile.pp_products[1]))
        self.assertEqual(Subspace.coordinate(2, [0], A.field), profile.m_spaces[0])

    def test_d2(self):
        A = load_corpus("d2")
        profile = basis_profile(A)
        self.assertEqual((frozenset({0}), frozenset({1})), profile.s_sets)
        self.assertEqual((frozenset({0}), frozenset({1})), profile.p_sets)
        self.assertEqual([A.vector([1, 0])], list(profile.pp_products[0]))

    def test_zero_algebra(self):
        profile = basis_profile(load_corpus("zero"))
        for i in range(2):
            self.assertEqual(frozenset(), profile.s_sets[i])
            self.assertEqual(frozenset(), profile.p_sets[i])
            self.assertTrue(profile.m_spaces[i].is_zero())
            self.assertEqual((), profile.pp_products[i])

    def test_s_sets_symmetric(self):
        A = load_corpus("w")
        profile = basis_profile(A)
        # only u v is nonzero
        self.assertEqual((frozenset({1}), frozenset({0})), profile.s_sets)
        for i, s in enumerate(profile.s_sets):
            for j in s:
                self.assertIn(i, profile.s_sets[j])

    def test_to_dict(self):
        A = load_corpus("ex1")
        out = basis_profile(A).to_dict(A.labels)
        self.assertEqual(["b1"], out["b1"]["S"])
        self.assertEqual(["b1", "b2"], out["b1"]["P"])
        self.assertEqual([{"b1": "1"}, {"b1": "1", "b2": "1"}], out["b1"]["PP"])
        self.assertEqual(1, out["b2"]["M_rank"])

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
