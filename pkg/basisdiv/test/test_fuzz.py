#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""
Automated tests for checking the differential fuzz runner.
"""

import logging
import os
import unittest

from pathlib import Path
from unittest import mock

from basisdiv.algebra import reduce_mod
from basisdiv.field import FieldDescriptor
from basisdiv.inputs import load_corpus, parse_algebra_file
from basisdiv.models.fuzz import FuzzRunner, FuzzSummary, PROPERTIES, check_instance, minimize_counterexample, run_fuzz
from basisdiv.models.oracle import FuzzConfig, random_algebra

logger = logging.getLogger(__name__)

Q = FieldDescriptor.rationals()
F2 = FieldDescriptor.prime_field(2)
F3 = FieldDescriptor.prime_field(3)

OUT = Path("basisdiv/test/test_data/fuzz_out")

FAKE_RESULT = {"violations": ["theorem"], "annihilator_rank": 0, "semisimple": False, "simple": False}

class TestCheckInstance(unittest.TestCase):

    def test_ex1(self):
        result = check_instance(reduce_mod(load_corpus("ex1"), 2))
        self.assertEqual([], result["violations"])
        self.assertEqual(0, result["annihilator_rank"])
        self.assertFalse(result["semisimple"])
        self.assertFalse(result["simple"])

    def test_d2(self):
        result = check_instance(reduce_mod(load_corpus("d2"), 3))
        self.assertEqual([], result["violations"])
        self.assertTrue(result["semisimple"])
        self.assertFalse(result["simple"])

    def test_zero_algebra(self):
        result = check_instance(reduce_mod(load_corpus("zero"), 2))
        self.assertEqual([], result["violations"])
        self.assertEqual(2, result["annihilator_rank"])

    def test_random_instances(self):
        cfg = FuzzConfig(F3, 2, sparsity=0.4)
        for seed in range(4):
            self.assertEqual([], check_instance(random_algebra(cfg, seed=seed))["violations"], seed)

class TestMinimize(unittest.TestCase):

    def test_drops_everything_without_target(self):
        A = random_algebra(FuzzConfig(F2, 2, sparsity=1))
        self.assertTrue(minimize_counterexample(A, []).is_zero_product())

    def test_keeps_unreachable_target(self):
        A = reduce_mod(load_corpus("ex1"), 2)
        self.assertEqual(A, minimize_counterexample(A, ["theorem"]))

class TestFuzzRunner(unittest.TestCase):

    def test_no_mismatches(self):
        configs = [FuzzConfig(F2, 2, seed=0, trials=8), FuzzConfig(F3, 2, seed=100, trials=4)]
        summary = run_fuzz(configs, workers=2)
        self.assertEqual(12, len(summary.trials))
        self.assertEqual([], summary.mismatches)
        self.assertEqual(0, summary.counts()["mismatches"])

    def test_dimension_three(self):
        summary = run_fuzz([FuzzConfig(F2, 3, sparsity=0.3, seed=5, trials=3)], workers=1)
        self.assertEqual([], summary.mismatches)

    @unittest.skipUnless(os.environ.get("BASISDIV_LONG_TESTS"), "set BASISDIV_LONG_TESTS=1 to run the full differential suite")
    def test_full_scale(self):
        configs = [
            FuzzConfig(F2, 2, seed=0, trials=200),
            FuzzConfig(F2, 3, seed=0, trials=200),
            FuzzConfig(F3, 2, seed=0, trials=100),
        ]
        summary = run_fuzz(configs)
        self.assertEqual(500, len(summary.trials))
        self.assertEqual([], summary.mismatches)

    def test_trial_order(self):
        summary = run_fuzz([FuzzConfig(F2, 1, seed=3, trials=5)], workers=3)
        self.assertEqual([3, 4, 5, 6, 7], [t["seed"] for t in summary.trials])

    def test_reproducible(self):
        cfg = FuzzConfig(F2, 2, seed=9, trials=4)
        self.assertEqual(run_fuzz([cfg], workers=1).to_dict(), run_fuzz([cfg], workers=2).to_dict())

    def test_counts(self):
        summary = FuzzSummary([
            {"field": "F_2", "dim": 1, "sparsity": 0.5, "seed": 1, "violations": [], "annihilator_rank": 0, "semisimple": True, "simple": True},
            {"field": "F_2", "dim": 1, "sparsity": 0.5, "seed": 0, "violations": ["theorem"], "annihilator_rank": 1, "semisimple": False, "simple": False},
        ], 0.5)
        self.assertEqual([0, 1], [t["seed"] for t in summary.trials])
        counts = summary.counts()
        self.assertEqual(1, counts["mismatches"])
        self.assertEqual(1, counts["theorem"])
        self.assertEqual(1, counts["annihilator_zero"])
        self.assertEqual(set(PROPERTIES) | {"trials", "mismatches", "semisimple", "simple", "annihilator_zero"}, set(counts))
        self.assertNotIn("elapsed", summary.to_dict())

    def test_order_by_sparsity(self):
        summary = run_fuzz([FuzzConfig(F2, 1, sparsity=0.9, seed=0, trials=2), FuzzConfig(F2, 1, sparsity=0.1, seed=0, trials=2)], workers=2)
        self.assertEqual([(0.1, 0), (0.1, 1), (0.9, 0), (0.9, 1)], [(t["sparsity"], t["seed"]) for t in summary.trials])
        self.assertEqual(summary.to_dict(), run_fuzz([FuzzConfig(F2, 1, sparsity=0.1, seed=0, trials=2), FuzzConfig(F2, 1, sparsity=0.9, seed=0, trials=2)], workers=1).to_dict())

    def test_rationals_rejected(self):
        with self.assertRaises(ValueError):
            FuzzRunner([FuzzConfig(Q, 2)])

    def test_bad_workers(self):
        with self.assertRaises(ValueError):
            FuzzRunner([FuzzConfig(F2, 2)], workers=0)
        with self.assertRaises(TypeError):
            FuzzRunner([{"dim": 2}])

    def test_default_workers(self):
        self.assertGreaterEqual(FuzzRunner([FuzzConfig(F2, 2)]).workers, 1)

    def test_counterexample_file(self):
        cfg = FuzzConfig(F2, 2, sparsity=0.8)
        runner = FuzzRunner([cfg], workers=1, out_dir=str(OUT), minimize=False)
        OUT.mkdir(parents=True, exist_ok=True)
        with mock.patch("basisdiv.models.fuzz.check_instance", return_value=dict(FAKE_RESULT)):
            trial = runner._do_trial(cfg, 7)
        p = OUT / "counterexample-2-2-7.alg.json"
        self.assertEqual(str(p), trial["file"])
        self.assertTrue(p.exists())
        self.assertEqual(random_algebra(cfg, seed=7), parse_algebra_file(str(p)))
        p.unlink()
        OUT.rmdir()

    def test_counterexample_minimized(self):
        cfg = FuzzConfig(F2, 2, sparsity=1)
        OUT.mkdir(parents=True, exist_ok=True)
        with mock.patch("basisdiv.models.fuzz.check_instance", return_value=dict(FAKE_RESULT)):
            summary = run_fuzz([cfg], workers=1, out_dir=str(OUT))
        self.assertEqual(1, len(summary.mismatches))
        p = Path(summary.trials[0]["file"])
        self.assertTrue(parse_algebra_file(str(p)).is_zero_product())
        p.unlink()
        OUT.rmdir()

    def test_counterexample_kept_in_trial(self):
        cfg = FuzzConfig(F2, 2, sparsity=1)
        with mock.patch("basisdiv.models.fuzz.check_instance", return_value=dict(FAKE_RESULT)):
            summary = run_fuzz([cfg], workers=1)
        trial = summary.mismatches[0]
        self.assertNotIn("file", trial)
        self.assertEqual(["e1", "e2"], trial["counterexample"]["basis"])
        self.assertEqual([], trial["counterexample"]["products"])
        self.assertEqual({"type": "Fp", "p": 2}, trial["counterexample"]["field"])

    def test_counterexample_directory_created(self):
        cfg = FuzzConfig(F2, 1, sparsity=1)
        nested = OUT / "nested"
        with mock.patch("basisdiv.models.fuzz.check_instance", return_value=dict(FAKE_RESULT)):
            trial = FuzzRunner([cfg], workers=1, out_dir=str(nested))._do_trial(cfg, 0)
        p = Path(trial["file"])
        self.assertEqual(nested, p.parent)
        self.assertTrue(p.exists())
        p.unlink()
        nested.rmdir()
        OUT.rmdir()

    def test_trial_error_is_reported(self):
        cfg = FuzzConfig(F2, 1, trials=2)
        with mock.patch("basisdiv.models.fuzz.check_instance", side_effect=RuntimeError("broken")):
            summary = run_fuzz([cfg], workers=1)
        self.assertEqual([["error"], ["error"]], [t["violations"] for t in summary.trials])

if __name__ == '__main__':
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=logging.DEBUG)
    unittest.main()
