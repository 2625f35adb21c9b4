#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Differential testing of the basis-condition pipelines against the brute-force oracle.

Every trial draws a random presentation and checks, with exact arithmetic:

- ``theorem``: Ann(A) = 0 and a semi-division basis exists iff A is semisimple,
- ``corollary``: Ann(A) = 0 and an i-division basis exists iff A is simple,
- ``simple_bases``: every basis of a simple algebra is an i-division basis,
- ``decomposition``: blocks are ideals with zero cross products adding up to A,
- ``blocks_simple``: Ann(A) = 0 and a semi-division presentation basis give simple blocks,
- ``level1_in_ideals``: for a weak-division basis, an ideal containing e_i contains A_[e_i],
- ``forward_construction``: simple ideals of a semisimple A give a semi-division basis,
- ``hierarchy``: i-division implies semi-division implies weak-division,
- ``ideal_lattice``: sums and intersections of ideals are ideals,
- ``semisimple_annihilator``: semisimple algebras have zero annihilator,
- ``simple_semisimple``: simple algebras are semisimple.

Trials run on worker threads fed through a job queue. Violating presentations are shrunk by
dropping structure constants while the violation persists and can be written out as algebra
files.

.. sourcecode:: pycon

        >>> from basisdiv.field import FieldDescriptor
        >>> from basisdiv.models.oracle import FuzzConfig
        >>> from basisdiv.models.fuzz import run_fuzz
        >>> summary = run_fuzz([FuzzConfig(FieldDescriptor.prime_field(2), 2, seed=0, trials=20)])
        >>> summary.mismatches
        []

"""

from basisdiv.algebra import (
    AlgebraPresentation, Subspace, annihilator, change_of_basis, intersect, is_ideal, restrict,
    subspace_contains, subspace_sum,
)
from basisdiv.inputs import presentation_to_dict, write_algebra_file
from basisdiv.models.decomposition import connection_levels, decompose, semi_division_basis_from_ideals
from basisdiv.models.idivision import check_i_division
from basisdiv.models.oracle import (
    FuzzConfig, all_ideals, enumerate_basis_representatives, exists_semi_division_basis,
    oracle_is_simple, random_algebra, semisimple_family,
)
from basisdiv.models.semi import check_semi_division
from basisdiv.models.weak import check_weak_division

from pathlib import Path

from psutil import cpu_count

from queue import Queue
from time import time

from typing import Dict, List, Optional, Sequence

import logging
import threading

logger = logging.getLogger(__name__)

PROPERTIES = (
    "theorem", "corollary", "simple_bases", "decomposition", "blocks_simple", "level1_in_ideals",
    "forward_construction", "hierarchy", "ideal_lattice", "semisimple_annihilator", "simple_semisimple",
)

def check_instance(A:AlgebraPresentation) -> Dict[str, object]:
    """ Runs every property on one presentation over a prime field.

    Returns
    -------
    dict
        "violations": sorted property names that failed, plus the oracle facts
        "annihilator_rank", "semisimple" and "simple".

    """
    violations = set()
    ann = annihilator(A)
    ann_zero = ann.is_zero()

    ideals = all_ideals(A)
    family = semisimple_family(A)
    semisimple = family is not None
    simple = oracle_is_simple(A)

    has_semi, _ = exists_semi_division_basis(A, predicate="semi")
    has_i, _ = exists_semi_division_basis(A, predicate="i")
    if (ann_zero and has_semi) != semisimple:
        violations.add("theorem")
    if (ann_zero and has_i) != simple:
        violations.add("corollary")
    if simple:
        for m in enumerate_basis_representatives(A):
            if not check_i_division(change_of_basis(A, m)).holds:
                violations.add("simple_bases")
                break
    if semisimple and not ann_zero:
        violations.add("semisimple_annihilator")
    if simple and not semisimple:
        violations.add("simple_semisimple")

    try:
        report = decompose(A)
    except RuntimeError as e:
        logger.debug(f"decomposition of {A} failed: {e}")
        violations.add("decomposition")
        report = None

    weak = check_weak_division(A)
    semi = check_semi_division(A)
    i_div = check_i_division(A)
    if (i_div.holds and not semi.holds) or (semi.holds and not weak.holds):
        violations.add("hierarchy")

    if report is not None and ann_zero and semi.holds:
        if not all(oracle_is_simple(restrict(A, block)) for block in report.blocks):
            violations.add("blocks_simple")

    if weak.holds:
        levels = connection_levels(A)
        for I in ideals:
            for i in range(A.dim):
                if subspace_contains(I, A.basis_vector(i)):
                    if not Subspace.coordinate(A.dim, levels.class_of(i), A.field) <= I:
                        violations.add("level1_in_ideals")

    if semisimple:
        try:
            _, B = semi_division_basis_from_ideals(A, family)
            if not check_semi_division(B).holds:
                violations.add("forward_construction")
        except ValueError as e:
            logger.debug(f"forward construction on {A} failed: {e}")
            violations.add("forward_construction")

    members = set(ideals)
    for a, I in enumerate(ideals):
        for J in ideals[a + 1:]:
            for S in (subspace_sum(I, J), intersect(I, J)):
                if S not in members or not is_ideal(A, S):
                    violations.add("ideal_lattice")

    return {
        "violations": sorted(violations),
        "annihilator_rank": ann.rank,
        "semisimple": semisimple,
        "simple": simple,
    }

def minimize_counterexample(A:AlgebraPresentation, violations:Sequence[str]) -> AlgebraPresentation:
    """ Greedily drops structure constants while every given violation persists """
    target = set(violations)
    current = A
    changed = True
    while changed:
        changed = False
        for i, j, k, _ in current.entries():
            products = {pair: dict(entry) for pair, entry in current.products.items()}
            del products[(i, j)][k]
            candidate = AlgebraPresentation(current.field, current.labels, products)
            if target <= set(check_instance(candidate)["violations"]):
                current = candidate
                changed = True
                break
    logger.debug(f"minimized counterexample from {len(A.entries())} to {len(current.entries())} structure constants")
    return current

class FuzzSummary(object):

    def __init__(self, trials:List[dict], elapsed:float):
        self.trials = sorted(trials, key=lambda t: (t["field"], t["dim"], t["sparsity"], t["seed"]))
        self.elapsed = elapsed

    @property
    def mismatches(self) -> List[dict]:
        return [t for t in self.trials if t["violations"]]

    def counts(self) -> Dict[str, int]:
        out = {"trials": len(self.trials), "mismatches": len(self.mismatches)}
        out["semisimple"] = sum(1 for t in self.trials if t["semisimple"])
        out["simple"] = sum(1 for t in self.trials if t["simple"])
        out["annihilator_zero"] = sum(1 for t in self.trials if t["annihilator_rank"] == 0)
        for name in PROPERTIES:
            out[name] = sum(1 for t in self.trials if name in t["violations"])
        return out

    def __str__(self) -> str:
        return f"{len(self.trials)} trials with {len(self.mismatches)} mismatches"

    def to_dict(self) -> dict:
        return {"counts": self.counts(), "trials": self.trials}

class FuzzRunner(object):

    def __init__(self, configs:Sequence[FuzzConfig], workers:int=None, out_dir:str=None, minimize:bool=True):
        """ Runs the differential properties over every trial of the given configurations.

        Parameters
        ----------
        configs : sequence of :class:`~basisdiv.models.oracle.FuzzConfig`
            Configurations over prime fields.
        workers : int, optional
            Number of worker threads. Defaults to the number of logical cores.
        out_dir : str, optional
            Directory receiving one algebra file per (minimized) counterexample.
        minimize : bool, optional
            Shrink counterexamples before reporting them.

        """
        configs = list(configs)
        for cfg in configs:
            if not isinstance(cfg, FuzzConfig):
                raise TypeError(f"expected a FuzzConfig. Got {type(cfg)}")
            if not cfg.field.is_finite:
                raise ValueError(f"fuzzing against the oracle needs a prime field, got {cfg.field}")
        if workers is None:
            workers = cpu_count() or 1
        if not isinstance(workers, int) or workers < 1:
            raise ValueError(f"workers must be a positive integer. Got {workers!r}")
        self.configs = configs
        self.workers = workers
        self.out_dir = out_dir
        self.minimize = minimize

    def __str__(self) -> str:
        return f"{self.__class__.__name__} with {len(self.configs)} configs and {self.workers} workers"

    def _do_trial(self, cfg:FuzzConfig, seed:int) -> dict:
        A = random_algebra(cfg, seed=seed)
        result = check_instance(A)
        trial = {
            "field": str(cfg.field),
            "dim": cfg.dim,
            "sparsity": cfg.sparsity,
            "seed": seed,
        }
        trial.update(result)
        if result["violations"]:
            logger.warning(f"trial with seed {seed} over {cfg.field} violates {', '.join(result['violations'])}")
            if self.minimize:
                A = minimize_counterexample(A, result["violations"])
            trial["counterexample"] = presentation_to_dict(A)
            if self.out_dir is not None:
                Path(self.out_dir).mkdir(parents=True, exist_ok=True)
                path = Path(self.out_dir) / f"counterexample-{cfg.field.order}-{cfg.dim}-{seed}.alg.json"
                write_algebra_file(A, str(path))
                trial["file"] = str(path)
        return trial

    def _worker_loop(self, job_queue:Queue, progress_queue:Queue):
        jobs_processed = 0
        while True:
            job = job_queue.get()
            if job is None:
                progress_queue.put(None)
                break
            cfg, seed = job
            try:
                trial = self._do_trial(cfg, seed)
            except Exception as e:
                logger.error(f"trial with seed {seed} over {cfg.field} raised {e!r}")
                trial = {
                    "field": str(cfg.field), "dim": cfg.dim, "sparsity": cfg.sparsity, "seed": seed,
                    "violations": ["error"], "annihilator_rank": None, "semisimple": False, "simple": False,
                }
            progress_queue.put(trial)
            jobs_processed += 1
        logger.debug(f"worker exiting, processed {jobs_processed} trials")

    def _job_producer(self, job_queue:Queue):
        job_no = 0
        for cfg in self.configs:
            for seed in cfg.seeds():
                job_queue.put((cfg, seed))
                job_no += 1
        for _ in range(self.workers):
            job_queue.put(None)
        logger.debug(f"job loop exiting, total {job_no} trials")

    def _log_progress(self, progress_queue:Queue, total:int, report_delay:int) -> List[dict]:
        trials = []
        unfinished_worker_count = self.workers
        start_time = time()
        while unfinished_worker_count > 0:
            report = progress_queue.get()
            if report is None:
                unfinished_worker_count -= 1
                logger.debug(f"worker thread finished; awaiting finish of {unfinished_worker_count} more threads")
                continue
            trials.append(report)
            if time() - start_time >= report_delay:
                start_time = time()
                logger.info("PROGRESS : finished {:3.2f}% with {} trials, {} mismatches".format(
                    100 * len(trials) / max(total, 1),
                    len(trials), sum(1 for t in trials if t["violations"]),
                ))
        return trials

    def run(self, queue_factor:int=2, report_delay:int=5) -> FuzzSummary:
        """ Runs all trials.

        Parameters
        ----------
        queue_factor : int, optional
            Multiplier for the size of the job queue.
        report_delay : int, optional
            Seconds between two consecutive progress messages in the logger.

        Returns
        -------
        :class:`~basisdiv.models.fuzz.FuzzSummary`
            Trials sorted by field, dimension and seed.

        """
        total = sum(cfg.trials for cfg in self.configs)
        logger.info(f"running {total} trials on {self.workers} workers")
        if self.out_dir is not None:
            Path(self.out_dir).mkdir(parents=True, exist_ok=True)
        start = time()

        job_queue = Queue(maxsize=queue_factor * self.workers)
        progress_queue = Queue(maxsize=(queue_factor + 1) * self.workers)
        threads = [
            threading.Thread(target=self._worker_loop, args=(job_queue, progress_queue))
            for _ in range(self.workers)
        ]
        threads.append(threading.Thread(target=self._job_producer, args=(job_queue,)))
        for thread in threads:
            thread.daemon = True
            thread.start()

        trials = self._log_progress(progress_queue, total, report_delay)
        summary = FuzzSummary(trials, time() - start)
        logger.info(f"finished {summary} took {summary.elapsed:.0f}s")
        return summary

def run_fuzz(configs:Sequence[FuzzConfig], workers:int=None, out_dir:Optional[str]=None, minimize:bool=True, report_delay:int=5) -> FuzzSummary:
    """ Convenience wrapper around :class:`FuzzRunner` """
    return FuzzRunner(configs, workers=workers, out_dir=out_dir, minimize=minimize).run(report_delay=report_delay)
