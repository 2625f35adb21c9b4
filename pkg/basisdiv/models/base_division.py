#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Base class containing the common machinery of the division-basis checks.

A basis condition of the division family has the shape: for a basis element e_i and an element
x ranging over some subspace (the span M_{e_i} for weak-division, all of A for i-division), any
nonzero product c = e_i x or c = x e_i forces e_i and x into the ideal generated by c.

Attributes
----------
profile : :class:`~basisdiv.models.profile.BasisProfile`
    Per-basis sets S, M, P and PP of the presentation.

mode : str
    "exhaustive" enumerates every x up to scalar multiples (prime fields only). "refute" searches
    primitive integer-coordinate vectors with entries bounded by `bound` and can only ever
    report "Fails" or "Unknown".

See Also
--------
:class:`~basisdiv.models.weak.WeakDivision`.
    Weak-division basis check.
:class:`~basisdiv.models.semi.SemiDivision`.
    Semi-division basis check.
:class:`~basisdiv.models.idivision.IDivision`.
    i-division basis check.

"""

from basisdiv.algebra import AlgebraPresentation, Subspace, Vector, ideal_closure, product, subspace_contains
from basisdiv.models.profile import BasisProfile, basis_profile

from itertools import product as cartesian

from math import gcd
from time import time

from typing import Iterator, List, Optional, Tuple

import logging

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
REFUTE = "refute"
DEFAULT_BOUND = 2

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN = "Unknown"

class Witness(object):

    def __init__(self, clause:str, index:int, element:Vector, partner:Vector, left:Vector, right:Vector, c:Vector, missing:List[Tuple[str, Vector]]):
        """ A violated instance of a division condition: c = left * right is nonzero, but
        some required member does not lie in the ideal generated by c.

        Parameters
        ----------
        clause : str
            "weak", "i-division" or "semi".
        index : int
            Position i of the basis element whose condition fails.
        element : :class:`~basisdiv.algebra.Vector`
            The offending element (x, or b for the semi-division clause).
        partner : :class:`~basisdiv.algebra.Vector`
            The basis element multiplied with it (e_i, or e_j for the semi-division clause).
        left, right : :class:`~basisdiv.algebra.Vector`
            Factors in product order, c = left * right.
        c : :class:`~basisdiv.algebra.Vector`
            The nonzero product.
        missing : list of (str, Vector)
            Named members that are not in the ideal generated by c.

        """
        self.clause = clause
        self.index = index
        self.element = element
        self.partner = partner
        self.left = left
        self.right = right
        self.c = c
        self.missing = list(missing)

    def replay(self, A:AlgebraPresentation) -> bool:
        """ Recomputes product, ideal closure and membership; True iff the violation is confirmed """
        c = product(A, self.left, self.right)
        if c.is_zero() or c != self.c:
            return False
        ideal = ideal_closure(A, [c])
        return bool(self.missing) and all(not subspace_contains(ideal, v) for _, v in self.missing)

    def __str__(self) -> str:
        names = ", ".join(name for name, _ in self.missing)
        return f"{self.clause} violation at basis index {self.index}: {names} not in I(c)"

    def to_dict(self, A:AlgebraPresentation) -> dict:
        labels = A.labels
        ideal = ideal_closure(A, [self.c])
        return {
            "clause": self.clause,
            "basis_element": labels[self.index],
            "element": self.element.to_dict(labels),
            "partner": self.partner.to_dict(labels),
            "left": self.left.to_dict(labels),
            "right": self.right.to_dict(labels),
            "c": self.c.to_dict(labels),
            "missing": [name for name, _ in self.missing],
            "ideal_of_c": ideal.to_list(labels),
            "replayed": self.replay(A),
        }

class DivisionVerdict(object):

    def __init__(self, clause:str, status:str, mode:str, bound:Optional[int]=None, witness:Optional[Witness]=None):
        if status == FAILS and witness is None:
            raise RuntimeError("a failing verdict needs a witness")
        if status == UNKNOWN and mode != REFUTE:
            raise RuntimeError("only the refutation mode can be undecided")
        self.clause = clause
        self.status = status
        self.mode = mode
        self.bound = bound
        self.witness = witness

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def __str__(self) -> str:
        return f"{self.clause}: {self.status} ({self.mode})"

    def to_dict(self, A:AlgebraPresentation) -> dict:
        out = {"clause": self.clause, "status": self.status, "mode": self.mode}
        if self.mode == REFUTE:
            out["bound"] = self.bound
        if self.witness is not None:
            out["witness"] = self.witness.to_dict(A)
        return out

class BaseDivisionCheck(object):

    clause = None
    scan_clause = None

    def __init__(self, algebra:AlgebraPresentation, profile:BasisProfile=None, mode:str=EXHAUSTIVE, bound:int=DEFAULT_BOUND):
        """ Base class for all division-basis checks. Provides the candidate enumeration, the
        cached ideal closures and the verdict aggregation.

        Parameters
        ----------
        algebra : :class:`~basisdiv.algebra.AlgebraPresentation`
            The algebra, checked relative to its presentation basis.
        profile : :class:`~basisdiv.models.profile.BasisProfile`, optional
            Precomputed profile of `algebra`. Computed when omitted.
        mode : {"exhaustive", "refute"}, optional
            Exhaustive decision (prime fields only) or bounded refutation search (any field).
        bound : int, optional
            Coordinate bound of the refutation search.

        """
        self._check_and_include_algebra(algebra)
        self._check_mode_settings(mode, bound)
        self.profile = profile if profile is not None else basis_profile(self.algebra)
        if len(self.profile) != self.algebra.dim:
            raise ValueError(f"profile of {len(self.profile)} elements does not match dimension {self.algebra.dim}")
        self._closures = {}

    def __str__(self) -> str:
        return f"{self.__class__.__name__} of {self.algebra} in {self.mode} mode"

    def _check_and_include_algebra(self, algebra:AlgebraPresentation):
        """ Check if the supplied object is a presentation """
        if not isinstance(algebra, AlgebraPresentation):
            raise TypeError(f"Algebra must be an AlgebraPresentation. Received {algebra!r}")
        self.algebra = algebra

    def _check_mode_settings(self, mode:str, bound:int):
        """ Check if the mode is available for the field of the algebra """
        if mode == EXHAUSTIVE:
            if not self.algebra.field.is_finite:
                raise ValueError(f"exhaustive mode needs a prime field, got {self.algebra.field}; use the refute mode")
        elif mode == REFUTE:
            if not isinstance(bound, int) or bound < 1:
                raise ValueError(f"bound must be a positive integer. Got {bound!r}")
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.bound = int(bound) if mode == REFUTE else None

    def _candidate_space(self, i:int) -> Subspace:
        """ Subspace x ranges over for basis index i """
        raise NotImplementedError()

    def _extra_conditions(self) -> Optional[Witness]:
        """ Conditions checked after the candidate scan, exactly in every field """
        return None

    def ideal(self, c:Vector) -> Subspace:
        """ I(c), cached up to scalar multiples since I(c) = I(λc) """
        support = c.support()
        key = c.scale(c.field.one / c[support[0]]).key() if support else c.key()
        if key not in self._closures:
            self._closures[key] = ideal_closure(self.algebra, [c])
        return self._closures[key]

    def _candidates(self, space:Subspace) -> Iterator[Vector]:
        """ Nonzero elements of `space` up to scalar multiples, in lexicographic coefficient order """
        field = self.algebra.field
        if space.is_zero():
            return
        if self.mode == EXHAUSTIVE:
            coefficient_tuples = field.vectors(space.rank)
        else:
            span = range(-self.bound, self.bound + 1)
            coefficient_tuples = cartesian(span, repeat=space.rank)
        for coeffs in coefficient_tuples:
            lead = next((a for a in coeffs if a), None)
            if lead is None:
                continue
            if self.mode == EXHAUSTIVE:
                if lead != field.one:
                    continue
            else:
                if lead < 0:
                    continue
                g = 0
                for a in coeffs:
                    g = gcd(g, abs(a))
                if g != 1:
                    continue
                coeffs = [field.element(a) for a in coeffs]
            x = self.algebra.zero_vector()
            for a, row in zip(coeffs, space.rows):
                if a:
                    x = x + row.scale(a)
            if not x.is_zero():
                yield x

    def check_pair(self, clause:str, index:int, element:Vector, partner:Vector, members:List[Tuple[str, Vector]], element_first:bool=False) -> Optional[Witness]:
        """ Tests both product orders of `partner` and `element`; returns the first violation """
        orders = ((partner, element), (element, partner))
        for left, right in (orders[::-1] if element_first else orders):
            c = product(self.algebra, left, right)
            if c.is_zero():
                continue
            ideal = self.ideal(c)
            missing = [(name, v) for name, v in members if not subspace_contains(ideal, v)]
            if missing:
                return Witness(clause, index, element, partner, left, right, c, missing)
        return None

    def _scan_candidates(self) -> Optional[Witness]:
        for i in range(self.algebra.dim):
            e = self.algebra.basis_vector(i)
            for x in self._candidates(self._candidate_space(i)):
                witness = self.check_pair(self.scan_clause, i, x, e, [("e_i", e), ("x", x)])
                if witness is not None:
                    return witness
        return None

    def check(self) -> DivisionVerdict:
        """ Runs the check and aggregates a deterministic verdict (ascending i, lexicographic x)

        Returns
        -------
        :class:`~basisdiv.models.base_division.DivisionVerdict`
            "Holds" or "Fails" in exhaustive mode, "Fails" or "Unknown" in refute mode.

        """
        start = time()
        witness = self._scan_candidates()
        if witness is None:
            witness = self._extra_conditions()
        if witness is not None:
            status = FAILS
        else:
            status = HOLDS if self.mode == EXHAUSTIVE else UNKNOWN
        logger.debug(
            f"{self.clause} division check on {self.algebra} in {self.mode} mode: {status} "
            f"after {len(self._closures)} ideal closures in {time() - start:.3f}s"
        )
        return DivisionVerdict(self.clause, status, self.mode, self.bound, witness)
