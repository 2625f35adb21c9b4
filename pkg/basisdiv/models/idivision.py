#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""i-division basis check: the weak-division condition with x ranging over all of A."""

from basisdiv.algebra import AlgebraPresentation, Subspace
from basisdiv.models.base_division import BaseDivisionCheck, DivisionVerdict, EXHAUSTIVE, DEFAULT_BOUND

import logging

logger = logging.getLogger(__name__)

class IDivision(BaseDivisionCheck):

    clause = "i-division"
    scan_clause = "i-division"

    def __init__(self, algebra:AlgebraPresentation, mode:str=EXHAUSTIVE, bound:int=DEFAULT_BOUND):
        super(IDivision, self).__init__(algebra, mode=mode, bound=bound)
        self._whole = Subspace.full(self.algebra.dim, self.algebra.field)

    def _candidate_space(self, i:int) -> Subspace:
        return self._whole

def check_i_division(A:AlgebraPresentation, mode:str=EXHAUSTIVE, bound:int=DEFAULT_BOUND) -> DivisionVerdict:
    """ Decides (exhaustive mode) or tries to refute (refute mode) that the presentation basis
    of `A` is an i-division basis. Same contract as
    :func:`~basisdiv.models.weak.check_weak_division` with the wider quantifier. """
    return IDivision(A, mode=mode, bound=bound).check()
