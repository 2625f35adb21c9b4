#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Weak-division basis check: for every basis element e_i and every x in M_{e_i} such that
c = e_i x != 0 or c = x e_i != 0, both e_i and x lie in the ideal generated by c.

x = e_i itself is not excluded.

.. sourcecode:: pycon

        >>> from basisdiv.inputs import load_corpus
        >>> from basisdiv.algebra import reduce_mod
        >>> from basisdiv.models.weak import check_weak_division
        >>> check_weak_division(reduce_mod(load_corpus("ex1"), 2)).status
        'Holds'

"""

from basisdiv.algebra import AlgebraPresentation, Subspace
from basisdiv.models.base_division import BaseDivisionCheck, DivisionVerdict, EXHAUSTIVE, DEFAULT_BOUND
from basisdiv.models.profile import BasisProfile

import logging

logger = logging.getLogger(__name__)

class WeakDivision(BaseDivisionCheck):

    clause = "weak"
    scan_clause = "weak"

    def _candidate_space(self, i:int) -> Subspace:
        """ x ranges over M_{e_i} """
        return self.profile.m_spaces[i]

def check_weak_division(A:AlgebraPresentation, profile:BasisProfile=None, mode:str=EXHAUSTIVE, bound:int=DEFAULT_BOUND) -> DivisionVerdict:
    """ Decides (exhaustive mode) or tries to refute (refute mode) that the presentation basis
    of `A` is a weak-division basis.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    profile : :class:`~basisdiv.models.profile.BasisProfile`, optional
        Precomputed profile of `A`.
    mode : {"exhaustive", "refute"}, optional
        Exhaustive mode needs a prime field.
    bound : int, optional
        Coordinate bound of the refutation search.

    Returns
    -------
    :class:`~basisdiv.models.base_division.DivisionVerdict`
        Verdict with a replayable witness when it fails.

    """
    return WeakDivision(A, profile=profile, mode=mode, bound=bound).check()
