#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Semi-division basis check. A semi-division basis is a weak-division basis such that, for
every basis element e_i, every b in P_{e_i}P_{e_i} and every e_j in S_{e_i}, a nonzero product
c = b e_j or c = e_j b forces e_j and b into the ideal generated by c.

The extra clause ranges over finite sets, so it is checked exactly in every field and in both
modes; only the weak-division part depends on the mode.
"""

from basisdiv.algebra import AlgebraPresentation
from basisdiv.models.base_division import DivisionVerdict, Witness, EXHAUSTIVE, DEFAULT_BOUND
from basisdiv.models.profile import BasisProfile
from basisdiv.models.weak import WeakDivision

from typing import Optional

import logging

logger = logging.getLogger(__name__)

class SemiDivision(WeakDivision):

    clause = "semi"

    def _extra_conditions(self) -> Optional[Witness]:
        """ The P_{e_i}P_{e_i} x S_{e_i} clause, ascending i, then b in profile order, then ascending j """
        for i in range(self.algebra.dim):
            for b in self.profile.pp_products[i]:
                for j in sorted(self.profile.s_sets[i]):
                    e = self.algebra.basis_vector(j)
                    witness = self.check_pair("semi", i, b, e, [("e_j", e), ("b", b)], element_first=True)
                    if witness is not None:
                        return witness
        return None

def check_semi_division(A:AlgebraPresentation, profile:BasisProfile=None, mode:str=EXHAUSTIVE, bound:int=DEFAULT_BOUND) -> DivisionVerdict:
    """ Decides (exhaustive mode) or tries to refute (refute mode) that the presentation basis
    of `A` is a semi-division basis.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    profile : :class:`~basisdiv.models.profile.BasisProfile`, optional
        Precomputed profile of `A`.
    mode : {"exhaustive", "refute"}, optional
        Mode of the weak-division part.
    bound : int, optional
        Coordinate bound of the refutation search.

    Returns
    -------
    :class:`~basisdiv.models.base_division.DivisionVerdict`
        "Fails" as soon as either part fails; otherwise the status of the weak-division part.

    """
    return SemiDivision(A, profile=profile, mode=mode, bound=bound).check()
