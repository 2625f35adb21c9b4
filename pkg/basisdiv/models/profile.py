#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Per-basis combinatorial data of a presentation.

For every basis element e_i:

- s_set(i): the e_j with e_i e_j != 0 or e_j e_i != 0,
- m_space(i): the span of s_set(i), the zero subspace when s_set(i) is empty,
- p_set(i): the e_j such that some product e_j e_r or e_s e_j has a nonzero e_i-coordinate,
- pp_products(i): the nonzero products e_j e_k with e_j, e_k in p_set(i), deduplicated.

"""

from basisdiv.algebra import AlgebraPresentation, Subspace, Vector

from typing import FrozenSet, List, Tuple

import logging

logger = logging.getLogger(__name__)

class BasisProfile(object):

    def __init__(self, s_sets:List[FrozenSet[int]], m_spaces:List[Subspace], p_sets:List[FrozenSet[int]], pp_products:List[Tuple[Vector, ...]]):
        self.s_sets = tuple(s_sets)
        self.m_spaces = tuple(m_spaces)
        self.p_sets = tuple(p_sets)
        self.pp_products = tuple(tuple(pp) for pp in pp_products)

    def __len__(self) -> int:
        return len(self.s_sets)

    def __str__(self) -> str:
        return f"{self.__class__.__name__} of {len(self)} basis elements"

    def to_dict(self, labels) -> dict:
        out = {}
        for i, label in enumerate(labels):
            out[label] = {
                "S": [labels[j] for j in sorted(self.s_sets[i])],
                "M_rank": self.m_spaces[i].rank,
                "P": [labels[j] for j in sorted(self.p_sets[i])],
                "PP": [b.to_dict(labels) for b in self.pp_products[i]],
            }
        return out

def basis_profile(A:AlgebraPresentation) -> BasisProfile:
    """ Computes S, M, P and PP for every basis element directly from the structure constants.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra together with its presentation basis.

    Returns
    -------
    :class:`~basisdiv.models.profile.BasisProfile`
        The four families, indexed by basis position.

    """
    n = A.dim
    s_sets = [set() for _ in range(n)]
    p_sets = [set() for _ in range(n)]
    for (i, j), entry in A.products.items():
        s_sets[i].add(j)
        s_sets[j].add(i)
        for k in entry:
            p_sets[k].add(i)
            p_sets[k].add(j)

    m_spaces = [Subspace.coordinate(n, s, A.field) for s in s_sets]

    pp_products = []
    for i in range(n):
        seen, found = set(), []
        members = sorted(p_sets[i])
        for j in members:
            for k in members:
                b = A.basis_product(j, k)
                if b.is_zero() or b.key() in seen:
                    continue
                seen.add(b.key())
                found.append(b)
        pp_products.append(tuple(found))

    logger.debug(f"computed basis profile of {A}")
    return BasisProfile(
        [frozenset(s) for s in s_sets], m_spaces,
        [frozenset(p) for p in p_sets], pp_products,
    )
