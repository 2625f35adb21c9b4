#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Three-level connection decomposition of an algebra and the semisimplicity and simplicity
pipelines built on top of it.

Level 1 groups basis indices by a pluggable relation, by default connectivity of the graph with
an edge {i, j} whenever e_i e_j != 0 or e_j e_i != 0. Level 2 merges level-1 classes C, D with
A_C A_D + A_D A_C != 0. Level 3 merges level-2 classes B1, B2 when the product A_{B1} A_{B1}
has a nonzero projection onto A_{B2} or vice versa. Every level is computed as the connected
components of its graph, so the classes are the equivalence closures of the chain relations.

The final classes span coordinate subspaces A = A_1 + ... + A_m with A_k A_l = 0 for k != l.
Each A_k is an ideal for any level-1 partition.

.. sourcecode:: pycon

        >>> from basisdiv.inputs import load_corpus
        >>> from basisdiv.models.decomposition import decompose
        >>> [b.rank for b in decompose(load_corpus("d2")).blocks]
        [1, 1]

Over a prime field with zero annihilator, a presentation basis that is a semi-division basis
yields simple blocks. The semisimplicity verdict uses Ann(A) = 0 as hypothesis throughout.

"""

from basisdiv.algebra import (
    AlgebraPresentation, Subspace, annihilator, change_of_basis, is_ideal, product_of_subspaces,
    projection, restrict, span,
)
from basisdiv.field import render
from basisdiv.linalg import as_matrix
from basisdiv.models.base_division import DivisionVerdict, EXHAUSTIVE, REFUTE, DEFAULT_BOUND
from basisdiv.models.idivision import check_i_division
from basisdiv.models.oracle import exists_semi_division_basis, oracle_is_simple
from basisdiv.models.semi import check_semi_division
from basisdiv.models.utils import connected_components, dot_graph, enumeration_ceilings

from numpy import ndarray

from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import logging

logger = logging.getLogger(__name__)

GIVEN_BASIS = "given"
ALL_BASES = "all"

SEMISIMPLE = "Semisimple"
NOT_SEMISIMPLE = "NotSemisimple"
SIMPLE = "Simple"
NOT_SIMPLE = "NotSimple"
INCONCLUSIVE = "Inconclusive"

Relation = Callable[[AlgebraPresentation], Iterable[Tuple[int, int]]]

def s_graph_edges(A:AlgebraPresentation) -> List[Tuple[int, int]]:
    """ Default level-1 relation: {i, j} whenever e_i e_j != 0 or e_j e_i != 0 """
    return sorted({(min(i, j), max(i, j)) for (i, j) in A.products if i != j})

class ConnectionLevels(object):

    def __init__(self, dim:int, level1, level2, level3, edges1, edges2, edges3):
        """ Three nested partitions together with the edges that produced them.

        Parameters
        ----------
        dim : int
            Number of basis indices.
        level1 : sequence of tuple
            Classes of basis indices.
        level2 : sequence of tuple
            Classes of level-1 class positions.
        level3 : sequence of tuple
            Classes of level-2 class positions.
        edges1, edges2, edges3 : sequence of (int, int)
            Edges between basis indices, level-1 positions and level-2 positions.

        """
        self.dim = dim
        self.level1 = tuple(tuple(c) for c in level1)
        self.level2 = tuple(tuple(c) for c in level2)
        self.level3 = tuple(tuple(c) for c in level3)
        self.edges1 = tuple(edges1)
        self.edges2 = tuple(edges2)
        self.edges3 = tuple(edges3)

    def level1_index_sets(self) -> List[Tuple[int, ...]]:
        return list(self.level1)

    def level2_index_sets(self) -> List[Tuple[int, ...]]:
        return [tuple(sorted(i for c in cls for i in self.level1[c])) for cls in self.level2]

    def level3_index_sets(self) -> List[Tuple[int, ...]]:
        level2 = self.level2_index_sets()
        return [tuple(sorted(i for c in cls for i in level2[c])) for cls in self.level3]

    def class_of(self, i:int) -> Tuple[int, ...]:
        """ The level-1 class containing basis index i """
        for cls in self.level1:
            if i in cls:
                return cls
        raise ValueError(f"index {i} out of range for dimension {self.dim}")

    def is_nested(self) -> bool:
        """ Each level partitions the one below and the last level covers every basis index """
        def partitions(classes, size):
            members = [m for c in classes for m in c]
            return sorted(members) == list(range(size))
        return (partitions(self.level1, self.dim)
                and partitions(self.level2, len(self.level1))
                and partitions(self.level3, len(self.level2)))

    def __str__(self) -> str:
        return (f"{self.__class__.__name__} with {len(self.level1)}, {len(self.level2)} "
                f"and {len(self.level3)} classes")

    def to_dict(self, labels:Sequence[str]) -> dict:
        def named(sets):
            return [[labels[i] for i in s] for s in sets]
        return {
            "level1": named(self.level1_index_sets()),
            "level2": named(self.level2_index_sets()),
            "level3": named(self.level3_index_sets()),
            "edges1": [[labels[a], labels[b]] for a, b in self.edges1],
            "edges2": [list(e) for e in self.edges2],
            "edges3": [list(e) for e in self.edges3],
        }

def _block(A:AlgebraPresentation, indices:Iterable[int]) -> Subspace:
    return Subspace.coordinate(A.dim, indices, A.field)

def connection_levels(A:AlgebraPresentation, relation:Optional[Relation]=None) -> ConnectionLevels:
    """ Computes the three connection levels of the presentation basis.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    relation : callable, optional
        Maps `A` to the level-1 edges between basis indices. Defaults to :func:`s_graph_edges`.

    Returns
    -------
    :class:`~basisdiv.models.decomposition.ConnectionLevels`
        Classes at every level ordered by their least member.

    """
    relation = s_graph_edges if relation is None else relation
    edges1 = sorted({(min(a, b), max(a, b)) for a, b in relation(A) if a != b})
    level1 = connected_components(A.dim, edges1)

    blocks1 = [_block(A, c) for c in level1]
    edges2 = []
    for a in range(len(level1)):
        for b in range(a + 1, len(level1)):
            cross = product_of_subspaces(A, blocks1[a], blocks1[b])
            if cross.is_zero():
                cross = product_of_subspaces(A, blocks1[b], blocks1[a])
            if not cross.is_zero():
                edges2.append((a, b))
    level2 = connected_components(len(level1), edges2)

    sets2 = [tuple(sorted(i for c in cls for i in level1[c])) for cls in level2]
    squares = [product_of_subspaces(A, _block(A, s), _block(A, s)) for s in sets2]

    def projects_onto(square:Subspace, target:Sequence[int]) -> bool:
        return any(not projection(row, target).is_zero() for row in square.rows)

    edges3 = []
    for a in range(len(sets2)):
        for b in range(a + 1, len(sets2)):
            if projects_onto(squares[a], sets2[b]) or projects_onto(squares[b], sets2[a]):
                edges3.append((a, b))
    level3 = connected_components(len(level2), edges3)

    levels = ConnectionLevels(A.dim, level1, level2, level3, edges1, edges2, edges3)
    logger.debug(f"connection levels of {A}: {levels}")
    return levels

def to_dot(levels:ConnectionLevels, labels:Sequence[str]) -> str:
    """ DOT export of the three edge lists, one cluster per level """
    names1 = [",".join(labels[i] for i in s) for s in levels.level1_index_sets()]
    names2 = [",".join(labels[i] for i in s) for s in levels.level2_index_sets()]
    parts = [
        "graph connection_levels {",
        dot_graph("level1", labels, levels.edges1),
        dot_graph("level2", [f"{{{n}}}" for n in names1], levels.edges2),
        dot_graph("level3", [f"{{{n}}}" for n in names2], levels.edges3),
        "}",
    ]
    return "\n".join(parts) + "\n"

class DecompositionReport(object):

    def __init__(self, algebra:AlgebraPresentation, levels:ConnectionLevels, blocks:List[Subspace], block_checks:List[dict], verdict:str=INCONCLUSIVE, reason:str="decomposition only"):
        self.algebra = algebra
        self.levels = levels
        self.blocks = list(blocks)
        self.block_checks = list(block_checks)
        self.verdict = verdict
        self.reason = reason
        self.annihilator_rank = None
        self.basis_verdict = None
        self.witness_basis = None

    def __str__(self) -> str:
        return f"{self.verdict} ({self.reason}), {len(self.blocks)} blocks"

    def to_dict(self) -> dict:
        labels = self.algebra.labels
        out = {
            "verdict": self.verdict,
            "reason": self.reason,
            "levels": self.levels.to_dict(labels),
            "blocks": [
                dict(indices=[labels[i] for i in sorted(b.pivots)], rank=b.rank, **checks)
                for b, checks in zip(self.blocks, self.block_checks)
            ],
        }
        if self.annihilator_rank is not None:
            out["annihilator_rank"] = self.annihilator_rank
        if self.basis_verdict is not None:
            out["basis_verdict"] = self.basis_verdict.to_dict(self.algebra)
        if self.witness_basis is not None:
            out["witness_basis"] = _matrix_to_list(self.witness_basis)
        return out

class SimplicityVerdict(object):

    def __init__(self, verdict:str, reason:str, algebra:AlgebraPresentation, basis_verdict:Optional[DivisionVerdict]=None, witness_basis:Optional[ndarray]=None, annihilator_rank:Optional[int]=None):
        self.verdict = verdict
        self.reason = reason
        self.algebra = algebra
        self.basis_verdict = basis_verdict
        self.witness_basis = witness_basis
        self.annihilator_rank = annihilator_rank
        self.oracle_simple = None

    def __str__(self) -> str:
        return f"{self.verdict} ({self.reason})"

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason}
        if self.annihilator_rank is not None:
            out["annihilator_rank"] = self.annihilator_rank
        if self.basis_verdict is not None:
            out["basis_verdict"] = self.basis_verdict.to_dict(self.algebra)
        if self.witness_basis is not None:
            out["witness_basis"] = _matrix_to_list(self.witness_basis)
        if self.oracle_simple is not None:
            out["oracle_simple"] = self.oracle_simple
        return out

def _matrix_to_list(m:ndarray) -> List[List[str]]:
    return [[render(c) for c in row] for row in m]

def decompose(A:AlgebraPresentation, relation:Optional[Relation]=None) -> DecompositionReport:
    """ Builds the blocks spanned by the final connection classes and verifies that they are
    ideals with vanishing cross products that add up to A.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    relation : callable, optional
        Level-1 relation, see :func:`connection_levels`.

    Returns
    -------
    :class:`~basisdiv.models.decomposition.DecompositionReport`
        Blocks with their checks; the verdict stays "Inconclusive".

    Raises
    ------
    RuntimeError
        If a block is not an ideal, two blocks have a nonzero product or the blocks do not
        form a direct sum equal to A.

    """
    levels = connection_levels(A, relation)
    if not levels.is_nested():
        raise RuntimeError(f"connection levels of {A} are not nested partitions")
    blocks = [_block(A, s) for s in levels.level3_index_sets()]

    checks = []
    for k, block in enumerate(blocks):
        if not is_ideal(A, block):
            raise RuntimeError(f"block {k} of {A} is not an ideal")
        checks.append({"is_ideal": True, "zero_cross_products": True})
    for k, left in enumerate(blocks):
        for l, right in enumerate(blocks):
            if k != l and not product_of_subspaces(A, left, right).is_zero():
                raise RuntimeError(f"blocks {k} and {l} of {A} have a nonzero product")
    if sum(b.rank for b in blocks) != A.dim or not span([r for b in blocks for r in b.rows], A.dim, A.field).is_full():
        raise RuntimeError(f"blocks of {A} do not form a direct sum equal to A")

    logger.info(f"decomposed {A} into {len(blocks)} blocks")
    return DecompositionReport(A, levels, blocks, checks)

def _check_basis_mode(A:AlgebraPresentation, basis_mode:str):
    if basis_mode not in (GIVEN_BASIS, ALL_BASES):
        raise ValueError(f"unknown basis mode {basis_mode!r}")
    if basis_mode == ALL_BASES and not A.field.is_finite:
        raise ValueError(f"enumerating all bases needs a prime field, got {A.field}")

def _given_basis_mode(A:AlgebraPresentation) -> str:
    if A.field.is_finite:
        return EXHAUSTIVE
    logger.warning(f"{A.field} is infinite; the presentation basis can only be refuted")
    return REFUTE

def _oracle_block_checks(report:DecompositionReport):
    """ Adds oracle simplicity of every block when the field and size allow it """
    A = report.algebra
    if not A.field.is_finite:
        return
    ceiling, _ = enumeration_ceilings()
    for block, checks in zip(report.blocks, report.block_checks):
        if A.field.order ** block.rank > ceiling:
            logger.warning(f"block of rank {block.rank} exceeds the enumeration ceiling {ceiling}; simplicity not verified")
            continue
        checks["simple"] = oracle_is_simple(restrict(A, block))

def _oracle_simple_check(verdict:SimplicityVerdict) -> SimplicityVerdict:
    """ Confirms a Simple verdict with the oracle when the field and size allow it """
    A = verdict.algebra
    if not A.field.is_finite:
        return verdict
    ceiling, _ = enumeration_ceilings()
    if A.field.order ** A.dim > ceiling:
        logger.warning(f"{A} exceeds the enumeration ceiling {ceiling}; simplicity not verified")
        return verdict
    verdict.oracle_simple = oracle_is_simple(A)
    if not verdict.oracle_simple:
        raise RuntimeError(f"{A} has zero annihilator and an i-division basis but is not simple")
    return verdict

def check_semisimple_via_theorem(A:AlgebraPresentation, basis_mode:str=GIVEN_BASIS, bound:int=DEFAULT_BOUND) -> DecompositionReport:
    """ Semisimplicity through zero annihilator and semi-division bases.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    basis_mode : {"given", "all"}, optional
        "given" checks the presentation basis only and answers "Inconclusive" when it is not a
        semi-division basis. "all" searches every basis up to order and scaling (prime fields).
    bound : int, optional
        Coordinate bound of the refutation search over Q.

    Returns
    -------
    :class:`~basisdiv.models.decomposition.DecompositionReport`
        The decomposition of the basis the verdict refers to.

    """
    _check_basis_mode(A, basis_mode)
    ann = annihilator(A)
    if not ann.is_zero():
        report = decompose(A)
        report.verdict, report.reason = NOT_SEMISIMPLE, "nonzero annihilator"
        report.annihilator_rank = ann.rank
        return report

    if basis_mode == GIVEN_BASIS:
        verdict = check_semi_division(A, mode=_given_basis_mode(A), bound=bound)
        report = decompose(A)
        report.annihilator_rank = 0
        report.basis_verdict = verdict
        if verdict.holds:
            _oracle_block_checks(report)
            if any(c.get("simple") is False for c in report.block_checks):
                raise RuntimeError(f"semi-division basis of {A} with zero annihilator has a non-simple block")
            report.verdict, report.reason = SEMISIMPLE, "zero annihilator and semi-division basis"
        elif verdict.fails:
            report.verdict, report.reason = INCONCLUSIVE, "presentation basis is not semi-division; other bases not examined"
        else:
            report.verdict, report.reason = INCONCLUSIVE, f"no violation up to bound {bound}; exhaustive check needs a prime field"
        return report

    found, basis = exists_semi_division_basis(A, predicate="semi")
    if not found:
        report = decompose(A)
        report.verdict, report.reason = NOT_SEMISIMPLE, "no semi-division basis"
        report.annihilator_rank = 0
        return report
    B = change_of_basis(A, basis, labels=[f"u{a + 1}" for a in range(A.dim)])
    report = decompose(B)
    report.annihilator_rank = 0
    report.witness_basis = basis
    _oracle_block_checks(report)
    report.verdict, report.reason = SEMISIMPLE, "zero annihilator and semi-division basis"
    return report

def check_simple_via_corollary(A:AlgebraPresentation, basis_mode:str=GIVEN_BASIS, bound:int=DEFAULT_BOUND) -> SimplicityVerdict:
    """ Simplicity through zero annihilator and i-division bases. Same contract as
    :func:`check_semisimple_via_theorem`; an identically zero product is never simple. """
    _check_basis_mode(A, basis_mode)
    if A.is_zero_product():
        return SimplicityVerdict(NOT_SIMPLE, "zero product", A, annihilator_rank=A.dim)
    ann = annihilator(A)
    if not ann.is_zero():
        return SimplicityVerdict(NOT_SIMPLE, "nonzero annihilator", A, annihilator_rank=ann.rank)

    if basis_mode == GIVEN_BASIS:
        verdict = check_i_division(A, mode=_given_basis_mode(A), bound=bound)
        if verdict.holds:
            return _oracle_simple_check(SimplicityVerdict(SIMPLE, "zero annihilator and i-division basis", A, verdict, annihilator_rank=0))
        if verdict.fails:
            reason = "presentation basis is not i-division; other bases not examined"
        else:
            reason = f"no violation up to bound {bound}; exhaustive check needs a prime field"
        return SimplicityVerdict(INCONCLUSIVE, reason, A, verdict, annihilator_rank=0)

    found, basis = exists_semi_division_basis(A, predicate="i")
    if found:
        return _oracle_simple_check(SimplicityVerdict(SIMPLE, "zero annihilator and i-division basis", A, witness_basis=basis, annihilator_rank=0))
    return SimplicityVerdict(NOT_SIMPLE, "no i-division basis", A, annihilator_rank=0)

def semi_division_basis_from_ideals(A:AlgebraPresentation, ideals:Sequence[Subspace]) -> Tuple[ndarray, AlgebraPresentation]:
    """ Joins echelon bases of ideals whose direct sum is A into a new basis of A.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    ideals : sequence of :class:`~basisdiv.algebra.Subspace`
        Ideals with A = I_1 + ... + I_m direct. For simple ideals the result is a semi-division
        basis.

    Returns
    -------
    ndarray, :class:`~basisdiv.algebra.AlgebraPresentation`
        Change-of-basis matrix (rows are the new basis in old coordinates) and A re-expressed
        with labels u1..un.

    """
    rows = []
    for n, I in enumerate(ideals):
        if not isinstance(I, Subspace):
            raise TypeError(f"expected a Subspace. Got {type(I)}")
        if I.dim != A.dim or I.field != A.field:
            raise ValueError(f"ideal {n} does not live in {A}")
        if not is_ideal(A, I):
            raise ValueError(f"subspace {n} is not an ideal")
        rows.extend(I.rows)
    total = span(rows, A.dim, A.field)
    if total.rank != len(rows):
        raise ValueError("the sum of the ideals is not direct")
    if not total.is_full():
        raise ValueError(f"the ideals span a subspace of rank {total.rank}, not A")
    m = as_matrix([r.coords for r in rows], A.dim, A.field)
    return m, change_of_basis(A, m, labels=[f"u{a + 1}" for a in range(A.dim)])
