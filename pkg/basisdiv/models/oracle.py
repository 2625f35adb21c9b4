#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Brute-force decisions over small prime fields, straight from the definitions.

Subspaces are enumerated once each through their reduced echelon forms, ideals are the
subspaces passing :func:`~basisdiv.algebra.is_ideal`, and bases are enumerated up to order and
scaling of their members. Nothing here relies on structure theory, so the results can serve as
ground truth for the basis-condition pipelines.

Enumeration sizes are bounded by the ceilings of
:func:`~basisdiv.models.utils.enumeration_ceilings`.

.. sourcecode:: pycon

        >>> from basisdiv.inputs import load_corpus
        >>> from basisdiv.algebra import reduce_mod
        >>> from basisdiv.models.oracle import all_ideals, oracle_is_semisimple
        >>> A = reduce_mod(load_corpus("ex1"), 2)
        >>> len(all_ideals(A)), oracle_is_semisimple(A)
        (3, False)

"""

from basisdiv.algebra import AlgebraPresentation, Subspace, Vector, change_of_basis, intersect, is_ideal, restrict, span
from basisdiv.field import FieldDescriptor
from basisdiv.linalg import as_matrix
from basisdiv.models.idivision import check_i_division
from basisdiv.models.semi import check_semi_division
from basisdiv.models.utils import enumeration_ceilings, estimate_memory
from basisdiv.models.weak import check_weak_division

from numpy import ndarray, full
from numpy.random import default_rng

from itertools import combinations, product as cartesian
from math import factorial
from time import time

from typing import Iterator, List, Optional, Tuple

import logging

logger = logging.getLogger(__name__)

PREDICATES = {
    "weak": check_weak_division,
    "semi": check_semi_division,
    "i": check_i_division,
}

RATIONAL_SAMPLES = (-3, -2, -1, 1, 2, 3)

def _check_finite(field:FieldDescriptor):
    if not field.is_finite:
        raise ValueError(f"exhaustive enumeration needs a prime field, got {field}")

def gaussian_binomial(n:int, k:int, q:int) -> int:
    """ Number of k-dimensional subspaces of F_q^n """
    if k < 0 or k > n:
        return 0
    num, denom = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        denom *= q ** (i + 1) - 1
    return num // denom

def all_subspaces(dim:int, field:FieldDescriptor, ceiling:int=None) -> Iterator[Subspace]:
    """ Every subspace of field^dim exactly once, by rank, then pivot columns, then free entries.

    Parameters
    ----------
    dim : int
        Ambient dimension.
    field : :class:`~basisdiv.field.FieldDescriptor`
        A prime field.
    ceiling : int, optional
        Bound on q^dim. Defaults to the configured subspace ceiling.

    Returns
    -------
    iterator of :class:`~basisdiv.algebra.Subspace`
        Canonical subspaces, starting with the zero subspace and ending with the whole space.

    """
    _check_finite(field)
    ceiling = enumeration_ceilings()[0] if ceiling is None else ceiling
    if field.order ** dim > ceiling:
        raise ValueError(f"{field.order}^{dim} exceeds the subspace enumeration ceiling {ceiling}")
    if 2 * field.order ** dim > ceiling:
        logger.warning(f"{field.order}^{dim} is close to the subspace enumeration ceiling {ceiling}")
    elements = list(field.elements())
    for rank in range(dim + 1):
        for pivots in combinations(range(dim), rank):
            free = [(a, c) for a, p in enumerate(pivots) for c in range(p + 1, dim) if c not in pivots]
            for values in cartesian(elements, repeat=len(free)):
                rows = []
                for p in pivots:
                    row = full(dim, field.zero, dtype=object)
                    row[p] = field.one
                    rows.append(row)
                for (a, c), v in zip(free, values):
                    rows[a][c] = v
                yield Subspace([Vector._wrap(r, field) for r in rows], pivots, dim, field)

def all_ideals(A:AlgebraPresentation) -> List[Subspace]:
    """ Every two-sided ideal of A, in subspace enumeration order; always contains {0} and A """
    _check_finite(A.field)
    estimate_memory(sum(gaussian_binomial(A.dim, k, A.field.order) for k in range(A.dim + 1)), A.dim)
    ideals = [S for S in all_subspaces(A.dim, A.field) if is_ideal(A, S)]
    logger.debug(f"found {len(ideals)} ideals of {A}")
    return ideals

def oracle_is_simple(A:AlgebraPresentation) -> bool:
    """ Nonzero product and no ideals besides {0} and A """
    if A.is_zero_product():
        return False
    return len(all_ideals(A)) == 2

def simple_ideals(A:AlgebraPresentation) -> List[Subspace]:
    """ Nonzero ideals of A that are simple as algebras under the restricted product """
    return [I for I in all_ideals(A) if not I.is_zero() and oracle_is_simple(restrict(A, I))]

def semisimple_family(A:AlgebraPresentation) -> Optional[Tuple[Subspace, ...]]:
    """ A family of simple ideals whose direct sum is A, smallest families first.

    Returns
    -------
    tuple of :class:`~basisdiv.algebra.Subspace` or None
        The first family found, or None when A is not semisimple.

    Raises
    ------
    RuntimeError
        If two distinct simple ideals intersect nontrivially.

    """
    simples = simple_ideals(A)
    for a, I in enumerate(simples):
        for J in simples[a + 1:]:
            if not intersect(I, J).is_zero():
                raise RuntimeError(f"distinct simple ideals of {A} intersect nontrivially")

    for size in range(1, len(simples) + 1):
        for family in combinations(simples, size):
            if sum(I.rank for I in family) != A.dim:
                continue
            if span([r for I in family for r in I.rows], A.dim, A.field).is_full():
                return family
    return None

def oracle_is_semisimple(A:AlgebraPresentation) -> bool:
    """ True iff A is a direct sum of simple ideals; the zero algebra is not """
    return semisimple_family(A) is not None

def basis_count(q:int, n:int) -> int:
    """ Number of ordered bases of F_q^n """
    count = 1
    for k in range(n):
        count *= q ** n - q ** k
    return count

def representative_count(q:int, n:int) -> int:
    """ Number of bases of F_q^n up to order and scaling of the members """
    return basis_count(q, n) // (factorial(n) * (q - 1) ** n)

def _independent_extensions(A:AlgebraPresentation, candidates:List[Vector]) -> Iterator[List[Vector]]:
    """ Depth-first search over independent families drawn from `candidates` in order """
    def extend(chosen, start, current):
        if len(chosen) == A.dim:
            yield list(chosen)
            return
        for n in range(start, len(candidates)):
            v = candidates[n]
            if current.contains(v):
                continue
            chosen.append(v)
            yield from extend(chosen, n + 1, span(list(current.rows) + [v], A.dim, A.field))
            chosen.pop()
    yield from extend([], 0, Subspace.zero(A.dim, A.field))

def _array(values, field:FieldDescriptor) -> ndarray:
    arr = full(len(values), field.zero, dtype=object)
    for i, v in enumerate(values):
        arr[i] = v
    return arr

def _as_basis_matrix(A:AlgebraPresentation, rows:List[Vector]) -> ndarray:
    return as_matrix([r.coords for r in rows], A.dim, A.field)

def enumerate_bases(A:AlgebraPresentation, ceiling:int=None) -> Iterator[ndarray]:
    """ Every ordered basis of the underlying space of A exactly once, as matrices whose rows
    are the basis vectors. The number of bases must stay within the ordered-basis ceiling. """
    _check_finite(A.field)
    ceiling = enumeration_ceilings()[1] if ceiling is None else ceiling
    total = basis_count(A.field.order, A.dim)
    if total > ceiling:
        raise ValueError(f"{total} ordered bases exceed the basis enumeration ceiling {ceiling}")
    vectors = [Vector._wrap(_array(t, A.field), A.field) for t in A.field.vectors(A.dim) if any(t)]

    def extend(chosen, current):
        if len(chosen) == A.dim:
            yield _as_basis_matrix(A, chosen)
            return
        for v in vectors:
            if current.contains(v):
                continue
            chosen.append(v)
            yield from extend(chosen, span(list(current.rows) + [v], A.dim, A.field))
            chosen.pop()
    yield from extend([], Subspace.zero(A.dim, A.field))

def enumerate_basis_representatives(A:AlgebraPresentation, ceiling:int=None) -> Iterator[ndarray]:
    """ Bases up to order and scaling: every member has leading coefficient 1 and members are
    drawn in candidate order, fewest nonzero coordinates first with e_1, ..., e_n leading, so
    the presentation basis comes first.

    The ceiling bounds the number of representatives, not the ordered bases they stand for.
    """
    _check_finite(A.field)
    ceiling = enumeration_ceilings()[1] if ceiling is None else ceiling
    total = representative_count(A.field.order, A.dim)
    if total > ceiling:
        raise ValueError(f"{total} basis representatives exceed the basis enumeration ceiling {ceiling}")
    one = A.field.one
    normalized = sorted(
        (t for t in A.field.vectors(A.dim) if next((c for c in t if c), None) == one),
        key=lambda t: (sum(1 for c in t if c), [-int(c) for c in t]),
    )
    normalized = [Vector._wrap(_array(t, A.field), A.field) for t in normalized]
    for rows in _independent_extensions(A, normalized):
        yield _as_basis_matrix(A, rows)

def exists_semi_division_basis(A:AlgebraPresentation, predicate:str="semi") -> Tuple[bool, Optional[ndarray]]:
    """ Searches the bases of A for one passing a division predicate exhaustively.
    Bases are taken up to order and scaling, see :func:`enumerate_basis_representatives`.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra, over a prime field.
    predicate : {"semi", "i", "weak"}, optional
        Which basis condition to look for.

    Returns
    -------
    bool, ndarray or None
        Whether such a basis exists, with the first witness basis found (rows in the
        coordinates of the presentation basis).

    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {sorted(PREDICATES)}")
    check = PREDICATES[predicate]
    start = time()
    examined = 0
    for m in enumerate_basis_representatives(A):
        examined += 1
        if check(change_of_basis(A, m)).holds:
            logger.info(f"found a {predicate}-division basis of {A} after {examined} bases in {time() - start:.2f}s")
            return True, m
    logger.info(f"no {predicate}-division basis of {A} among {examined} bases, took {time() - start:.2f}s")
    return False, None

class FuzzConfig(object):

    def __init__(self, field:FieldDescriptor, dim:int, sparsity:float=0.5, seed:int=0, trials:int=1):
        """ Parameters of a family of random presentations.

        Parameters
        ----------
        field : :class:`~basisdiv.field.FieldDescriptor`
            Base field. Exhaustive work needs a prime field with q^dim within the subspace
            ceiling.
        dim : int
            Dimension, 1 to 4.
        sparsity : float, optional
            Probability that a structure constant is nonzero.
        seed : int, optional
            Non-negative seed of the first trial; trial t uses seed + t.
        trials : int, optional
            Number of presentations.

        """
        if not isinstance(field, FieldDescriptor):
            raise TypeError(f"field must be a FieldDescriptor. Got {type(field)}")
        if not isinstance(dim, int) or not 1 <= dim <= 4:
            raise ValueError(f"dim must be between 1 and 4. Got {dim!r}")
        if not 0 <= sparsity <= 1:
            raise ValueError(f"sparsity must lie in [0, 1]. Got {sparsity!r}")
        if not isinstance(seed, int) or seed < 0 or seed >= 2**64:
            raise ValueError(f"seed must be a 64-bit non-negative integer. Got {seed!r}")
        if not isinstance(trials, int) or trials < 0:
            raise ValueError(f"trials must be a non-negative integer. Got {trials!r}")
        if field.is_finite:
            ceiling, _ = enumeration_ceilings()
            if field.order ** dim > ceiling:
                raise ValueError(f"{field.order}^{dim} exceeds the subspace enumeration ceiling {ceiling}")
        self.field = field
        self.dim = dim
        self.sparsity = float(sparsity)
        self.seed = seed
        self.trials = trials

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.field}, dim={self.dim}, sparsity={self.sparsity}, seed={self.seed}, trials={self.trials})"

    def seeds(self) -> List[int]:
        return [self.seed + t for t in range(self.trials)]

def random_algebra(cfg:FuzzConfig, seed:int=None) -> AlgebraPresentation:
    """ Random presentation, deterministic in the seed.

    Each structure constant c_ij^k is nonzero with probability `cfg.sparsity`, drawn uniformly
    among the nonzero elements of a prime field, or among the nonzero integers in [-3, 3] over Q.

    Parameters
    ----------
    cfg : :class:`~basisdiv.models.oracle.FuzzConfig`
        Field, dimension and sparsity.
    seed : int, optional
        Overrides `cfg.seed`.

    Returns
    -------
    :class:`~basisdiv.algebra.AlgebraPresentation`
        Presentation with labels e1..en.

    """
    if not isinstance(cfg, FuzzConfig):
        raise TypeError(f"expected a FuzzConfig. Got {type(cfg)}")
    seed = cfg.seed if seed is None else seed
    if seed < 0:
        raise ValueError(f"seed must be non-negative. Got {seed}")
    rng = default_rng(seed)
    field = cfg.field
    if field.is_finite:
        choices = list(field.nonzero_elements())
    else:
        choices = [field.element(v) for v in RATIONAL_SAMPLES]
    products = {}
    n = cfg.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rng.random() < cfg.sparsity:
                    products.setdefault((i, j), {})[k] = choices[int(rng.integers(len(choices)))]
    return AlgebraPresentation(field, [f"e{a + 1}" for a in range(n)], products)
