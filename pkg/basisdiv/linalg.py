#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Exact Gauss-Jordan elimination on numpy object arrays.

All matrices handled here are 2D :class:`numpy.ndarray` of dtype object whose entries are
exact scalars of a single :class:`~basisdiv.field.FieldDescriptor`. No floating point is ever
involved, so every "is zero" test is exact.
"""

from basisdiv.field import FieldDescriptor

from numpy import ndarray, array, full, hstack

from typing import List, Sequence, Tuple

import logging

logger = logging.getLogger(__name__)

def as_matrix(rows:Sequence, ncols:int, field:FieldDescriptor) -> ndarray:
    """ Stack coordinate rows into an object matrix with exactly `ncols` columns """
    rows = list(rows)
    if not rows:
        return full((0, ncols), field.zero, dtype=object)
    m = full((len(rows), ncols), field.zero, dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise ValueError(f"row {i} has length {len(row)}, expected {ncols}")
        for j in range(ncols):
            m[i, j] = row[j]
    return m

def identity(n:int, field:FieldDescriptor) -> ndarray:
    m = full((n, n), field.zero, dtype=object)
    for i in range(n):
        m[i, i] = field.one
    return m

def rref(matrix:ndarray, field:FieldDescriptor) -> Tuple[ndarray, Tuple[int, ...]]:
    """ Reduced row echelon form of a matrix.

    Parameters
    ----------
    matrix : ndarray
        2D object matrix over `field`. It is not modified.
    field : :class:`~basisdiv.field.FieldDescriptor`
        Field the entries live in.

    Returns
    -------
    ndarray, tuple
        The nonzero rows of the reduced row echelon form (leading 1 at every pivot, zeros
        above and below) and the strictly increasing pivot columns.

    """
    m = array(matrix, dtype=object, copy=True)
    if m.ndim != 2:
        raise ValueError(f"expected a 2D matrix, got shape {m.shape}")
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if m[i, c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = m[r] * (field.one / m[r, c])
        for i in range(nrows):
            if i != r and m[i, c]:
                m[i] = m[i] - m[r] * m[i, c]
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)

def nullspace(matrix:ndarray, field:FieldDescriptor) -> List[ndarray]:
    """ Basis of the right kernel {v : matrix v = 0}, one vector per free column """
    ncols = matrix.shape[1]
    reduced, pivots = rref(matrix, field)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = full(ncols, field.zero, dtype=object)
        v[f] = field.one
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis.append(v)
    return basis

def inverse(matrix:ndarray, field:FieldDescriptor) -> ndarray:
    """ Inverse of a square matrix; raises ValueError when it is singular """
    m = array(matrix, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    reduced, pivots = rref(hstack([m, identity(n, field)]), field)
    # [M | I] always has rank n; M is invertible iff every pivot falls inside M
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return reduced[:, n:]

def matmul(a:ndarray, b:ndarray, field:FieldDescriptor) -> ndarray:
    """ Exact matrix product, entries start from the field zero """
    out = full((a.shape[0], b.shape[1]), field.zero, dtype=object)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = field.zero
            for k in range(a.shape[1]):
                if a[i, k] and b[k, j]:
                    acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc
    return out
