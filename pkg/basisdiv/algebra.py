#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Finite-dimensional algebras given by structure constants, together with exact vectors,
canonical subspaces and the operations every basis condition quantifies over: products,
annihilator, ideal closure and ideal membership.

No identity is assumed for the product (associativity, commutativity, Jacobi, ...). The
product of basis elements is e_i e_j = sum_k c_ij^k e_k, and it is extended bilinearly.

Attributes
----------
products : dict
    Sparse structure constants of a presentation, (i, j) -> {k: c_ij^k}. Absent entries
    mean zero, explicit zeros are never stored.

Indices are 0-based throughout the package; labels are only used for input and output.

.. sourcecode:: pycon

        >>> from basisdiv.algebra import AlgebraPresentation, ideal_closure
        >>> from basisdiv.field import FieldDescriptor
        >>> Q = FieldDescriptor.rationals()
        >>> A = AlgebraPresentation(Q, ["b1", "b2"], {(0, 0): {0: Q.one}, (1, 1): {0: Q.one, 1: Q.one}})
        >>> ideal_closure(A, [A.basis_vector(1)]).rank
        2

"""

from basisdiv.field import FieldDescriptor, Scalar, render, scalar_parse
from basisdiv.linalg import as_matrix, inverse, nullspace, rref

from numpy import ndarray, array, full

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import logging

logger = logging.getLogger(__name__)

class Vector(object):
    """ Coordinate vector of exact scalars relative to the presentation basis. Immutable. """

    __slots__ = ("coords", "field")

    def __init__(self, coords:Iterable, field:FieldDescriptor):
        coords = [field.element(c) if isinstance(c, int) and not isinstance(c, bool) else c for c in coords]
        for c in coords:
            if not field.contains(c):
                raise ValueError(f"coordinate {c!r} is not an element of {field}")
        arr = full(len(coords), field.zero, dtype=object)
        for i, c in enumerate(coords):
            arr[i] = c
        arr.flags.writeable = False
        self.coords = arr
        self.field = field

    @classmethod
    def _wrap(cls, arr:ndarray, field:FieldDescriptor) -> "Vector":
        """ Wraps an object array that is already known to hold scalars of `field` """
        v = cls.__new__(cls)
        arr = array(arr, dtype=object)
        arr.flags.writeable = False
        v.coords = arr
        v.field = field
        return v

    @classmethod
    def zero(cls, dim:int, field:FieldDescriptor) -> "Vector":
        return cls._wrap(full(dim, field.zero, dtype=object), field)

    @classmethod
    def basis(cls, dim:int, i:int, field:FieldDescriptor) -> "Vector":
        if not 0 <= i < dim:
            raise ValueError(f"basis index {i} out of range for dimension {dim}")
        arr = full(dim, field.zero, dtype=object)
        arr[i] = field.one
        return cls._wrap(arr, field)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i:int) -> Scalar:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _check_compatible(self, other:"Vector"):
        if not isinstance(other, Vector):
            raise TypeError(f"expected a Vector. Got {type(other)}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} and {other.field}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} and {other.dim}")

    def __add__(self, other:"Vector") -> "Vector":
        self._check_compatible(other)
        return Vector._wrap(self.coords + other.coords, self.field)

    def __sub__(self, other:"Vector") -> "Vector":
        self._check_compatible(other)
        return Vector._wrap(self.coords - other.coords, self.field)

    def __neg__(self) -> "Vector":
        return Vector._wrap(-self.coords, self.field)

    def scale(self, s:Scalar) -> "Vector":
        """ Scalar multiple s * self """
        if not self.field.contains(s):
            raise ValueError(f"scalar {s!r} is not an element of {self.field}")
        return Vector._wrap(self.coords * s, self.field)

    def key(self) -> tuple:
        """ Hashable canonical form """
        return tuple(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> Tuple[int, ...]:
        """ Indices of the nonzero coordinates """
        return tuple(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Vector([{', '.join(render(c) for c in self.coords)}], {self.field})"

    def to_dict(self, labels:Sequence[str]) -> Dict[str, str]:
        """ Sparse label -> scalar string form, as used by the algebra file format """
        return {labels[i]: render(c) for i, c in enumerate(self.coords) if c}

def vector_from_dict(entries:Mapping[str, str], labels:Sequence[str], field:FieldDescriptor) -> Vector:
    """ Builds a vector from a sparse label -> scalar string mapping """
    index = {l: i for i, l in enumerate(labels)}
    coords = [field.zero] * len(labels)
    for label, text in entries.items():
        if label not in index:
            raise ValueError(f"undeclared label {label}")
        coords[index[label]] = scalar_parse(text, field)
    return Vector(coords, field)

class Subspace(object):
    """ Linear subspace stored in reduced row echelon form. Two subspaces are equal as sets
    iff their stored forms are identical. """

    __slots__ = ("rows", "pivots", "dim", "field")

    def __init__(self, rows:Sequence[Vector], pivots:Sequence[int], dim:int, field:FieldDescriptor):
        # Trusted constructor: callers pass an echelon form, use span() otherwise
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        self.dim = dim
        self.field = field

    @classmethod
    def zero(cls, dim:int, field:FieldDescriptor) -> "Subspace":
        return cls((), (), dim, field)

    @classmethod
    def full(cls, dim:int, field:FieldDescriptor) -> "Subspace":
        return cls([Vector.basis(dim, i, field) for i in range(dim)], range(dim), dim, field)

    @classmethod
    def coordinate(cls, dim:int, indices:Iterable[int], field:FieldDescriptor) -> "Subspace":
        """ span{e_j : j in indices} """
        indices = sorted(set(indices))
        return cls([Vector.basis(dim, i, field) for i in indices], indices, dim, field)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.rank == self.dim

    def contains(self, v:Vector) -> bool:
        return subspace_contains(self, v)

    def __contains__(self, v:Vector) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other:"Subspace") -> bool:
        """ Inclusion of subspaces """
        return all(subspace_contains(other, r) for r in self.rows)

    def coordinates(self, v:Vector) -> Tuple[Scalar, ...]:
        """ Coordinates of v relative to the echelon rows; only meaningful when v lies in self """
        return tuple(v[p] for p in self.pivots)

    def key(self) -> tuple:
        return (self.dim, self.field, self.pivots, tuple(r.key() for r in self.rows))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(rank={self.rank}, dim={self.dim}, pivots={self.pivots}, field={self.field})"

    def to_list(self, labels:Sequence[str]) -> List[Dict[str, str]]:
        return [r.to_dict(labels) for r in self.rows]

class AlgebraPresentation(object):

    def __init__(self, field:FieldDescriptor, labels:Sequence[str], products:Mapping):
        """ An algebra given by a basis and sparse structure constants.

        Parameters
        ----------
        field : :class:`~basisdiv.field.FieldDescriptor`
            Base field.
        labels : sequence of str
            Distinct basis names e_1..e_n. The dimension is their number and must be positive.
        products : mapping
            (i, j) -> {k: c_ij^k} with 0-based indices. Zero coefficients are dropped.

        """
        if not isinstance(field, FieldDescriptor):
            raise TypeError(f"field must be a FieldDescriptor. Got {type(field)}")
        labels = tuple(labels)
        if not labels:
            raise ValueError("an algebra needs a positive dimension")
        seen = set()
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"basis label must be a non-empty str. Got {label!r}")
            if label in seen:
                raise ValueError(f"duplicate basis label {label}")
            seen.add(label)

        self.field = field
        self.labels = labels
        self.dim = len(labels)
        self.products = {}

        for pair, entry in products.items():
            i, j = pair
            for idx in (i, j):
                self._check_index(idx)
            table = {}
            for k, c in entry.items():
                self._check_index(k)
                if not field.contains(c):
                    raise ValueError(f"coefficient {c!r} of e{i+1}e{j+1} is not an element of {field}")
                if c:
                    table[k] = c
            if table:
                self.products[(i, j)] = table

    def _check_index(self, idx:int):
        if not isinstance(idx, int) or not 0 <= idx < self.dim:
            raise ValueError(f"index {idx} out of range for dimension {self.dim}")

    def __str__(self) -> str:
        return f"{self.__class__.__name__} over {self.field} of dimension {self.dim} with {len(self.products)} nonzero products"

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self.field == other.field and self.labels == other.labels
                and self.products == other.products)

    def __hash__(self):
        return hash((self.field, self.labels, tuple(self.entries())))

    def index(self, label:str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown basis label {label}")

    def basis_vector(self, i:int) -> Vector:
        return Vector.basis(self.dim, i, self.field)

    def basis(self) -> List[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero_vector(self) -> Vector:
        return Vector.zero(self.dim, self.field)

    def vector(self, coords:Iterable) -> Vector:
        v = Vector(coords, self.field)
        if v.dim != self.dim:
            raise ValueError(f"dimension mismatch: {v.dim} and {self.dim}")
        return v

    def structure_constant(self, i:int, j:int, k:int) -> Scalar:
        return self.products.get((i, j), {}).get(k, self.field.zero)

    def basis_product(self, i:int, j:int) -> Vector:
        """ e_i e_j as a vector """
        arr = full(self.dim, self.field.zero, dtype=object)
        for k, c in self.products.get((i, j), {}).items():
            arr[k] = c
        return Vector._wrap(arr, self.field)

    def entries(self) -> List[Tuple[int, int, int, Scalar]]:
        """ All nonzero structure constants (i, j, k, c) in lexicographic index order """
        return [(i, j, k, self.products[(i, j)][k])
                for (i, j) in sorted(self.products) for k in sorted(self.products[(i, j)])]

    def is_zero_product(self) -> bool:
        return not self.products

def _field_from_raw(raw, where:str) -> FieldDescriptor:
    if not isinstance(raw, dict) or "type" not in raw:
        raise ValueError(f"{where}: expected an object with a 'type' entry")
    if raw["type"] == "Q":
        return FieldDescriptor.rationals()
    if raw["type"] == "Fp":
        p = raw.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"{where}.p: expected an integer modulus")
        try:
            return FieldDescriptor.prime_field(p)
        except ValueError as e:
            raise ValueError(f"{where}.p: {e}")
    raise ValueError(f"{where}.type: unknown field type {raw['type']!r}")

def validate_presentation(raw:Mapping, source:str="<data>") -> AlgebraPresentation:
    """ Checks parsed presentation data in the algebra file layout and builds the presentation.

    Parameters
    ----------
    raw : mapping
        {"field": {"type": "Q"} | {"type": "Fp", "p": 5}, "dim": n, "basis": [labels],
        "products": [{"left": label, "right": label, "result": {label: scalar string}}]}
    source : str, optional
        Name used as prefix of every diagnostic.

    Returns
    -------
    :class:`~basisdiv.algebra.AlgebraPresentation`
        The checked presentation.

    """
    if not isinstance(raw, Mapping):
        raise ValueError(f"{source}: expected a JSON object at top level")
    for key in ("field", "dim", "basis", "products"):
        if key not in raw:
            raise ValueError(f"{source}: missing entry {key!r}")
    field = _field_from_raw(raw["field"], f"{source}: field")

    dim = raw["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError(f"{source}: dim: expected a positive integer. Got {dim!r}")
    labels = raw["basis"]
    if not isinstance(labels, list) or not all(isinstance(l, str) and l for l in labels):
        raise ValueError(f"{source}: basis: expected a list of non-empty strings")
    if len(labels) != dim:
        raise ValueError(f"{source}: basis: {len(labels)} labels declared for dim {dim}")
    index = {}
    for label in labels:
        if label in index:
            raise ValueError(f"{source}: basis: duplicate label {label}")
        index[label] = len(index)

    products = {}
    if not isinstance(raw["products"], list):
        raise ValueError(f"{source}: products: expected a list")
    for n, entry in enumerate(raw["products"]):
        where = f"{source}: products[{n}]"
        if not isinstance(entry, Mapping):
            raise ValueError(f"{where}: expected an object")
        for key in ("left", "right", "result"):
            if key not in entry:
                raise ValueError(f"{where}: missing entry {key!r}")
        for side in ("left", "right"):
            if entry[side] not in index:
                raise ValueError(f"{where}.{side}: undeclared label {entry[side]!r}")
        pair = (index[entry["left"]], index[entry["right"]])
        if pair in products:
            raise ValueError(f"{where}: duplicate product {entry['left']}*{entry['right']}")
        if not isinstance(entry["result"], Mapping):
            raise ValueError(f"{where}.result: expected an object")
        table = {}
        for label, text in entry["result"].items():
            if label not in index:
                raise ValueError(f"{where}.result.{label}: undeclared label")
            try:
                table[index[label]] = scalar_parse(text, field)
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise ValueError(f"{where}.result.{label}: {e}")
        products[pair] = table

    A = AlgebraPresentation(field, labels, products)
    logger.debug(f"validated {A}")
    return A

def product(A:AlgebraPresentation, x:Vector, y:Vector) -> Vector:
    """ Bilinear product sum_ij x_i y_j c_ij^k e_k, computed over the sparse table """
    for v in (x, y):
        if not isinstance(v, Vector):
            raise TypeError(f"expected a Vector. Got {type(v)}")
        if v.field != A.field or v.dim != A.dim:
            raise ValueError(f"vector over {v.field} of dimension {v.dim} does not belong to {A}")
    out = full(A.dim, A.field.zero, dtype=object)
    xs, ys = x.coords, y.coords
    for (i, j), entry in A.products.items():
        if not xs[i] or not ys[j]:
            continue
        w = xs[i] * ys[j]
        for k, c in entry.items():
            out[k] = out[k] + w * c
    return Vector._wrap(out, A.field)

def span(vectors:Iterable[Vector], dim:int=None, field:FieldDescriptor=None) -> Subspace:
    """ Canonical subspace spanned by `vectors`. `dim` and `field` are needed only for an
    empty family. Span of concatenated bases implements the subspace sum. """
    vectors = list(vectors)
    if vectors:
        dim = vectors[0].dim if dim is None else dim
        field = vectors[0].field if field is None else field
    if dim is None or field is None:
        raise ValueError("the span of an empty family needs dim and field")
    for v in vectors:
        if not isinstance(v, Vector):
            raise TypeError(f"expected a Vector. Got {type(v)}")
        if v.dim != dim or v.field != field:
            raise ValueError(f"mixed dimensions or fields in span: {v.dim} over {v.field}, expected {dim} over {field}")
    if not vectors:
        return Subspace.zero(dim, field)
    reduced, pivots = rref(as_matrix([v.coords for v in vectors], dim, field), field)
    return Subspace([Vector._wrap(row, field) for row in reduced], pivots, dim, field)

def subspace_sum(S:Subspace, T:Subspace) -> Subspace:
    return span(list(S.rows) + list(T.rows), S.dim, S.field)

def intersect(S:Subspace, T:Subspace) -> Subspace:
    """ S ∩ T, from the kernel of [S^t | -T^t] """
    if S.dim != T.dim or S.field != T.field:
        raise ValueError("subspaces of different spaces")
    if S.is_zero() or T.is_zero():
        return Subspace.zero(S.dim, S.field)
    columns = [r.coords for r in S.rows] + [-r.coords for r in T.rows]
    m = as_matrix(columns, S.dim, S.field).transpose()
    found = []
    for kernel in nullspace(m, S.field):
        v = full(S.dim, S.field.zero, dtype=object)
        for a, r in zip(kernel[:S.rank], S.rows):
            if a:
                v = v + r.coords * a
        found.append(Vector._wrap(v, S.field))
    return span(found, S.dim, S.field)

def subspace_contains(S:Subspace, v:Vector) -> bool:
    """ True iff v reduces to zero against the echelon rows of S """
    if not isinstance(v, Vector):
        raise TypeError(f"expected a Vector. Got {type(v)}")
    if v.dim != S.dim:
        raise ValueError(f"dimension mismatch: {v.dim} and {S.dim}")
    residual = v.coords
    for row, p in zip(S.rows, S.pivots):
        if residual[p]:
            residual = residual - row.coords * residual[p]
    return not any(residual)

def annihilator(A:AlgebraPresentation) -> Subspace:
    """ Ann(A) = {x : xA = Ax = 0}, the kernel of x -> (x e_j, e_j x)_j """
    # column block j of row i holds e_i e_j and e_j e_i, so x lies in Ann(A) iff x^t M = 0
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            row.extend(A.basis_product(i, j).coords)
            row.extend(A.basis_product(j, i).coords)
        rows.append(row)
    m = as_matrix(rows, 2 * A.dim * A.dim, A.field).transpose()
    return span([Vector._wrap(v, A.field) for v in nullspace(m, A.field)], A.dim, A.field)

def multiplication_layer(A:AlgebraPresentation, S:Subspace) -> List[Vector]:
    """ v e_i and e_i v for every echelon row v of S and every basis index i """
    out = []
    for v in S.rows:
        for i in range(A.dim):
            e = A.basis_vector(i)
            out.append(product(A, v, e))
            out.append(product(A, e, v))
    return out

def ideal_closure(A:AlgebraPresentation, gens:Iterable[Vector]) -> Subspace:
    """ Smallest two-sided ideal containing `gens`.

    One multiplication layer is adjoined per pass until the rank stabilises, which takes at
    most `A.dim` passes. No associativity is used, nested products are reached iteratively.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    gens : iterable of :class:`~basisdiv.algebra.Vector`
        Generators.

    Returns
    -------
    :class:`~basisdiv.algebra.Subspace`
        The ideal generated by `gens`.

    """
    S = span(gens, A.dim, A.field)
    while True:
        T = span(list(S.rows) + multiplication_layer(A, S), A.dim, A.field)
        if T.rank == S.rank:
            return S
        S = T

def is_ideal(A:AlgebraPresentation, S:Subspace) -> bool:
    """ True iff v e_i and e_i v lie in S for every echelon row v and basis index i """
    if S.dim != A.dim:
        raise ValueError(f"dimension mismatch: {S.dim} and {A.dim}")
    return all(subspace_contains(S, w) for w in multiplication_layer(A, S))

def product_of_subspaces(A:AlgebraPresentation, S:Subspace, T:Subspace) -> Subspace:
    """ span{u v : u in S, v in T}; bilinearity makes echelon row products sufficient """
    return span([product(A, u, v) for u in S.rows for v in T.rows], A.dim, A.field)

def projection(x:Vector, idx:Iterable[int]) -> Vector:
    """ Copy of x with the coordinates outside `idx` zeroed """
    idx = set(idx)
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < x.dim:
            raise ValueError(f"index {i} out of range for dimension {x.dim}")
    arr = full(x.dim, x.field.zero, dtype=object)
    for i in idx:
        arr[i] = x.coords[i]
    return Vector._wrap(arr, x.field)

def coordinate(x:Vector, i:int) -> Scalar:
    """ The projection p_{e_i}(x), i.e. the i-th coordinate """
    return projection(x, {i})[i]

def change_of_basis(A:AlgebraPresentation, M, labels:Sequence[str]=None) -> AlgebraPresentation:
    """ Re-expresses A in the basis u_i = sum_j M_ij e_j.

    Parameters
    ----------
    A : :class:`~basisdiv.algebra.AlgebraPresentation`
        The algebra.
    M : ndarray or sequence of sequences
        Invertible n x n matrix over the field of A. Row i holds the old coordinates of u_i.
    labels : sequence of str, optional
        Labels of the new basis. Defaults to the labels of A.

    Returns
    -------
    :class:`~basisdiv.algebra.AlgebraPresentation`
        The same algebra in the new basis.

    """
    m = as_matrix([Vector(row, A.field).coords for row in M], A.dim, A.field)
    if m.shape[0] != A.dim:
        raise ValueError(f"expected a {A.dim}x{A.dim} matrix, got {m.shape[0]} rows")
    m_inv = inverse(m, A.field)
    new_basis = [Vector._wrap(m[a], A.field) for a in range(A.dim)]
    products = {}
    for a, u in enumerate(new_basis):
        for b, v in enumerate(new_basis):
            w = product(A, u, v)
            if w.is_zero():
                continue
            table = {}
            for target in range(A.dim):
                acc = A.field.zero
                for k in w.support():
                    if m_inv[k, target]:
                        acc = acc + w[k] * m_inv[k, target]
                if acc:
                    table[target] = acc
            products[(a, b)] = table
    return AlgebraPresentation(A.field, A.labels if labels is None else labels, products)

def restrict(A:AlgebraPresentation, S:Subspace, labels:Sequence[str]=None) -> AlgebraPresentation:
    """ A subspace closed under the product as an algebra of its own, with basis the echelon
    rows of S. Rows that are basis vectors keep their label. """
    if S.is_zero():
        raise ValueError("cannot restrict to the zero subspace")
    products = {}
    for a, u in enumerate(S.rows):
        for b, v in enumerate(S.rows):
            w = product(A, u, v)
            if not subspace_contains(S, w):
                raise ValueError("subspace is not closed under the product")
            coords = S.coordinates(w)
            products[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    if labels is None:
        labels = []
        for a, row in enumerate(S.rows):
            support = row.support()
            labels.append(A.labels[support[0]] if len(support) == 1 else f"r{a + 1}")
        if len(set(labels)) != len(labels):
            labels = [f"r{a + 1}" for a in range(S.rank)]
    return AlgebraPresentation(A.field, labels, products)

def reduce_mod(A:AlgebraPresentation, p:int) -> AlgebraPresentation:
    """ Reduces a presentation over Q to F_p; p must not divide any denominator """
    if A.field.is_finite:
        raise ValueError(f"only presentations over Q can be reduced, got {A.field}")
    target = FieldDescriptor.prime_field(p)
    products = {pair: {k: target.from_fraction(c) for k, c in entry.items()}
                for pair, entry in A.products.items()}
    return AlgebraPresentation(target, A.labels, products)
