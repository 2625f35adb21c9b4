#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Exact scalar arithmetic over the rationals and over prime fields.

Rationals are represented by :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). Elements of F_p are :class:`~basisdiv.field.Residue` values, always
reduced into [0, p). Both are immutable and hashable, so equality of canonical forms is
structural equality.

.. sourcecode:: pycon

        >>> from basisdiv.field import FieldDescriptor, scalar_parse, scalar_arith
        >>> scalar_parse("-4/6", FieldDescriptor.rationals())
        Fraction(-2, 3)
        >>> F5 = FieldDescriptor.prime_field(5)
        >>> scalar_arith("div", F5.element(1), F5.element(2))
        Residue(3, 5)

"""

from fractions import Fraction

from itertools import product as cartesian

from typing import Iterator, Union

import logging
import re

logger = logging.getLogger(__name__)

RATIONALS = "Q"
PRIME_FIELD = "Fp"

SCALAR_PATTERN = re.compile(r"^(-?[0-9]+)(?:/([0-9]+))?$")

def is_prime(p:int) -> bool:
    """ Trial division primality test, meant for desk-scale moduli only """
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True

class Residue(object):
    """ Element of the prime field F_p, stored as its representative in [0, p). """

    __slots__ = ("value", "p")

    def __init__(self, value:int, p:int):
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"field mismatch: F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise ValueError(f"field mismatch: F_{self.p} and Q")
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * Residue(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Residue":
        """ Multiplicative inverse, raises ZeroDivisionError for zero """
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __lt__(self, other):
        if isinstance(other, Residue) and other.p == self.p:
            return self.value < other.value
        return NotImplemented

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)

Scalar = Union[Fraction, Residue]

class FieldDescriptor(object):

    __slots__ = ("kind", "p")

    def __init__(self, kind:str=RATIONALS, p:int=None):
        """ Describes the base field of an algebra: either the rationals or a prime field F_p.

        Parameters
        ----------
        kind : {"Q", "Fp"}
            Kind of the field.
        p : int, optional
            Prime modulus, required for (and only allowed with) kind "Fp". Primality is
            checked by trial division.

        """
        if kind == RATIONALS:
            if p is not None:
                raise ValueError("the rationals take no modulus")
        elif kind == PRIME_FIELD:
            if not is_prime(p):
                raise ValueError(f"modulus {p} is not prime")
        else:
            raise ValueError(f"unknown field kind {kind}")
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p:int) -> "FieldDescriptor":
        return cls(PRIME_FIELD, p)

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def order(self) -> int:
        """ Number of elements, only defined for prime fields """
        if not self.is_finite:
            raise ValueError("the rationals are infinite")
        return self.p

    @property
    def zero(self) -> Scalar:
        return self.element(0)

    @property
    def one(self) -> Scalar:
        return self.element(1)

    def element(self, value:int) -> Scalar:
        """ Image of an integer in the field """
        if self.is_finite:
            return Residue(value, self.p)
        return Fraction(value)

    def from_fraction(self, value:Fraction) -> Scalar:
        """ Image of a rational number; raises ValueError when p divides the denominator """
        value = Fraction(value)
        if not self.is_finite:
            return value
        if value.denominator % self.p == 0:
            raise ValueError(f"denominator {value.denominator} vanishes in F_{self.p}")
        return Residue(value.numerator, self.p) / Residue(value.denominator, self.p)

    def contains(self, s) -> bool:
        if self.is_finite:
            return isinstance(s, Residue) and s.p == self.p
        return isinstance(s, Fraction)

    def elements(self) -> Iterator[Residue]:
        """ All elements of a prime field in increasing order of representative """
        for v in range(self.order):
            yield Residue(v, self.p)

    def nonzero_elements(self) -> Iterator[Residue]:
        for v in range(1, self.order):
            yield Residue(v, self.p)

    def vectors(self, length:int) -> Iterator[tuple]:
        """ All coefficient tuples of the given length, in lexicographic order """
        return cartesian(list(self.elements()), repeat=length)

    def parse(self, text:str) -> Scalar:
        return scalar_parse(text, self)

    def render(self, s:Scalar) -> str:
        return render(s)

    def to_dict(self) -> dict:
        if self.is_finite:
            return {"type": PRIME_FIELD, "p": self.p}
        return {"type": RATIONALS}

    def __eq__(self, other):
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.is_finite:
            return f"FieldDescriptor('Fp', {self.p})"
        return "FieldDescriptor('Q')"

    def __str__(self):
        return f"F_{self.p}" if self.is_finite else "Q"

def field_of(s:Scalar) -> FieldDescriptor:
    """ Field a scalar lives in """
    if isinstance(s, Residue):
        return FieldDescriptor.prime_field(s.p)
    if isinstance(s, Fraction):
        return FieldDescriptor.rationals()
    raise TypeError(f"not a scalar: {s!r}")

def scalar_parse(text:str, field:FieldDescriptor) -> Scalar:
    """ Parse the scalar syntax `-?digits(/digits)?` into a canonical field element.

    Parameters
    ----------
    text : str
        Decimal integer or fraction, e.g. "7", "-4/6".
    field : :class:`~basisdiv.field.FieldDescriptor`
        Target field. Over F_p the value is interpreted mod p.

    Returns
    -------
    Fraction or Residue
        Canonical scalar.

    """
    if not isinstance(text, str):
        raise TypeError(f"scalar must be given as str. Got {type(text)}")
    match = SCALAR_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"malformed scalar {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")
    if not field.is_finite:
        return Fraction(numerator, denominator)
    if denominator % field.p == 0:
        raise ValueError(f"denominator of {text!r} vanishes in {field}")
    return Residue(numerator, field.p) / Residue(denominator, field.p)

def render(s:Scalar) -> str:
    """ Inverse of :func:`scalar_parse` """
    if isinstance(s, Residue):
        return str(s.value)
    if isinstance(s, Fraction):
        if s.denominator == 1:
            return str(s.numerator)
        return f"{s.numerator}/{s.denominator}"
    raise TypeError(f"not a scalar: {s!r}")

def canonical(s:Scalar) -> Scalar:
    """ Re-canonicalize a scalar; the identity on canonical input """
    if isinstance(s, Residue):
        return Residue(s.value, s.p)
    return Fraction(s.numerator, s.denominator)

def scalar_arith(op:str, a:Scalar, b:Scalar) -> Scalar:
    """ Exact field operation `op` in {"add", "sub", "mul", "div"} on two scalars of the same field """
    if field_of(a) != field_of(b):
        raise ValueError(f"field mismatch: {field_of(a)} and {field_of(b)}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op}")
