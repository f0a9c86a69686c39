# -*- coding: utf-8 -*-
#   Copyright (C) 2024-2026 pyhermitcodes developers
#   This file is part of pyhermitcodes

#    pyhermitcodes is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.

#    pyhermitcodes is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.

#    You should have received a copy of the GNU General Public License
#    along with pyhermitcodes.  If not, see <http://www.gnu.org/licenses/>.

"""
Exact arithmetic in the fields GF(q^2), q in {2, 3, 4, 5, 7, 8, 9}.

Elements are integer codes in [0, p^m): the base-p digits of a code,
least significant first, are the coefficients of the polynomial
representative modulo the fixed modulus of the field.  All products,
quotients and powers go through log/antilog tables built once per field.
"""

from __future__ import annotations, division, print_function
import functools, logging
import numpy
from numpy import arange, array, zeros
import galois

log = logging.getLogger(__name__)

# one fixed monic irreducible (Conway) polynomial per field, coefficients
# little-endian; keyed by q, values are (p, m, modulus)
MODULI = {
    2: (2, 2, (1, 1, 1)),              # t^2 + t + 1
    3: (3, 2, (2, 2, 1)),              # t^2 + 2t + 2
    4: (2, 4, (1, 1, 0, 0, 1)),        # t^4 + t + 1
    5: (5, 2, (2, 4, 1)),              # t^2 + 4t + 2
    7: (7, 2, (3, 6, 1)),              # t^2 + 6t + 3
    8: (2, 6, (1, 1, 0, 1, 1, 0, 1)),  # t^6 + t^4 + t^3 + t + 1
    9: (3, 4, (2, 0, 0, 2, 1)),        # t^4 + 2t^3 + 2
}

SUPPORTED_Q = tuple(sorted(MODULI.keys()))

ARITH_KINDS = ("add", "sub", "mul", "div")


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class FieldSpec(object):
    """
    The field GF(p^m) with m even, built from a fixed modulus.

    Parameters
    ----------
    p : int
        Characteristic.
    m : int
        Extension degree, must be even.
    modulus : sequence of ints
        Little-endian coefficients of a monic irreducible polynomial of
        degree `m` over GF(p).

    Attributes
    ----------
    order : int
        Number of elements, p^m.
    q : int
        Order of the subfield, p^(m/2).
    generator : int
        Code of a primitive element (multiplicative order p^m - 1).
    exp_table, log_table : ndarray of ints
        Antilog and log tables with respect to `generator`; log_table[0]
        is unused and set to -1.
    add_table, mul_table : ndarray of ints
        Full order x order addition and multiplication tables, used for
        vectorized evaluation.
    """

    def __init__(self, p, m, modulus):
        if not galois.is_prime(p):
            raise ValueError("Invalid characteristic argument. p must be a prime, got " + str(p))
        if m < 2 or m % 2 != 0:
            raise ValueError("Invalid degree argument. m must be even and at least 2, got " + str(m))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("Invalid modulus argument. A monic polynomial of degree " + str(m) + " is required")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p**m
        self.q = p**(m // 2)
        if not is_irreducible(modulus, p):
            raise ValueError("Invalid modulus argument. " + poly_string(modulus) + " is reducible over GF(" + str(p) + ")")
        self._build_tables()
        log.info("built GF(%d) with modulus %s, generator %d", self.order, poly_string(modulus), self.generator)

    def __repr__(self):
        return "FieldSpec(p=%d, m=%d, modulus=%s)" % (self.p, self.m, poly_string(self.modulus))

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (FieldSpec, (self.p, self.m, self.modulus))

    def digits(self, code):
        """Base-p digits of an element code, least significant first."""
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return out

    def from_digits(self, digits):
        code = 0
        for c in reversed(digits):
            code = code * self.p + (c % self.p)
        return code

    def _times_t(self, digits):
        #multiply by t and reduce with the modulus
        top = digits[-1]
        shifted = [0] + digits[:-1]
        return [(shifted[k] - top * self.modulus[k]) % self.p for k in range(self.m)]

    def _poly_mulmod(self, a, b):
        acc = [0] * self.m
        term = self.digits(a)
        for c in self.digits(b):
            if c:
                acc = [(acc[k] + c * term[k]) % self.p for k in range(self.m)]
            term = self._times_t(term)
        return self.from_digits(acc)

    def _build_tables(self):
        n = self.order
        powers = self.p**arange(self.m)
        dig = (arange(n)[:, None] // powers[None, :]) % self.p
        self.add_table = (((dig[:, None, :] + dig[None, :, :]) % self.p) * powers).sum(axis=2)
        self.neg_table = (((-dig) % self.p) * powers).sum(axis=1)

        self.generator = None
        for g in range(2, n) if n > 2 else range(1, n):
            cycle = [1]
            x = g
            while x != 1:
                cycle.append(x)
                x = self._poly_mulmod(x, g)
            if len(cycle) == n - 1:
                self.generator = g
                break
        if self.generator is None:
            raise ValueError("No primitive element found for " + repr(self))

        self.exp_table = array(cycle + cycle, dtype=numpy.int64)
        self.log_table = zeros(n, dtype=numpy.int64) - 1
        for k, x in enumerate(cycle):
            self.log_table[x] = k

        mul = zeros((n, n), dtype=numpy.int64)
        lg = self.log_table[1:]
        mul[1:, 1:] = self.exp_table[(lg[:, None] + lg[None, :]) % (n - 1)]
        self.mul_table = mul
        self.inv_table = zeros(n, dtype=numpy.int64)
        self.inv_table[1:] = self.exp_table[(-lg) % (n - 1)]
        for tbl in (self.add_table, self.neg_table, self.exp_table, self.log_table, self.mul_table, self.inv_table):
            tbl.setflags(write=False)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.order)]

    def element(self, value):
        return FieldElement(value, self)

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(" + str(self.order) + ")")
        if a == 0:
            return 0
        return int(self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.order - 1)])

    def power(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power in GF(" + str(self.order) + ")")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[a] * e) % (self.order - 1)])

    def pow_q(self, a):
        return self.power(a, self.q)

    def element_order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("Invalid element argument. Zero has no multiplicative order")
        n = self.order - 1
        return n // numpy.gcd(n, int(self.log_table[a]))

    @functools.cached_property
    def galois_field(self):
        """The matching `galois` field class, same integer representation."""
        gf_p = galois.GF(self.p)
        irr = galois.Poly(list(reversed(self.modulus)), field=gf_p)
        return galois.GF(self.order, irreducible_poly=irr)


class FieldElement(object):
    """An element of a FieldSpec, stored as its integer code."""

    __slots__ = ("value", "spec")

    def __init__(self, value, spec):
        value = int(value)
        if value < 0 or value >= spec.order:
            raise ValueError("Invalid element code " + str(value) + " for GF(" + str(spec.order) + ")")
        self.value = value
        self.spec = spec

    def _check(self, other):
        if not isinstance(other, FieldElement):
            other = FieldElement(other, self.spec)
        if other.spec != self.spec:
            raise FieldMismatchError("Elements belong to different fields: " + repr(self.spec) + " and " + repr(other.spec))
        return other

    def __add__(self, other):
        return arith(self, other, "add")

    def __sub__(self, other):
        return arith(self, other, "sub")

    def __mul__(self, other):
        return arith(self, other, "mul")

    def __truediv__(self, other):
        return arith(self, other, "div")

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec.neg_table[self.value], self.spec)

    def __pow__(self, e):
        return FieldElement(self.spec.power(self.value, e), self.spec)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.spec))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return "GF%d(%d)" % (self.spec.order, self.value)


def field_make(q):
    """
    Return the field GF(q^2) with its fixed modulus.

    Parameters
    ----------
    q : int
        Subfield order, one of 2, 3, 4, 5, 7, 8, 9.

    Returns
    -------
    spec : FieldSpec

    Examples
    --------
    >>> F = field_make(4)
    >>> F.order, F.p, F.m
    (16, 2, 4)
    """
    return _field_make(int(q))


@functools.lru_cache(maxsize=None)
def _field_make(q):
    if q < 2 or not galois.is_prime_power(q):
        raise ValueError("Invalid q argument. q must be a prime power, got " + str(q))
    if q not in MODULI:
        raise ValueError("Invalid q argument. Supported values are " + ", ".join(str(v) for v in SUPPORTED_Q) + "; got " + str(q))
    p, m, modulus = MODULI[q]
    return FieldSpec(p, m, modulus)


def arith(a, b, kind):
    """
    Field arithmetic on two elements of the same field.

    Parameters
    ----------
    a, b : FieldElement
        Operands; `b` may also be a plain integer code.
    kind : string ('add', 'sub', 'mul' or 'div')

    Returns
    -------
    c : FieldElement
    """
    b = a._check(b)
    spec = a.spec
    if kind == "add":
        v = spec.add(a.value, b.value)
    elif kind == "sub":
        v = spec.sub(a.value, b.value)
    elif kind == "mul":
        v = spec.mul(a.value, b.value)
    elif kind == "div":
        v = spec.div(a.value, b.value)
    else:
        raise ValueError("Invalid kind argument. Choose one of " + ", ".join(ARITH_KINDS))
    return FieldElement(v, spec)


def pow_q(a):
    """The Frobenius map a -> a^q, an involution on GF(q^2)."""
    return FieldElement(a.spec.pow_q(a.value), a.spec)


def is_irreducible(modulus, p):
    """
    Trial division of a little-endian polynomial over GF(p) by every monic
    polynomial of degree 1 .. deg/2.
    """
    gf_p = galois.GF(p)
    f = galois.Poly(list(reversed(modulus)), field=gf_p)
    deg = len(modulus) - 1
    for e in range(1, deg // 2 + 1):
        for code in range(p**e, 2 * p**e):
            if (f % galois.Poly.Int(code, field=gf_p)).nonzero_coeffs.size == 0:
                return False
    return True


def poly_string(coeffs, var="t"):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else var + "^" + str(k))
        if mono == "":
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else str(c) + mono)
    return " + ".join(terms) if terms else "0"
