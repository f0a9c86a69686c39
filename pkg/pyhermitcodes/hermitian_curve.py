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
The Hermitian curve y^q + y = x^(q+1) over GF(q^2).

P is the point at infinity and Q the origin.  Two-point divisors mP + nQ
are kept as raw integer pairs and reduced on demand to the canonical form
dH - aP - bQ, 0 <= a, b <= q, using H = (q+1)P ~ (q+1)Q.
"""

from __future__ import annotations, division, print_function
import collections, functools, logging
import numpy
from numpy import arange, nonzero
from .finite_field import field_make, MODULI

log = logging.getLogger(__name__)

SUPPORT_KINDS = ("R-P", "R-P-Q")

AffinePoint = collections.namedtuple("AffinePoint", ["x", "y"])


class TwoPointDivisor(collections.namedtuple("TwoPointDivisor", ["m", "n"])):
    """The divisor mP + nQ."""

    __slots__ = ()

    @property
    def degree(self):
        return self.m + self.n

    def __add__(self, other):
        return TwoPointDivisor(self.m + other[0], self.n + other[1])

    def __sub__(self, other):
        return TwoPointDivisor(self.m - other[0], self.n - other[1])

    def __neg__(self):
        return TwoPointDivisor(-self.m, -self.n)

    def __str__(self):
        return divisor_string(self.m, self.n)


class CanonicalForm(collections.namedtuple("CanonicalForm", ["d", "a", "b"])):
    """The class dH - aP - bQ."""

    __slots__ = ()

    def degree(self, q):
        return self.d * (q + 1) - self.a - self.b

    def swapped(self):
        return CanonicalForm(self.d, self.b, self.a)


class CurveParams(object):
    """
    Numerical data of the Hermitian curve over GF(q^2).

    Parameters
    ----------
    q : int
        A prime power.
    with_field : bool
        Build the field tables.  Only the bound formulas are available
        when False, which allows q outside the field table (e.g. q=16).

    Attributes
    ----------
    genus : int
        q(q-1)/2.
    n_points : int
        Number of rational points, q^3 + 1.
    aut_order : int
        Order of the automorphism group, q^3(q^3+1)(q^2-1).
    deg_K, deg_H, deg_R : int
        Degrees of the canonical class (q-2)H, of H and of R.
    """

    def __init__(self, q, with_field=True):
        q = int(q)
        if q < 2:
            raise ValueError("Invalid q argument. q must be at least 2, got " + str(q))
        self.q = q
        self.field = field_make(q) if with_field else None
        self.genus = q * (q - 1) // 2
        self.n_points = q**3 + 1
        self.aut_order = q**3 * (q**3 + 1) * (q**2 - 1)
        self.deg_H = q + 1
        self.deg_K = (q - 2) * (q + 1)
        self.deg_R = q**3 + 1

    def __repr__(self):
        return "CurveParams(q=%d%s)" % (self.q, "" if self.field is not None else ", formula-only")

    def __eq__(self, other):
        return isinstance(other, CurveParams) and self.q == other.q and (self.field is None) == (other.field is None)

    def __hash__(self):
        return hash((self.q, self.field is None))

    def __reduce__(self):
        return (CurveParams, (self.q, self.field is not None))

    def require_field(self):
        if self.field is None:
            raise ValueError("Invalid params argument. Curve over q=" + str(self.q) + " was built without field tables")
        return self.field


@functools.lru_cache(maxsize=None)
def curve_params(q, with_field=None):
    """
    Cached CurveParams; the field is built whenever q is in the field table
    unless `with_field` says otherwise.
    """
    if with_field is None:
        with_field = int(q) in MODULI
    return CurveParams(q, with_field)


def as_params(params):
    if isinstance(params, CurveParams):
        return params
    return curve_params(int(params))


def rational_points(params):
    """
    All affine points of the curve.

    Parameters
    ----------
    params : CurveParams

    Returns
    -------
    points : list of AffinePoint
        The q^3 affine solutions, as integer codes, sorted by (x, y).

    Examples
    --------
    >>> pts = rational_points(curve_params(4))
    >>> len(pts), pts[0]
    (64, AffinePoint(x=0, y=0))
    """
    return list(_rational_points(as_params(params)))


@functools.lru_cache(maxsize=None)
def _rational_points(params):
    F = params.require_field()
    q = params.q
    lhs = _power_vector(F, q)
    lhs = F.add_table[lhs, arange(F.order)]
    rhs = _power_vector(F, q + 1)
    points = []
    for x in range(F.order):
        for y in nonzero(lhs == rhs[x])[0]:
            points.append(AffinePoint(x, int(y)))
    if len(points) != q**3:
        raise ValueError("Curve over GF(" + str(F.order) + ") has " + str(len(points)) + " affine points, expected " + str(q**3))
    log.debug("enumerated %d affine points for q=%d", len(points), q)
    return tuple(points)


def _power_vector(F, e):
    #e-th power of every element code, zero included
    out = numpy.zeros(F.order, dtype=numpy.int64)
    out[1:] = F.exp_table[(F.log_table[1:] * e) % (F.order - 1)]
    if e == 0:
        out[0] = 1
    return out


def canonicalize(G, params):
    """
    Reduce mP + nQ to its canonical class form dH - aP - bQ.

    Parameters
    ----------
    G : TwoPointDivisor or (m, n)
    params : CurveParams or int

    Returns
    -------
    c : CanonicalForm
        a = -m mod (q+1), b = -n mod (q+1) and d(q+1) - a - b = m + n.

    Examples
    --------
    >>> canonicalize(TwoPointDivisor(11, 0), 4)
    CanonicalForm(d=3, a=4, b=0)
    """
    q1 = as_params(params).q + 1
    m, n = int(G[0]), int(G[1])
    a = (-m) % q1
    b = (-n) % q1
    d, rem = divmod(m + n + a + b, q1)
    assert rem == 0
    return CanonicalForm(d, a, b)


def sequence_decompose(i, params):
    """
    Write iP = (d + q - 2)H - aP with 0 <= a <= q; returns (d, a).
    """
    q = as_params(params).q
    a = (-i) % (q + 1)
    return ((i + a) // (q + 1) - q + 2, a)


def residue_form(G, support, params):
    """
    The canonical C with C_L(D, G) = C_Omega(D, K + C).

    C is the class of D - G, with D = R - P (support "R-P") or
    D = R - P - Q (support "R-P-Q") and R ~ (q^3+1)P.
    """
    params = as_params(params)
    q3 = params.q**3
    m, n = int(G[0]), int(G[1])
    if support == "R-P":
        return canonicalize((q3 - m, -n), params)
    elif support == "R-P-Q":
        return canonicalize((q3 - m, -(1 + n)), params)
    raise ValueError("Invalid support argument. Choose one of " + ", ".join(SUPPORT_KINDS))


def dual_divisor(G, support, params):
    """
    The divisor G' with C_L(D, G)^perp = C_L(D, G').

    Uses the differential dx/(x^(q^2) - x), which has residue -1 at every
    affine point and divisor (q^3 + q^2 - q - 2)P - D - P.
    """
    params = as_params(params)
    q = params.q
    top = q**3 + q**2 - q - 2
    m, n = int(G[0]), int(G[1])
    if support == "R-P":
        return TwoPointDivisor(top - m, -n)
    elif support == "R-P-Q":
        return TwoPointDivisor(top - m, -1 - n)
    raise ValueError("Invalid support argument. Choose one of " + ", ".join(SUPPORT_KINDS))


def support_points(support, params):
    """Affine points of D, in the fixed point order."""
    pts = rational_points(params)
    if support == "R-P":
        return pts
    elif support == "R-P-Q":
        return [pt for pt in pts if pt != (0, 0)]
    raise ValueError("Invalid support argument. Choose one of " + ", ".join(SUPPORT_KINDS))


def divisor_string(m, n):
    parts = []
    for coef, name in ((m, "P"), (n, "Q")):
        if coef == 0:
            continue
        term = name if abs(coef) == 1 else str(abs(coef)) + name
        if not parts:
            parts.append(("-" if coef < 0 else "") + term)
        else:
            parts.append(("- " if coef < 0 else "+ ") + term)
    return " ".join(parts) if parts else "0"
