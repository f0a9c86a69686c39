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
Monomial bases of Riemann-Roch spaces on the Hermitian curve.

In the P-chart a monomial x^i y^j has pole order qi + (q+1)j at P and
vanishes to order i + (q+1)j at Q.  The Q-chart uses u = x/y, v = 1/y,
where u^i v^j = x^i y^-(i+j) and the roles of P and Q are swapped.
"""

from __future__ import annotations, division, print_function
import collections, logging
from .hermitian_curve import as_params, canonicalize, TwoPointDivisor, SUPPORT_KINDS

log = logging.getLogger(__name__)

CHARTS = ("P", "Q")


class Monomial(collections.namedtuple("Monomial", ["i", "j", "chart"])):
    """x^i y^j in the P-chart, u^i v^j in the Q-chart."""

    __slots__ = ()

    def __new__(cls, i, j, chart="P"):
        if chart not in CHARTS:
            raise ValueError("Invalid chart argument. Choose one of " + ", ".join(CHARTS))
        return super(Monomial, cls).__new__(cls, int(i), int(j), chart)

    def xy_exponents(self):
        """Exponents (of x, of y) of the monomial as a function of x and y."""
        if self.chart == "P":
            return (self.i, self.j)
        return (self.i, -(self.i + self.j))

    def divides(self, other):
        return self.chart == other.chart and self.i <= other.i and self.j <= other.j

    def __str__(self):
        xs, ys = ("x", "y") if self.chart == "P" else ("u", "v")
        parts = []
        for name, e in ((xs, self.i), (ys, self.j)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(name + "^" + str(e))
        return "".join(parts) if parts else "1"


def valuations(mu, params):
    """
    Pole order and vanishing order of a monomial.

    Parameters
    ----------
    mu : Monomial
    params : CurveParams or int

    Returns
    -------
    pole, vanish : int
        For a P-chart monomial the pole order at P and the vanishing order
        at Q; for a Q-chart monomial the same pair with P and Q swapped.

    Examples
    --------
    >>> valuations(Monomial(1, 0), 4)
    (4, 1)
    """
    q = as_params(params).q
    return (q * mu.i + (q + 1) * mu.j, mu.i + (q + 1) * mu.j)


def pole_order(mu, params):
    return valuations(mu, params)[0]


def basis_one_point(m, params, chart="P"):
    """
    Basis of L(mP): all x^i y^j with i <= q and qi + (q+1)j <= m,
    sorted by pole order.  Empty for m < 0.
    """
    q = as_params(params).q
    out = []
    for i in range(q + 1):
        j = 0
        while q * i + (q + 1) * j <= m:
            out.append(Monomial(i, j, chart))
            j += 1
    out.sort(key=lambda mu: q * mu.i + (q + 1) * mu.j)
    return out


def basis_two_point(d, a, b, params, chart="P"):
    """
    Basis of L(d(q+1)P - aP - bQ).

    The monomials x^i y^j with
    (1) 0 <= i <= q, 0 <= j and i + j <= d,
    (2) a <= i when i + j = d,
    (3) b <= i when j = 0.

    Parameters
    ----------
    d : int
    a, b : int
        In [0, q].
    params : CurveParams or int
    chart : 'P' or 'Q'
        In the Q-chart the divisor is d(q+1)Q - aQ - bP and the monomials
        are in u, v.

    Returns
    -------
    basis : list of Monomial
        Sorted by pole order at the chart's pole.

    Examples
    --------
    >>> [str(mu) for mu in basis_two_point(2, 0, 3, 4)]
    ['y', 'xy', 'y^2']
    """
    q = as_params(params).q
    if not (0 <= a <= q and 0 <= b <= q):
        raise ValueError("Invalid a, b arguments. Both must lie in [0, " + str(q) + "], got " + str((a, b)))
    out = []
    for i in range(min(q, d) + 1):
        for j in range(d - i + 1):
            if i + j == d and i < a:
                continue
            if j == 0 and i < b:
                continue
            out.append(Monomial(i, j, chart))
    out.sort(key=lambda mu: q * mu.i + (q + 1) * mu.j)
    return out


def ell_canonical(d, a, b, params):
    """
    dim L(dH - aP - bQ) in closed form.

    Counts, for each i in [0, q], the j in [0, d-i], minus the top term
    when i < a and the j=0 term when i < b, the two coinciding when
    d - i = 0.
    """
    q = as_params(params).q
    total = 0
    for i in range(min(q, d) + 1):
        top = d - i
        cnt = top + 1
        drop_top = i < a
        drop_zero = i < b
        if top == 0:
            cnt -= 1 if (drop_top or drop_zero) else 0
        else:
            cnt -= int(drop_top) + int(drop_zero)
        total += cnt
    return total


def ell(G, params):
    """dim L(mP + nQ)."""
    c = canonicalize(G, params)
    return ell_canonical(c.d, c.a, c.b, params)


def riemann_roch_basis(G, params):
    """
    Literal basis of L(mP + nQ).

    Returns
    -------
    basis : list of Monomial
        The two-point basis of the canonical form of G.
    y_twist : int
        k = (n + b)/(q + 1); the basis functions of L(G) are
        y^-k x^i y^j for x^i y^j in `basis`.
    """
    params = as_params(params)
    c = canonicalize(G, params)
    k, rem = divmod(int(G[1]) + c.b, params.q + 1)
    assert rem == 0
    return basis_two_point(c.d, c.a, c.b, params), k


def evaluation_dimension(G, support, params):
    """
    dim C_L(D, G) = l(G) - l(G - D), with D = R - P ~ q^3 P or
    D = R - P - Q ~ q^3 P - Q.
    """
    params = as_params(params)
    q3 = params.q**3
    m, n = int(G[0]), int(G[1])
    if support == "R-P":
        low = (m - q3, n)
    elif support == "R-P-Q":
        low = (m - q3, n + 1)
    else:
        raise ValueError("Invalid support argument. Choose one of " + ", ".join(SUPPORT_KINDS))
    return ell((m, n), params) - ell(low, params)


def rr_dimension_check(degree, basis_size, params):
    """
    True iff `basis_size` is consistent with Riemann-Roch for a divisor of
    the given degree: exact above 2g - 2, at most max(0, deg - g + 1) + g
    otherwise, and zero for negative degree.
    """
    g = as_params(params).genus
    if degree < 0:
        return basis_size == 0
    if degree >= 2 * g - 1:
        return basis_size == degree - g + 1
    return 0 <= basis_size <= max(0, degree - g + 1) + g


def step_divisor(G, step):
    """G + P ('P') or G + Q ('Q')."""
    m, n = int(G[0]), int(G[1])
    if step == "P":
        return TwoPointDivisor(m + 1, n)
    elif step == "Q":
        return TwoPointDivisor(m, n + 1)
    raise ValueError("Invalid step argument. Choose 'P' or 'Q'")
