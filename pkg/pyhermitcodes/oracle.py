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
Ground truth for small codes: exhaustive weight enumeration, the
MacWilliams transform, coset minimum weights and Feng-Rao divisor counts.

Enumeration splits the messages by their leading symbols; each chunk
returns a weight histogram and the histograms are summed, so the result
does not depend on the number of worker processes.
"""

from __future__ import annotations, division, print_function
import logging, math, multiprocessing
import numpy
from numpy import arange, bincount, zeros
from scipy.special import comb
from .finite_field import field_make
from .hermitian_curve import as_params
from .riemann_roch import Monomial

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7
CHUNK_SIZE = 1 << 14

INFINITE = math.inf


class BudgetExceededError(ValueError):
    """Enumeration would visit more vectors than the budget allows."""

    def __init__(self, required, budget, what="enumeration"):
        self.required = required
        self.budget = budget
        ValueError.__init__(self, what + " needs " + str(required) + " vectors but the budget is " + str(budget))


class WeightDistribution(object):
    """
    Weight distribution A_0 .. A_n with unbounded integer counts.
    """

    def __init__(self, counts):
        self.counts = [int(c) for c in counts]

    @property
    def n(self):
        return len(self.counts) - 1

    @property
    def size(self):
        return sum(self.counts)

    @property
    def min_distance(self):
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        return INFINITE

    def __eq__(self, other):
        return isinstance(other, WeightDistribution) and self.counts == other.counts

    def __repr__(self):
        return "WeightDistribution(" + repr(self.counts) + ")"

    def to_json(self):
        return [str(c) for c in self.counts]


def _chunk_histogram(q, gen, prefixes, depth, exclude_chk=None):
    #weight histogram of the words m.G over messages whose first `depth`
    #symbols run through `prefixes` (codes), the rest through all of F^(k-depth);
    #also returns the number of messages visited
    F = field_make(q)
    add, mul = F.add_table, F.mul_table
    gen = numpy.asarray(gen).astype(numpy.int64)
    k, n = gen.shape
    inner = zeros((1, n), dtype=numpy.int64)
    for row in gen[depth:]:
        scaled = mul[arange(F.order)[:, None], row[None, :]]
        inner = add[inner[None, :, :], scaled[:, None, :]].reshape(-1, n)
    if exclude_chk is not None:
        chk = numpy.asarray(exclude_chk).astype(numpy.int64)
        GF = F.galois_field
    hist = zeros(n + 1, dtype=numpy.int64)
    visited = 0
    for prefix in prefixes:
        offset = zeros(n, dtype=numpy.int64)
        code = int(prefix)
        for pos in range(depth - 1, -1, -1):
            sym = code % F.order
            code //= F.order
            offset = add[offset, mul[sym, gen[pos]]]
        words = add[inner, offset[None, :]]
        if exclude_chk is not None and chk.shape[0] > 0:
            syn = numpy.asarray(GF(words) @ GF(chk).T)
            words = words[numpy.any(syn != 0, axis=1)]
        elif exclude_chk is not None:
            words = words[:0]
        visited += inner.shape[0]
        hist += bincount((words != 0).sum(axis=1), minlength=n + 1)
    return hist, visited


def _split_depth(order, k):
    depth = 0
    while depth < k and order**(k - depth) > CHUNK_SIZE:
        depth += 1
    return depth


def _enumerate_histogram(field, gen, budget, workers=1, exclude_chk=None, what="enumeration"):
    gen = numpy.asarray(gen).astype(numpy.int64)
    k, n = gen.shape
    required = field.order**k
    if required > budget:
        raise BudgetExceededError(required, budget, what)
    if k == 0:
        hist = zeros(n + 1, dtype=numpy.int64)
        if exclude_chk is None:
            hist[0] = 1
        return [int(c) for c in hist]
    depth = _split_depth(field.order, k)
    prefixes = list(range(field.order**depth))
    log.debug("%s: %d words in %d chunks, %d workers", what, required, len(prefixes), workers)
    if workers <= 1:
        hist, visited = _chunk_histogram(field.q, gen, prefixes, depth, exclude_chk)
    else:
        pool = multiprocessing.Pool(workers)
        step = max(1, len(prefixes) // (4 * workers))
        jobs = []
        for start in range(0, len(prefixes), step):
            jobs.append(pool.apply_async(_chunk_histogram, (field.q, gen, prefixes[start:start + step], depth, exclude_chk)))
        pool.close()
        try:
            parts = [job.get() for job in jobs]
        finally:
            pool.join()
        hist = sum((h for h, v in parts), zeros(n + 1, dtype=numpy.int64))
        visited = sum(v for h, v in parts)
    if visited != required:
        raise RuntimeError("Enumeration is incomplete: " + str(visited) + " of " + str(required) + " words")
    return [int(c) for c in hist]


def weight_distribution_exhaustive(code, budget=DEFAULT_BUDGET, workers=1):
    """Weight distribution of `code` by enumerating all q^(2k) codewords."""
    return WeightDistribution(_enumerate_histogram(code.field, code.gen, budget, workers))


def min_weight_exhaustive(code, budget=DEFAULT_BUDGET, workers=1):
    """
    Minimum weight of the nonzero codewords, by enumeration.

    Parameters
    ----------
    code : LinearCode
    budget : int
        Largest number of messages to enumerate.
    workers : int
        Worker processes; 1 enumerates in-process.

    Returns
    -------
    d : int
        INFINITE (math.inf) for the zero code.

    Raises
    ------
    BudgetExceededError
    """
    return weight_distribution_exhaustive(code, budget, workers).min_distance


def krawtchouk(n, order, j, i):
    """K_j(i) for length n over a field with `order` elements."""
    total = 0
    for s in range(0, j + 1):
        total += (-1)**s * (order - 1)**(j - s) * comb(i, s, exact=True) * comb(n - i, j - s, exact=True)
    return total


def macwilliams_transform(dist, order, dim):
    """
    Weight distribution of the dual of a code of dimension `dim` with
    distribution `dist`, over a field with `order` elements.
    """
    n = dist.n
    size = order**dim
    out = []
    for j in range(n + 1):
        total = sum(B * krawtchouk(n, order, j, i) for i, B in enumerate(dist.counts) if B)
        val, rem = divmod(total, size)
        if rem:
            raise ArithmeticError("MacWilliams transform is not integral at weight " + str(j))
        out.append(val)
    return WeightDistribution(out)


def weight_distribution_via_dual(code, budget=DEFAULT_BUDGET, workers=1):
    """
    Weight distribution of `code` from an exhaustive enumeration of its
    dual, which has q^(2(n-k)) words, and the MacWilliams transform.
    """
    dual = WeightDistribution(_enumerate_histogram(code.field, code.chk, budget, workers, what="dual enumeration"))
    return macwilliams_transform(dual, code.field.order, code.n - code.k)


def coset_min_weight(sub, sup, budget=DEFAULT_BUDGET, workers=1):
    """
    Least weight of a word of `sup` outside `sub`; 0 when sub = sup.
    """
    if not sup.contains(sub):
        raise ValueError("Invalid arguments. The first code is not contained in the second")
    if sub.k == sup.k:
        return 0
    hist = _enumerate_histogram(sup.field, sup.gen, budget, workers, exclude_chk=sub.chk, what="coset enumeration")
    for w in range(1, len(hist)):
        if hist[w]:
            return w
    return 0


# ---- Feng-Rao divisor counting ---------------------------------------------

def twopoint_exclusions(b, chart="P"):
    """
    Monomials of the one-point diagram missing from L(mP - bQ): those with
    vanishing order below b at Q, i.e. x^i with i < b.
    """
    return lambda mu: mu.chart == chart and mu.j == 0 and mu.i < b


def fengrao_divisibility_count(mu, exclusions, params):
    """
    Number of diagram monomials dividing a monomial of the same pole order
    as `mu`.

    All monomials of that pole order with exponent of x (or u) up to 2q
    are considered, and the union of their divisors inside the diagram
    (exponent at most q, not excluded) is counted.

    Parameters
    ----------
    mu : Monomial
    exclusions : callable, collection of Monomial, or None
    params : CurveParams or int

    Returns
    -------
    count : int

    Examples
    --------
    >>> fengrao_divisibility_count(Monomial(7, 2), None, 8)
    24
    """
    q = as_params(params).q
    if exclusions is None:
        excluded = lambda nu: False
    elif callable(exclusions):
        excluded = exclusions
    else:
        banned = set(exclusions)
        excluded = lambda nu: nu in banned
    order = q * mu.i + (q + 1) * mu.j
    found = set()
    for i in range(0, 2 * q + 1):
        rest = order - q * i
        if rest < 0 or rest % (q + 1):
            continue
        j = rest // (q + 1)
        for a in range(min(i, q) + 1):
            for b in range(j + 1):
                nu = Monomial(a, b, mu.chart)
                if not excluded(nu):
                    found.add(nu)
    return len(found)
