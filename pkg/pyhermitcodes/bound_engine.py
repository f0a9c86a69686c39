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
Coset bounds, order bounds and redundancies for Hermitian codes.

A step of a divisor sequence G -> G + P (or G + Q) is labelled with a
lower bound on the minimum weight of C_Omega(D, G) minus C_Omega(D, G+P).
A label of 0 marks a gap (the two codes coincide).  The redundancy of the
Feng-Rao improved code with designed distance delta is the number of steps
labelled strictly between 0 and delta.
"""

from __future__ import annotations, division, print_function
import collections, functools, logging, math
import numpy
from numpy import array, full, maximum, minimum, zeros
from .hermitian_curve import (as_params, canonicalize, dual_divisor, residue_form, sequence_decompose, CanonicalForm,
                             TwoPointDivisor)
from .riemann_roch import ell, evaluation_dimension

log = logging.getLogger(__name__)

KINDS = ("onepoint", "twopoint")
METHODS = ("simple", "improved")
MODES = ("classical", "improved")
STEPS = ("P", "Q")

INF = 1 << 30
NEG = -1

SUPPORT_OF_KIND = {"onepoint": "R-P", "twopoint": "R-P-Q"}

SupportFlags = collections.namedtuple("SupportFlags", ["p_in_support", "q_in_support"])

FLAGS_OF_SUPPORT = {
    "R-P": SupportFlags(False, True),
    "R-P-Q": SupportFlags(False, False),
    "R-Q": SupportFlags(True, False),
}


class WindowTooSmallError(ValueError):
    """A sweep horizon or divisor window does not reach far enough."""


class NoDistanceCaseError(ValueError):
    """None of the distance cases applies to the given data."""


class CosetBoundSequence(object):
    """
    Coset bounds along iP (kind 'onepoint') or iP + Q (kind 'twopoint').

    Attributes
    ----------
    q : int
    kind : string
    method : string
        'simple' or 'improved'; the one-point sequence has a single method.
    entries : dict
        i -> bound, for i in [-1, i_max].
    """

    def __init__(self, q, kind, method, entries):
        self.q = q
        self.kind = kind
        self.method = method
        self.entries = dict(entries)

    @property
    def i_max(self):
        return max(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def items(self):
        return sorted(self.entries.items())

    def to_dict(self):
        return {"q": self.q, "kind": self.kind, "method": self.method,
                "bounds": collections.OrderedDict((str(i), b) for i, b in self.items())}


RedundancyRow = collections.namedtuple("RedundancyRow", ["delta", "onepoint_classical", "onepoint_improved",
                                                         "twopoint_classical", "twopoint_improved", "diff"])


class RedundancyTable(object):
    """Rows delta -> RedundancyRow for one curve."""

    def __init__(self, q, rows):
        self.q = q
        self.rows = collections.OrderedDict((row.delta, row) for row in rows)

    def __getitem__(self, delta):
        return self.rows[delta]

    def __iter__(self):
        return iter(self.rows.values())

    def to_dict(self):
        return {"q": self.q, "rows": [row._asdict() for row in self]}


# ---- coset bounds ---------------------------------------------------------

def base_coset_bound(c, step, params):
    """
    Bound on C_Omega(D, K+C) minus C_Omega(D, K+C+P) for C = dH - aP - bQ.

    Parameters
    ----------
    c : CanonicalForm
    step : 'P' or 'Q'
        For a Q-step the roles of a and b are swapped.
    params : CurveParams or int

    Returns
    -------
    bound : int
        deg C if a < d; a(q-1-a+d) + max(0, a-b) if 0 <= a-d <= q-1;
        0 if a - d > q - 1.

    Examples
    --------
    >>> base_coset_bound(CanonicalForm(1, 0, 4), 'P', 4)
    1
    """
    q = as_params(params).q
    d, a, b = c
    if step == "Q":
        a, b = b, a
    elif step != "P":
        raise ValueError("Invalid step argument. Choose 'P' or 'Q'")
    if a - d < 0:
        return d * (q + 1) - a - b
    if a - d <= q - 1:
        return a * (q - 1 - a + d) + max(0, a - b)
    return 0


def sequence_bound_simple(i, kind, params):
    """Coset bound at step i of iP ('onepoint') or iP + Q ('twopoint')."""
    q = as_params(params).q
    d, a = sequence_decompose(i, q)
    if kind == "onepoint":
        s = a - d
        if s < 0:
            return (q + 1) * d - a
    elif kind == "twopoint":
        s = a - d - 1
        if s < 0:
            return (q + 1) * d - a + 1
    else:
        raise ValueError("Invalid kind argument. Choose one of " + ", ".join(KINDS))
    if s <= q - 1:
        return a * (q - a + d)
    return 0


def sequence_bound_improved(i, params):
    """
    Coset bound at step i of iP + Q using the path through (i+1)P + (q-d)Q.

    Agrees with the simple bound except for a <= d <= q-1, where it is
    qd + q - a.
    """
    q = as_params(params).q
    d, a = sequence_decompose(i, q)
    if d > q - 1:
        return (q + 1) * d - a + 1
    if a <= d:
        return q * d + q - a
    if a - d - 1 <= q - 1:
        return a * (q - a + d)
    return 0


def coset_bound_sequence(params, kind, method="simple", i_max=None):
    """
    Coset bounds for steps -1 .. i_max.

    The default horizon is 2 deg K + 2q + 2, past which the bounds follow
    the Goppa bound i - (2g - 2).
    """
    params = as_params(params)
    if method not in METHODS:
        raise ValueError("Invalid method argument. Choose one of " + ", ".join(METHODS))
    if i_max is None:
        i_max = 2 * params.deg_K + 2 * params.q + 2
    if kind == "twopoint" and method == "improved":
        entries = dict((i, sequence_bound_improved(i, params)) for i in range(-1, i_max + 1))
    else:
        entries = dict((i, sequence_bound_simple(i, kind, params)) for i in range(-1, i_max + 1))
    return CosetBoundSequence(params.q, kind, method, entries)


def default_horizon(delta, params):
    params = as_params(params)
    return delta + 4 * params.genus + params.q + 2


def _check_tail(delta, bounds, params):
    q = params.q
    tail_start = 2 * params.deg_K + 2
    last = bounds.i_max
    if last < tail_start + q or min(bounds[i] for i in range(last - q, last + 1)) < delta:
        raise WindowTooSmallError("Bound horizon i_max=" + str(last) + " is too small for designed distance " +
                                  str(delta) + "; use at least " + str(default_horizon(delta, params)))


def classical_cutoff(delta, bounds):
    """One past the last step whose bound lies in (0, delta)."""
    last = -2
    for i, b in bounds.items():
        if 0 < b < delta:
            last = i
    return last + 1


def redundancy(delta, bounds, mode="improved"):
    """
    Redundancy of the code with designed distance delta along a sequence.

    Parameters
    ----------
    delta : int
        At least 2.
    bounds : CosetBoundSequence
    mode : 'classical' or 'improved'
        Improved counts the steps with 0 < bound < delta.  Classical takes
        every nonzero step before the last one below delta.

    Returns
    -------
    r : int

    Examples
    --------
    >>> redundancy(5, coset_bound_sequence(4, 'onepoint', i_max=50), 'improved')
    8
    """
    params = as_params(bounds.q)
    if delta < 2:
        raise ValueError("Invalid delta argument. The designed distance must be at least 2, got " + str(delta))
    _check_tail(delta, bounds, params)
    if mode == "improved":
        return sum(1 for i, b in bounds.items() if 0 < b < delta)
    elif mode == "classical":
        cut = classical_cutoff(delta, bounds)
        return sum(1 for i, b in bounds.items() if i < cut and b > 0)
    raise ValueError("Invalid mode argument. Choose one of " + ", ".join(MODES))


def sequence_redundancy(delta, params, kind, mode, method="improved"):
    params = as_params(params)
    bounds = _cached_sequence(params, kind, method, default_horizon(delta, params))
    return redundancy(delta, bounds, mode)


@functools.lru_cache(maxsize=64)
def _cached_sequence(params, kind, method, i_max):
    return coset_bound_sequence(params, kind, method, i_max)


def redundancy_diff_closed_form(delta, params):
    """
    One-point improved minus two-point improved redundancy for
    delta = dq + b, 0 < d <= q-1, 0 < b <= q.
    """
    q = as_params(params).q
    d, b = divmod(delta - 1, q)
    b += 1
    if not (0 < d <= q - 1 and 0 < b <= q):
        raise ValueError("Invalid delta argument. delta=" + str(delta) + " has no decomposition dq + b with 0 < d <= q-1, 0 < b <= q")
    if b <= d <= q - b:
        return b - 1
    if b <= d and q - b < d:
        return q - d - 1
    if q - b < d < b:
        return q - b
    return d


# ---- distances of classical two-point codes -------------------------------

def actual_distance_twopoint(c, support_flags, params):
    """
    Minimum distance of C_Omega(D, K + C) for C = dH - aP - bQ.

    Parameters
    ----------
    c : CanonicalForm
        C != 0, deg C >= 0 and d >= 0.
    support_flags : SupportFlags or support name
        Whether P and Q lie in the support of D.
    params : CurveParams or int

    Returns
    -------
    delta : int

    Raises
    ------
    NoDistanceCaseError
        When no case matches the data and the support.
    """
    q = as_params(params).q
    if isinstance(support_flags, str):
        support_flags = FLAGS_OF_SUPPORT[support_flags]
    d, a, b = c
    deg = d * (q + 1) - a - b
    if tuple(c) == (0, 0, 0) or deg < 0 or d < 0:
        raise ValueError("Invalid divisor argument. Need C != 0, deg C >= 0 and d >= 0, got " + str(tuple(c)))
    p_out = not support_flags.p_in_support
    q_out = not support_flags.q_in_support
    if a <= d and b <= d:
        return deg
    if b <= d <= a and p_out:
        return deg + a - d
    if a <= d <= b and q_out:
        return deg + b - d
    if d <= a <= b and a < q and p_out and q_out:
        return deg + a - d + b - d
    if d <= b <= a and b < q and p_out and q_out:
        return deg + a - d + b - d
    if d <= b and a == q and b == q and (p_out or q_out):
        return deg + q - d
    raise NoDistanceCaseError("No distance case applies to C=" + str(tuple(c)) + " with " + str(support_flags))


BestTwoPoint = collections.namedtuple("BestTwoPoint", ["form", "distance", "case", "evaluation"])


def best_twopoint(deg_G, params):
    """
    Best two-point code for an evaluation divisor of degree deg_G on
    D = R - P - Q.

    The residue side C = dH - aP - qQ has degree q^3 - 1 - deg_G.  The
    evaluation side is C_L(R - P - Q, mP - 2Q) with m = q^3 + 1 - deg C.

    Returns
    -------
    best : BestTwoPoint
        form (CanonicalForm with b = q), distance, case number of the
        distance formula, and evaluation as a dict with the support, the
        divisor (m, -2) and the evaluation-side case.

    Examples
    --------
    >>> best_twopoint(58, 4).distance
    7
    """
    q = as_params(params).q
    deg_C = q**3 - 1 - deg_G
    if deg_C < 0:
        raise ValueError("Invalid degree argument. deg G=" + str(deg_G) + " leaves a residue divisor of negative degree")
    d = -(-(deg_C + q) // (q + 1))
    a = d * (q + 1) - q - deg_C
    c = CanonicalForm(d, a, q)
    if q <= d:
        case, dist = 1, deg_C
    elif a <= d:
        case, dist = 2, deg_C + q - d
    elif a < q:
        case, dist = 3, deg_C + a - d + q - d
    else:
        case, dist = 4, deg_C + q - d
    m = q**3 + 1 - deg_C
    evaluation = {"support": "R-P-Q", "divisor": TwoPointDivisor(m, -2),
                  "case": 2 if d <= a < q else 1}
    return BestTwoPoint(c, dist, case, evaluation)


# ---- labels on the two-point divisor grid ---------------------------------

def edge_label(G, step, params, support="R-P-Q"):
    """
    Coset bound on the edge G -> G + step: 0 on gaps, the coset bound
    otherwise, at least 1.
    """
    params = as_params(params)
    m, n = int(G[0]), int(G[1])
    nxt = (m + 1, n) if step == "P" else (m, n + 1)
    if evaluation_dimension(nxt, support, params) == evaluation_dimension((m, n), support, params):
        return 0
    c = canonicalize((m - params.deg_K, n), params)
    return max(1, base_coset_bound(c, step, params))


class GridLabels(object):
    """
    Edge labels on the rectangle of divisors mP + nQ with
    m0 <= m <= m1, n0 <= n <= n1.

    wP[m - m0, n - n0] labels mP + nQ -> (m+1)P + nQ and wQ the Q-edge;
    edges leaving the window are stored as NEG.
    """

    def __init__(self, m0, m1, n0, n1, wP, wQ):
        self.m0, self.m1, self.n0, self.n1 = m0, m1, n0, n1
        self.wP = wP
        self.wQ = wQ

    @property
    def shape(self):
        return (self.m1 - self.m0 + 1, self.n1 - self.n0 + 1)

    def copy(self):
        return GridLabels(self.m0, self.m1, self.n0, self.n1, self.wP.copy(), self.wQ.copy())

    def label(self, G, step):
        m, n = int(G[0]), int(G[1])
        tgt = (m + 1, n) if step == "P" else (m, n + 1)
        for pt in ((m, n), tgt):
            if not (self.m0 <= pt[0] <= self.m1 and self.n0 <= pt[1] <= self.n1):
                raise WindowTooSmallError("Edge " + str((m, n)) + "->" + str(tgt) + " leaves the window m in [" +
                                          str(self.m0) + ", " + str(self.m1) + "], n in [" + str(self.n0) + ", " + str(self.n1) + "]")
        w = self.wP if step == "P" else self.wQ
        return int(w[m - self.m0, n - self.n0])


def grid_labels(params, m_range, n_range, support="R-P-Q"):
    """Base labels (edge_label) on a window of divisors."""
    params = as_params(params)
    m0, m1 = m_range
    n0, n1 = n_range
    if m1 < m0 or n1 < n0:
        raise WindowTooSmallError("Empty window " + str((m_range, n_range)))
    shape = (m1 - m0 + 1, n1 - n0 + 1)
    wP = full(shape, NEG, dtype=numpy.int64)
    wQ = full(shape, NEG, dtype=numpy.int64)
    for m in range(m0, m1 + 1):
        for n in range(n0, n1 + 1):
            if m < m1:
                wP[m - m0, n - n0] = edge_label((m, n), "P", params, support)
            if n < n1:
                wQ[m - m0, n - n0] = edge_label((m, n), "Q", params, support)
    return GridLabels(m0, m1, n0, n1, wP, wQ)


def _shift(arr, sx, sy):
    #out[u] = arr[u + (sx, sy)], NEG outside
    out = full(arr.shape, NEG, dtype=arr.dtype)
    X, Y = arr.shape
    if sx >= X or sy >= Y:
        return out
    out[:X - sx, :Y - sy] = arr[sx:, sy:]
    return out


def _trailing_box_max(arr, sx, sy):
    #out[u] = max of arr[u - (x, y)] over 0 <= x < sx, 0 <= y < sy
    acc = arr.copy()
    for x in range(1, sx):
        acc[x:, :] = maximum(acc[x:, :], arr[:-x, :])
    out = acc.copy()
    for y in range(1, sy):
        out[:, y:] = maximum(out[:, y:], acc[:, :-y])
    return out


def _path_tables(wPe, wQe, reach):
    #best[(dm, dn)][A]: max over monotone paths A -> A + (dm, dn) of the
    #smallest label on the path, gaps counting as INF
    X, Y = wPe.shape
    rx, ry = reach
    best = {(0, 0): full((X, Y), INF, dtype=numpy.int64)}
    for dm in range(0, rx + 1):
        for dn in range(0, ry + 1):
            if dm == 0 and dn == 0:
                continue
            val = full((X, Y), NEG, dtype=numpy.int64)
            if dm > 0:
                val = maximum(val, minimum(best[(dm - 1, dn)], _shift(wPe, dm - 1, dn)))
            if dn > 0:
                val = maximum(val, minimum(best[(dm, dn - 1)], _shift(wQe, dm, dn - 1)))
            best[(dm, dn)] = val
    return best


def propagate_grid(grid, params=None, reach=None, max_sweeps=1000):
    """
    Raise edge labels by comparing paths between the same two divisors.

    For divisors A <= B in the window, every path from A to B bounds the
    weight of C_Omega(D, A) minus C_Omega(D, B) by its smallest nonzero
    label, so every nonzero edge on any path from A to B may be raised to
    the best path value.  Sweeps repeat until no label changes.

    Parameters
    ----------
    grid : GridLabels
        Base labels, e.g. from `grid_labels`.
    params : unused
        Accepted for a uniform call signature.
    reach : (int, int) or None
        Largest P-span and Q-span of the pairs (A, B) considered; None
        means the whole window.
    max_sweeps : int

    Returns
    -------
    grid : GridLabels
        A new grid with the fixpoint labels.
    """
    out = grid.copy()
    X, Y = out.shape
    if reach is None:
        reach = (X - 1, Y - 1)
    reach = (min(reach[0], X - 1), min(reach[1], Y - 1))
    gapP = out.wP == 0
    gapQ = out.wQ == 0
    liveP = out.wP > 0
    liveQ = out.wQ > 0
    for sweep in range(max_sweeps):
        wPe = numpy.where(gapP, INF, out.wP)
        wQe = numpy.where(gapQ, INF, out.wQ)
        best = _path_tables(wPe, wQe, reach)
        newP = out.wP.copy()
        newQ = out.wQ.copy()
        for (dm, dn), tbl in best.items():
            finite = numpy.where(tbl >= INF, NEG, tbl)
            if dm >= 1:
                newP = maximum(newP, _trailing_box_max(finite, dm, dn + 1))
            if dn >= 1:
                newQ = maximum(newQ, _trailing_box_max(finite, dm + 1, dn))
        newP = numpy.where(liveP, newP, out.wP)
        newQ = numpy.where(liveQ, newQ, out.wQ)
        changed = int((newP != out.wP).sum() + (newQ != out.wQ).sum())
        log.debug("propagation sweep %d raised %d labels", sweep, changed)
        out.wP, out.wQ = newP, newQ
        if changed == 0:
            log.info("propagation reached a fixpoint after %d sweeps", sweep + 1)
            return out
    raise RuntimeError("Propagation did not reach a fixpoint in " + str(max_sweeps) + " sweeps")


# ---- order bound and classical two-point redundancy -----------------------

@functools.lru_cache(maxsize=16)
def _class_tables(params, t_max):
    #per class (degree t, n mod (q+1)) on D = R - P - Q, t in [-1, t_max]:
    #base labels, evaluation dimensions and order bounds
    q = params.q
    R = q + 1
    T = t_max + 2
    wP = zeros((T, R), dtype=numpy.int64)
    wQ = zeros((T, R), dtype=numpy.int64)
    dim = zeros((T, R), dtype=numpy.int64)
    for t in range(-1, t_max + 1):
        for r in range(R):
            G = (t - r, r)
            dim[t + 1, r] = evaluation_dimension(G, "R-P-Q", params)
    for t in range(-1, t_max):
        for r in range(R):
            G = (t - r, r)
            c = canonicalize((G[0] - params.deg_K, G[1]), params)
            if dim[t + 2, r] != dim[t + 1, r]:
                wP[t + 1, r] = max(1, base_coset_bound(c, "P", params))
            if dim[t + 2, (r + 1) % R] != dim[t + 1, r]:
                wQ[t + 1, r] = max(1, base_coset_bound(c, "Q", params))
    ob = zeros((T, R), dtype=numpy.int64)
    goppa = lambda t: t - (2 * params.genus - 2)
    ob[T - 1, :] = goppa(t_max)
    for t in range(t_max - 1, -2, -1):
        for r in range(R):
            val = goppa(t)
            nP = ob[t + 2, r]
            nQ = ob[t + 2, (r + 1) % R]
            val = max(val, nP if wP[t + 1, r] == 0 else min(wP[t + 1, r], nP))
            val = max(val, nQ if wQ[t + 1, r] == 0 else min(wQ[t + 1, r], nQ))
            ob[t + 1, r] = val
    return wP, wQ, dim, ob


def _ob_horizon(t, params):
    return max(t, 0) + params.q**2 + 2 * params.genus + 2


def order_bound_twopoint(G, params):
    """
    Order bound for the minimum distance of C_Omega(R - P - Q, G).

    The largest, over monotone P/Q paths from G, of the smallest nonzero
    coset label on the path, with the Goppa bound deg - (2g - 2) as the
    value at the far end.
    """
    params = as_params(params)
    t = int(G[0]) + int(G[1])
    if t < -1:
        raise ValueError("Invalid divisor argument. Degree must be at least -1, got " + str(t))
    ob = _class_tables(params, _ob_horizon(t, params))[3]
    return int(ob[t + 1, int(G[1]) % (params.q + 1)])


def order_bound_onepoint(m, params):
    """
    Order bound for the minimum distance of C_Omega(R - P, mP): the
    smallest nonzero coset bound at the steps i >= m.
    """
    params = as_params(params)
    tail = 2 * params.deg_K + 2
    shift = 2 * params.genus - 2
    best = INF
    i = max(int(m), -1)
    while i < tail or i - shift < best:
        b = sequence_bound_simple(i, "onepoint", params)
        if b > 0:
            best = min(best, b)
        i += 1
    return best


DistancePrediction = collections.namedtuple("DistancePrediction", ["distance", "exact"])


def _drop_base_points(G, support, params):
    #P never lies in the support; Q only leaves it for R - P - Q
    m, n = int(G[0]), int(G[1])
    level = ell((m, n), params)
    while True:
        if ell((m - 1, n), params) == level:
            m -= 1
        elif support == "R-P-Q" and ell((m, n - 1), params) == level:
            n -= 1
        else:
            return TwoPointDivisor(m, n)


def predicted_distance(G, support, params):
    """
    Predicted minimum distance of C_L(D, G), D = R - P or R - P - Q.

    The base points of L(G) outside D are dropped first, which leaves the
    code unchanged.  The prediction is then the larger of the exact
    distance of the residue form, where a distance case applies, and the
    order bound of the dual divisor.

    Parameters
    ----------
    G : TwoPointDivisor or (m, n)
        n must be 0 on R - P.
    support : 'R-P' or 'R-P-Q'
    params : CurveParams or int

    Returns
    -------
    prediction : DistancePrediction or None
        None for the zero code.  `exact` is set when the full space or a
        distance case gives the value.

    Examples
    --------
    >>> predicted_distance((1, 0), 'R-P', 2)
    DistancePrediction(distance=8, exact=True)
    """
    params = as_params(params)
    k = evaluation_dimension(G, support, params)
    if support == "R-P" and int(G[1]) != 0:
        raise ValueError("Invalid divisor argument. Q lies in the support R - P, got " + str(tuple(G)))
    n = params.q**3 if support == "R-P" else params.q**3 - 1
    if k == 0:
        return None
    if k == n:
        return DistancePrediction(1, True)
    G = _drop_base_points(G, support, params)
    dual = dual_divisor(G, support, params)
    if support == "R-P":
        bound = order_bound_onepoint(dual.m, params)
    else:
        bound = order_bound_twopoint(dual, params)
    try:
        exact = actual_distance_twopoint(residue_form(G, support, params), support, params)
    except ValueError:
        return DistancePrediction(bound, False)
    if exact < bound:
        log.warning("distance case gives %d below the order bound %d for %s on %s", exact, bound, tuple(G), support)
    return DistancePrediction(max(exact, bound), True)


def _round_up(v, step):
    return -(-v // step) * step


@functools.lru_cache(maxsize=16)
def _class_distances(params, t_max):
    #max of the order bound and the exact distance where the latter applies
    q = params.q
    wP, wQ, dim, ob = _class_tables(params, _ob_horizon(t_max, params))
    dist = ob[:t_max + 2].copy()
    for t in range(-1, t_max + 1):
        for r in range(q + 1):
            c = canonicalize((t - r - params.deg_K, r), params)
            if c.d >= 0 and c.degree(q) >= 0 and tuple(c) != (0, 0, 0):
                try:
                    dist[t + 1, r] = max(dist[t + 1, r], actual_distance_twopoint(c, "R-P-Q", params))
                except NoDistanceCaseError:
                    pass
    return dist, dim[:t_max + 2]


def best_classical_twopoint_redundancy(delta, params):
    """
    Least dim C_L(R - P - Q, G) over two-point G whose residue code
    C_Omega(R - P - Q, G) has distance at least delta.
    """
    params = as_params(params)
    n = params.q**3 - 1
    if not 2 <= delta <= n:
        raise ValueError("Invalid delta argument. Need 2 <= delta <= " + str(n) + ", got " + str(delta))
    t_max = _round_up(delta + 2 * params.genus + params.q + 1, 64)
    dist, dim = _class_distances(params, t_max)
    ok = (dist >= delta) & (dim < n)
    if not ok.any():
        raise WindowTooSmallError("No two-point divisor up to degree " + str(t_max) + " reaches distance " + str(delta))
    return int(dim[ok].min())


def redundancy_table(params, deltas):
    """
    Redundancies of the four constructions for each designed distance.

    The difference column is the smallest of the other three columns
    minus the two-point improved redundancy.
    """
    params = as_params(params)
    rows = []
    for delta in deltas:
        c1 = sequence_redundancy(delta, params, "onepoint", "classical", "simple")
        i1 = sequence_redundancy(delta, params, "onepoint", "improved", "simple")
        c2 = best_classical_twopoint_redundancy(delta, params)
        i2 = sequence_redundancy(delta, params, "twopoint", "improved", "improved")
        rows.append(RedundancyRow(delta, c1, i1, c2, i2, min(c1, i1, c2) - i2))
        log.info("q=%d delta=%d: %s", params.q, delta, rows[-1])
    return RedundancyTable(params.q, rows)


ImprovementStats = collections.namedtuple("ImprovementStats", ["deltas", "improving", "ratio", "ratio_bound",
                                                               "interval", "interval_improves"])


def strict_improvement_stats(params):
    """
    Designed distances q < delta <= q^2 where the two-point improved code
    beats both the best classical two-point code and the one-point
    improved code.

    Returns
    -------
    stats : ImprovementStats
        The swept deltas, the improving ones, their share, the lower bound
        1 - (4 sqrt(q-1) + 4)/q, the interval [q, (q-1)(q - 2 sqrt(q-1))]
        and whether every delta in it beats the classical two-point code.

    Raises
    ------
    ArithmeticError
        When the share of improving deltas falls below the lower bound.
    """
    params = as_params(params)
    q = params.q
    if q < 4:
        raise ValueError("Invalid q argument. Need q >= 4, got " + str(q))
    deltas = list(range(q + 1, q * q + 1))
    improving = []
    beats_classical = {}
    for delta in deltas:
        i1 = sequence_redundancy(delta, params, "onepoint", "improved", "simple")
        c2 = best_classical_twopoint_redundancy(delta, params)
        i2 = sequence_redundancy(delta, params, "twopoint", "improved", "improved")
        beats_classical[delta] = i2 < c2
        if i2 < min(i1, c2):
            improving.append(delta)
    ratio = len(improving) / len(deltas)
    bound = 1 - (4 * math.sqrt(q - 1) + 4) / q
    top = int(math.floor((q - 1) * (q - 2 * math.sqrt(q - 1))))
    interval = (q, top)
    inside = [delta for delta in range(max(q, 2), top + 1)]
    for delta in inside:
        if delta not in beats_classical:
            beats_classical[delta] = (sequence_redundancy(delta, params, "twopoint", "improved", "improved") <
                                      best_classical_twopoint_redundancy(delta, params))
    interval_improves = all(beats_classical[delta] for delta in inside)
    log.info("q=%d: %d of %d designed distances improve strictly (ratio %.3f, bound %.3f)",
             q, len(improving), len(deltas), ratio, bound)
    if ratio < bound:
        raise ArithmeticError("Improvement ratio " + str(ratio) + " at q=" + str(q) + " is below the lower bound " + str(bound))
    return ImprovementStats(deltas, improving, ratio, bound, interval, interval_improves)


GoodFamily = collections.namedtuple("GoodFamily", ["delta", "onepoint_gain", "classical_gain", "alpha_gain"])


def goodfamily_check(params):
    """
    For even q at delta = q(q+1)/2: the one-point improved and the best
    classical two-point redundancies minus the two-point improved one,
    and 2 floor(sqrt(q(q-8))/4) (0 for q < 8).
    """
    params = as_params(params)
    q = params.q
    if q % 2:
        raise ValueError("Invalid q argument. The family needs even q, got " + str(q))
    delta = q * (q + 1) // 2
    i1 = sequence_redundancy(delta, params, "onepoint", "improved", "simple")
    c2 = best_classical_twopoint_redundancy(delta, params)
    i2 = sequence_redundancy(delta, params, "twopoint", "improved", "improved")
    alpha = math.isqrt(q * (q - 8)) // 4 if q >= 8 else 0
    return GoodFamily(delta, i1 - i2, c2 - i2, 2 * alpha)


# ---- search over all step sequences ---------------------------------------

SequenceSearch = collections.namedtuple("SequenceSearch", ["minimum", "twopoint_path", "base_minimum"])


def _class_labels_from_grid(grid, params, t_max):
    #largest label over the window's representatives of each class edge
    q = params.q
    R = q + 1
    wP = full((t_max + 2, R), NEG, dtype=numpy.int64)
    wQ = full((t_max + 2, R), NEG, dtype=numpy.int64)
    X, Y = grid.shape
    for x in range(X):
        m = grid.m0 + x
        for y in range(Y):
            n = grid.n0 + y
            t = m + n
            if -1 <= t <= t_max:
                r = n % R
                wP[t + 1, r] = max(wP[t + 1, r], grid.wP[x, y])
                wQ[t + 1, r] = max(wQ[t + 1, r], grid.wQ[x, y])
    return wP, wQ


def _min_path_redundancy(wP, wQ, deltas):
    #cost[t][r][k]: fewest labels in (0, deltas[k]) on a path from degree -1
    T, R = wP.shape
    D = array(deltas, dtype=numpy.int64)
    cost = zeros((R, len(D)), dtype=numpy.int64)
    for t in range(T - 1):
        nxt = full((R, len(D)), INF, dtype=numpy.int64)
        for r in range(R):
            cP = ((wP[t, r] > 0) & (wP[t, r] < D)).astype(numpy.int64)
            cQ = ((wQ[t, r] > 0) & (wQ[t, r] < D)).astype(numpy.int64)
            nxt[r] = minimum(nxt[r], cost[r] + cP)
            nxt[(r + 1) % R] = minimum(nxt[(r + 1) % R], cost[r] + cQ)
        cost = nxt
    return cost.min(axis=0)


def search_sequences(delta_max, params, window=None, reach=None):
    """
    Least improved redundancy over all monotone P/Q step sequences.

    Labels come from `propagate_grid` on a window with rows 0 .. q+1; each
    class of divisors (degree, n mod (q+1)) takes the largest label of its
    representatives.  A dynamic program over the classes from degree -1
    counts the labels in (0, delta) along the best path.

    Parameters
    ----------
    delta_max : int
    params : CurveParams or int
    window : ((m0, m1), (n0, n1)) or None
    reach : passed to `propagate_grid`

    Returns
    -------
    search : SequenceSearch
        minimum and the iP + Q sequence value (class of n = 1, P-steps
        only), per delta in 2 .. delta_max, and the minimum with base
        labels.

    Raises
    ------
    ArithmeticError
        When the iP + Q sequence does not attain the minimum.
    """
    params = as_params(params)
    q = params.q
    t_max = delta_max + 4 * params.genus + 2
    if window is None:
        window = ((-1 - (q + 1), t_max), (0, q + 1))
    (m0, m1), (n0, n1) = window
    if m0 > -1 - n1 or m1 + n0 < t_max:
        raise WindowTooSmallError("Window " + str(window) + " does not cover degrees -1 .. " + str(t_max))
    deltas = list(range(2, delta_max + 1))
    base = grid_labels(params, (m0, m1), (n0, n1))
    prop = propagate_grid(base, params, reach=reach)
    out = []
    for grid in (prop, base):
        wP, wQ = _class_labels_from_grid(grid, params, t_max)
        tailP = wP[-(q + 1):-1]
        if ((tailP > 0) & (tailP < delta_max)).any():
            raise WindowTooSmallError("Labels below " + str(delta_max) + " remain at the far end of the window")
        out.append((wP, wQ, _min_path_redundancy(wP[:-1], wQ[:-1], deltas)))
    wP = out[0][0]
    D = array(deltas)
    counts = zeros(len(D), dtype=numpy.int64)
    for t in range(t_max + 1):
        w = wP[t, 1 % (q + 1)]
        counts += ((w > 0) & (w < D)).astype(numpy.int64)
    minimum_ = dict(zip(deltas, (int(v) for v in out[0][2])))
    base_minimum = dict(zip(deltas, (int(v) for v in out[1][2])))
    twopoint_path = dict(zip(deltas, (int(v) for v in counts)))
    for delta in deltas:
        if minimum_[delta] != base_minimum[delta]:
            log.warning("q=%d delta=%d: propagated labels give %d, base labels give %d",
                        q, delta, minimum_[delta], base_minimum[delta])
        if twopoint_path[delta] != minimum_[delta]:
            raise ArithmeticError("q=" + str(q) + " delta=" + str(delta) + ": the iP + Q sequence needs " +
                                  str(twopoint_path[delta]) + " checks, another sequence needs " + str(minimum_[delta]))
    return SequenceSearch(minimum_, twopoint_path, base_minimum)
