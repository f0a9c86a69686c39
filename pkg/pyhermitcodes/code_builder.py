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
Generator and check matrices of Hermitian one-point and two-point codes.

Residue codes C_Omega(D, G) are handled as duals C_L(D, G)^perp of
evaluation codes.  All matrices are `galois` field arrays over the field
returned by `finite_field.field_make`.
"""

from __future__ import annotations, division, print_function
import collections, logging
import numpy
from numpy import array, zeros
from .hermitian_curve import as_params, support_points, TwoPointDivisor
from .riemann_roch import basis_one_point, riemann_roch_basis
from .bound_engine import classical_cutoff, coset_bound_sequence, default_horizon, SUPPORT_OF_KIND, KINDS, MODES

log = logging.getLogger(__name__)

EQUIVALENCE_CASES = ("1", "2", "2'")

SupportSpec = collections.namedtuple("SupportSpec", ["kind", "points"])


class VacuousCodeError(ValueError):
    """The requested designed distance exceeds the code length."""


def support_spec(kind, params):
    """The support R - P (all affine points) or R - P - Q (origin removed)."""
    return SupportSpec(kind, support_points(kind, params))


class LinearCode(object):
    """
    A linear code over GF(q^2) given by a generator and/or a check matrix.

    Parameters
    ----------
    field : FieldSpec
    n : int
    gen, chk : galois field arrays or None
        Whichever is missing is computed as the null space of the other.
    provenance : dict
        Construction record (kind, q, divisor or delta, ...).

    Attributes
    ----------
    k : int
        Dimension, from the rank of the generator matrix.
    """

    def __init__(self, field, n, gen=None, chk=None, provenance=None):
        GF = field.galois_field
        self.field = field
        self.n = int(n)
        self.provenance = dict(provenance or {})
        if gen is None and chk is None:
            raise ValueError("Invalid arguments. A generator or a check matrix is required")
        if gen is not None:
            gen = row_basis(GF(numpy.asarray(gen).reshape(-1, self.n)))
        if chk is not None:
            chk = row_basis(GF(numpy.asarray(chk).reshape(-1, self.n)))
        if gen is None:
            gen = null_space(chk, GF, self.n)
        if chk is None:
            chk = null_space(gen, GF, self.n)
        self.gen = gen
        self.chk = chk
        self.k = gen.shape[0]
        if self.k + chk.shape[0] != self.n:
            raise ValueError("Inconsistent generator and check matrices: k=" + str(self.k) +
                             ", r=" + str(chk.shape[0]) + ", n=" + str(self.n))

    @property
    def GF(self):
        return self.field.galois_field

    @property
    def redundancy(self):
        return self.n - self.k

    def __repr__(self):
        return "LinearCode([%d, %d] over GF(%d), %s)" % (self.n, self.k, self.field.order, self.provenance.get("kind", "?"))

    def contains(self, other):
        """True if the row space of `other` lies in this code."""
        if other.k == 0:
            return True
        return not numpy.any(numpy.asarray(other.gen @ self.chk.T))

    def same_space(self, other):
        return self.n == other.n and self.k == other.k and numpy.array_equal(numpy.asarray(self.gen), numpy.asarray(other.gen))


def row_basis(M):
    """Reduced row echelon form with the zero rows removed."""
    if M.shape[0] == 0:
        return M
    R = M.row_reduce()
    keep = numpy.any(numpy.asarray(R) != 0, axis=1)
    return R[keep]


def null_space(M, GF, n):
    if M.shape[0] == 0:
        return GF.Identity(n)
    N = M.null_space()
    if N.shape[0] == 0:
        return GF.Zeros((0, n))
    return row_basis(N)


def rank(M):
    return row_basis(M).shape[0]


def evaluation_matrix(monomials, support, params, y_twist=0):
    """
    Evaluate monomials at the points of a support.

    Parameters
    ----------
    monomials : list of Monomial
    support : SupportSpec or support name
    params : CurveParams or int
    y_twist : int
        Every monomial is multiplied by y^-y_twist (the literal basis of
        `riemann_roch.riemann_roch_basis`).

    Returns
    -------
    M : galois field array
        Row r, column c is monomial r evaluated at point c.

    Raises
    ------
    ValueError
        A negative power of y is evaluated at a point with y = 0.
    """
    params = as_params(params)
    F = params.require_field()
    GF = F.galois_field
    if isinstance(support, str):
        support = support_spec(support, params)
    pts = array(support.points, dtype=numpy.int64).reshape(-1, 2)
    xs, ys = pts[:, 0], pts[:, 1]
    out = zeros((len(monomials), len(pts)), dtype=numpy.int64)
    for row, mu in enumerate(monomials):
        ex, ey = mu.xy_exponents()
        ey -= y_twist
        if ey < 0 and numpy.any(ys == 0):
            raise ValueError("Invalid support argument. " + str(mu) + " has a pole at a point with y = 0")
        out[row] = F.mul_table[_powers(F, xs, ex), _powers(F, ys, ey)]
    log.debug("evaluated %d monomials at %d points", len(monomials), len(pts))
    return GF(out)


def _powers(F, codes, e):
    if e == 0:
        return numpy.ones_like(codes)
    res = numpy.zeros_like(codes)
    nz = codes != 0
    res[nz] = F.exp_table[(F.log_table[codes[nz]] * e) % (F.order - 1)]
    return res


def code_from_divisor(G, support, params, provenance=None):
    """C_L(D, G) for a two-point divisor G = mP + nQ."""
    params = as_params(params)
    F = params.require_field()
    supp = support_spec(support, params)
    basis, k = riemann_roch_basis(G, params)
    prov = {"kind": "evaluation", "q": params.q, "support": support, "divisor": [int(G[0]), int(G[1])]}
    prov.update(provenance or {})
    if not basis:
        return LinearCode(F, len(supp.points), gen=F.galois_field.Zeros((0, len(supp.points))), provenance=prov)
    code = LinearCode(F, len(supp.points), gen=evaluation_matrix(basis, supp, params, k), provenance=prov)
    log.info("built C_L(%s, %s): [%d, %d]", support, TwoPointDivisor(int(G[0]), int(G[1])), code.n, code.k)
    return code


def classical_code(kind, a, params):
    """
    The classical codes C(a) = C_L(R - P, aP) and C'(a) = C_L(R - P - Q, aP - 2Q).

    Parameters
    ----------
    kind : 'onepoint' or 'twopoint'
    a : int
    params : CurveParams or int

    Returns
    -------
    code : LinearCode

    Examples
    --------
    >>> C = classical_code('onepoint', 59, 4)
    >>> C.n, C.k
    (64, 54)
    """
    params = as_params(params)
    if a < 0:
        raise ValueError("Invalid a argument. a must be nonnegative, got " + str(a))
    if kind == "onepoint":
        F = params.require_field()
        supp = support_spec("R-P", params)
        basis = basis_one_point(a, params)
        gen = evaluation_matrix(basis, supp, params)
        code = LinearCode(F, len(supp.points), gen=gen,
                          provenance={"kind": "onepoint-classical", "q": params.q, "a": a, "divisor": [a, 0], "support": "R-P"})
        log.info("built C(%d): [%d, %d]", a, code.n, code.k)
        return code
    elif kind == "twopoint":
        return code_from_divisor((a, -2), "R-P-Q", params, {"kind": "twopoint-classical", "a": a})
    raise ValueError("Invalid kind argument. Choose one of " + ", ".join(KINDS))


def residue_dual(code):
    """The dual code: generator and check matrices exchanged."""
    prov = dict(code.provenance)
    prov["dual_of"] = code.provenance.get("kind", "code")
    prov["kind"] = "residue"
    return LinearCode(code.field, code.n, gen=code.chk, chk=code.gen, provenance=prov)


def shorten(code, coordinate):
    """
    Words of `code` vanishing at `coordinate`, with that coordinate deleted.
    """
    if not 0 <= coordinate < code.n:
        raise ValueError("Invalid coordinate argument. Need 0 <= coordinate < " + str(code.n) + ", got " + str(coordinate))
    GF = code.GF
    keep = [c for c in range(code.n) if c != coordinate]
    prov = dict(code.provenance)
    prov["shortened_at"] = list(prov.get("shortened_at", [])) + [coordinate]
    if code.k == 0:
        return LinearCode(code.field, code.n - 1, gen=GF.Zeros((0, code.n - 1)), provenance=prov)
    col = code.gen[:, coordinate].reshape(1, -1)
    msgs = null_space(col, GF, code.k) if numpy.any(numpy.asarray(col)) else GF.Identity(code.k)
    if msgs.shape[0] == 0:
        return LinearCode(code.field, code.n - 1, gen=GF.Zeros((0, code.n - 1)), provenance=prov)
    sub = msgs @ code.gen
    return LinearCode(code.field, code.n - 1, gen=sub[:, keep], provenance=prov)


# ---- checks along the two sequences ---------------------------------------

def step_check_monomial(i, kind, params):
    """
    The function whose evaluation is the check added at step i.

    For iP it is the monomial with pole order i + 1; for iP + Q the new
    monomial of the basis of (i+1)P + Q.  Returns (monomial, y_twist), or
    None when step i is a gap.
    """
    params = as_params(params)
    q = params.q
    if kind == "onepoint":
        target = i + 1
        for mu in basis_one_point(target, params):
            if q * mu.i + (q + 1) * mu.j == target:
                return mu, 0
        return None
    elif kind == "twopoint":
        new, k = riemann_roch_basis((i + 1, 1), params)
        old, k_old = riemann_roch_basis((i, 1), params)
        fresh = set(new) - set(old) if k == k_old else set(new)
        if not fresh:
            return None
        return max(fresh, key=lambda mu: q * mu.i + (q + 1) * mu.j), k
    raise ValueError("Invalid kind argument. Choose one of " + ", ".join(KINDS))


def generator_pole_order(i, params):
    """
    Pole order (q^2 - 1)(q + 1) - (i + 1) of the generator monomial for the
    coset at step i of the evaluation-code description.
    """
    q = as_params(params).q
    return (q * q - 1) * (q + 1) - (i + 1)


CheckEntry = collections.namedtuple("CheckEntry", ["step", "monomial", "y_twist", "bound", "kept"])


def check_table(kind, delta, params, method="improved", mode="improved"):
    """
    The classical check set of designed distance delta along a sequence,
    with each check marked kept or removed by the improved construction.

    Returns
    -------
    entries : list of CheckEntry
        One entry per nonzero step before the classical cutoff, plus any
        later step the improved construction keeps.
    """
    params = as_params(params)
    if mode not in MODES:
        raise ValueError("Invalid mode argument. Choose one of " + ", ".join(MODES))
    method = method if kind == "twopoint" else "simple"
    bounds = coset_bound_sequence(params, kind, method, default_horizon(delta, params))
    cut = classical_cutoff(delta, bounds)
    out = []
    for i, b in bounds.items():
        if b <= 0:
            continue
        improved_keep = b < delta
        if i >= cut and not improved_keep:
            continue
        kept = improved_keep if mode == "improved" else i < cut
        found = step_check_monomial(i, kind, params)
        if found is None:
            raise ValueError("Step " + str(i) + " has a positive bound but no check function")
        out.append(CheckEntry(i, found[0], found[1], b, kept))
    return out


def sequence_code(kind, delta, params, method="improved", mode="improved"):
    """
    Classical or Feng-Rao improved code of designed distance delta along
    iP (kind 'onepoint', D = R - P) or iP + Q (kind 'twopoint',
    D = R - P - Q).

    The check matrix holds the evaluations of the step functions of every
    kept check.
    """
    params = as_params(params)
    F = params.require_field()
    support = SUPPORT_OF_KIND[kind]
    supp = support_spec(support, params)
    n = len(supp.points)
    if delta < 2:
        raise ValueError("Invalid delta argument. The designed distance must be at least 2, got " + str(delta))
    if delta > n:
        raise VacuousCodeError("Designed distance " + str(delta) + " exceeds the length " + str(n))
    entries = [e for e in check_table(kind, delta, params, method, mode) if e.kept]
    rows = [evaluation_matrix([e.monomial], supp, params, e.y_twist) for e in entries]
    GF = F.galois_field
    chk = numpy.concatenate([numpy.asarray(r) for r in rows], axis=0) if rows else zeros((0, n), dtype=numpy.int64)
    prov = {"kind": kind + "-" + mode, "q": params.q, "delta": delta, "method": method, "support": support,
            "checks": [e.step for e in entries]}
    code = LinearCode(F, n, chk=GF(chk), provenance=prov)
    if code.redundancy != len(entries):
        log.warning("%d checks are dependent: redundancy %d", len(entries) - code.redundancy, code.redundancy)
    log.info("built %s code of designed distance %d: [%d, %d]", prov["kind"], delta, code.n, code.k)
    return code


def improved_code(kind, delta, params, method="improved"):
    """
    Feng-Rao improved code: checks at the steps with 0 < bound < delta.

    Examples
    --------
    >>> improved_code('onepoint', 5, 4).k
    56
    """
    return sequence_code(kind, delta, params, method, "improved")


# ---- evaluation / residue equivalences -------------------------------------

def equivalence_pair(case, d, a, params):
    """
    Divisors of the evaluation/residue equivalence, as literal divisors with
    H = (q+1)P, K = (q-2)(q+1)P and R = (q^3+1)P.

    Parameters
    ----------
    case : '1', '2' or "2'"
    d, a : int
    params : CurveParams or int

    Returns
    -------
    support, G_star, G
        C_Omega(D, G_star) and C_L(D, G) are the same subspace in all
        three cases, since G_star + G = K + D with D ~ q^3 P on R - P and
        D ~ q^3 P - Q on R - P - Q.
    """
    params = as_params(params)
    q = params.q
    H = q + 1
    K = params.deg_K
    R = q**3 + 1
    if case == "1":
        return "R-P", TwoPointDivisor(K + d * H - a, 0), TwoPointDivisor(R - d * H + a - 1, 0)
    elif case == "2":
        return "R-P-Q", TwoPointDivisor(K + d * H - a, 1), TwoPointDivisor(R - d * H + a - 1, -2)
    elif case == "2'":
        return "R-P-Q", TwoPointDivisor(K + d * H - a, -q), TwoPointDivisor(q**3 - d * H + a, q - 1)
    raise ValueError("Invalid case argument. Choose one of " + ", ".join(EQUIVALENCE_CASES))


def equivalent_codes(case, d, a, params):
    """Both sides of the equivalence: (C_Omega(D, G_star), C_L(D, G))."""
    params = as_params(params)
    support, G_star, G = equivalence_pair(case, d, a, params)
    omega = residue_dual(code_from_divisor(G_star, support, params))
    ev = code_from_divisor(G, support, params)
    return omega, ev
