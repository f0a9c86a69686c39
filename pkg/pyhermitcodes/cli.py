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
Command-line interface.

Subcommands: coset-bounds, redundancy, build, verify, improvement-stats.
Tables go to stdout (or --output), log messages to stderr.  Exit codes:
0 ok, 1 internal error or failed verification, 2 usage, 3 budget.
"""

from __future__ import division, print_function
import argparse, collections, logging, os, sys, time
import galois
from ._version_info import pyhermitcodes_version
from .global_parameters import init_prm, delta_range, EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_BUDGET
from .finite_field import SUPPORTED_Q
from .hermitian_curve import curve_params, sequence_decompose, divisor_string
from .bound_engine import (coset_bound_sequence, redundancy_table, strict_improvement_stats, goodfamily_check,
                           predicted_distance, KINDS, METHODS, SUPPORT_OF_KIND)
from .code_builder import classical_code, sequence_code, check_table
from .riemann_roch import basis_one_point, riemann_roch_basis
from .oracle import BudgetExceededError, min_weight_exhaustive, weight_distribution_via_dual
from .utility_functions import to_json, to_csv, to_text, matrix_rows, write_text

log = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class UsageError(ValueError):
    """Flag values that parse but make no sense together."""


class RunReport(object):
    """
    Record of a verification run: parameters, outputs and one verdict per
    checked claim.
    """

    def __init__(self, command, parameters):
        self.command = command
        self.parameters = parameters
        self.outputs = collections.OrderedDict()
        self.verdicts = []
        self.seconds = None
        self._t0 = time.perf_counter()

    def claim(self, claim, expected, observed, passed):
        self.verdicts.append(collections.OrderedDict([("claim", claim), ("expected", expected),
                                                      ("observed", observed), ("passed", bool(passed))]))
        log.info("%s: expected %s, observed %s -> %s", claim, expected, observed, "pass" if passed else "FAIL")

    @property
    def passed(self):
        return all(v["passed"] for v in self.verdicts)

    def finish(self):
        self.seconds = time.perf_counter() - self._t0
        log.info("%s finished in %.3f s", self.command, self.seconds)

    def to_dict(self):
        return collections.OrderedDict([("outputs", self.outputs), ("verdicts", self.verdicts),
                                        ("passed", self.passed)])


# ---- argument handling -----------------------------------------------------

def _bound_params(q):
    #table commands only need the formulas, so any prime power works
    if not galois.is_prime_power(q):
        raise UsageError("Invalid --q argument. q must be a prime power, got " + str(q))
    return curve_params(q)


def _field_params(q):
    if q not in SUPPORTED_Q:
        raise UsageError("Invalid --q argument. Codes can be built for q in " +
                         ", ".join(str(v) for v in SUPPORTED_Q) + ", got " + str(q))
    return curve_params(q)


def _split_construction(construction):
    kind, mode = construction.split("-")
    return kind, mode


def _emit(args, text):
    if args.output:
        write_text(args.output, text)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)


def _command_line(args):
    return "hermitcodes.py " + " ".join(args.argv)


# ---- subcommands -----------------------------------------------------------

def cmd_coset_bounds(args, prm):
    params = _bound_params(args.q)
    if args.i_max is not None and args.i_max < -1:
        raise UsageError("Invalid --i-max argument. Need i_max >= -1, got " + str(args.i_max))
    bounds = coset_bound_sequence(params, args.kind, args.method, args.i_max)
    rows = []
    for i, b in bounds.items():
        d, a = sequence_decompose(i, params)
        rows.append((i, d, a, b))
    header = ("i", "d", "a", "bound")
    parameters = collections.OrderedDict([("q", args.q), ("kind", args.kind), ("method", args.method),
                                          ("i_max", bounds.i_max)])
    fmt = args.format or prm["pref"]["output_format"]
    if fmt == "json":
        payload = collections.OrderedDict([("q", args.q), ("kind", args.kind), ("method", args.method),
                                           ("rows", [collections.OrderedDict(zip(header, r)) for r in rows])])
        _emit(args, to_json(payload, "coset-bounds", parameters))
    elif fmt == "csv":
        _emit(args, to_csv(header, rows, ["pyhermitcodes coset-bounds q=%d kind=%s method=%s" % (args.q, args.kind, args.method)],
                           prm["pref"]["csv_delimiter"]))
    else:
        _emit(args, to_text(header, rows))
    return EXIT_OK


def cmd_redundancy(args, prm):
    params = _bound_params(args.q)
    first, last, step = delta_range(prm, args.q)
    lo = args.delta_min if args.delta_min is not None else first
    hi = args.delta_max if args.delta_max is not None else last
    step = args.delta_step if args.delta_step is not None else step
    if lo < 2 or hi < lo or step < 1 or hi > args.q**3 - 1:
        raise UsageError("Invalid designed distance range " + str((lo, hi, step)) + " for q=" + str(args.q))
    table = redundancy_table(params, range(lo, hi + 1, step))
    header = ("delta", "onepoint_classical", "onepoint_improved", "twopoint_classical", "twopoint_improved", "diff")
    rows = [tuple(row) for row in table]
    parameters = collections.OrderedDict([("q", args.q), ("delta_min", lo), ("delta_max", hi), ("delta_step", step)])
    fmt = args.format or prm["pref"]["output_format"]
    if fmt == "json":
        payload = collections.OrderedDict([("q", args.q), ("rows", [row._asdict() for row in table])])
        _emit(args, to_json(payload, "redundancy", parameters))
    elif fmt == "csv":
        _emit(args, to_csv(header, rows, ["pyhermitcodes redundancy q=%d" % args.q], prm["pref"]["csv_delimiter"]))
    else:
        _emit(args, to_text(header, rows))
    return EXIT_OK


def _construct(args, params):
    kind, mode = _split_construction(args.construction)
    if mode == "classical":
        if args.a is None:
            raise UsageError("Construction " + args.construction + " needs --a")
        return classical_code(kind, args.a, params)
    if args.delta is None:
        raise UsageError("Construction " + args.construction + " needs --delta")
    return sequence_code(kind, args.delta, params, "improved", mode)


def _check_listing(args, params):
    #the diagram of checks with the removed ones marked
    kind, mode = _split_construction(args.construction)
    if mode == "classical":
        G = (args.a, 0) if kind == "onepoint" else (args.a, -2)
        if kind == "onepoint":
            basis, twist = basis_one_point(args.a, params), 0
        else:
            basis, twist = riemann_roch_basis(G, params)
        return collections.OrderedDict([("divisor", divisor_string(*G)), ("y_twist", twist),
                                        ("generator_monomials", [str(mu) for mu in basis])])
    entries = check_table(kind, args.delta, params, "improved", "improved")
    return collections.OrderedDict([
        ("classical_checks", len(entries)),
        ("kept_checks", sum(1 for e in entries if e.kept)),
        ("checks", [collections.OrderedDict([("step", e.step), ("monomial", str(e.monomial)), ("y_twist", e.y_twist),
                                             ("bound", e.bound), ("kept", e.kept)]) for e in entries])])


def cmd_build(args, prm):
    params = _field_params(args.q)
    code = _construct(args, params)
    if code.k == 0:
        log.warning("%s: the Riemann-Roch space is zero, so the code is {0}", args.construction)
    listing = _check_listing(args, params)
    prefix = os.path.join(args.out, "q%d_%s_%s" % (args.q, args.construction,
                                                   ("a%d" % args.a) if args.a is not None else ("delta%d" % args.delta)))
    if not os.path.exists(args.out):
        os.makedirs(args.out)
    comments = ["pyhermitcodes %s" % pyhermitcodes_version, _command_line(args),
                "[n, k] = [%d, %d]" % (code.n, code.k)]
    write_text(prefix + "_check.csv", to_csv(["c%d" % c for c in range(code.n)], matrix_rows(code.chk), comments,
                                             prm["pref"]["csv_delimiter"]))
    payload = collections.OrderedDict([("provenance", code.provenance), ("n", code.n), ("k", code.k)])
    payload.update(listing)
    write_text(prefix + "_checks.json", to_json(payload, "build", collections.OrderedDict([("q", args.q), ("construction", args.construction)])))
    print("%s: [%d, %d] check matrix written to %s_check.csv" % (args.construction, code.n, code.k, prefix))
    return EXIT_OK


def _classical_prediction(args, params):
    kind, mode = _split_construction(args.construction)
    G = (args.a, 0) if kind == "onepoint" else (args.a, -2)
    return predicted_distance(G, SUPPORT_OF_KIND[kind], params)


def cmd_verify(args, prm):
    params = _field_params(args.q)
    budget = args.budget if args.budget is not None else prm["pref"]["budget"]
    workers = args.workers if args.workers is not None else prm["pref"]["workers"]
    parameters = collections.OrderedDict([("q", args.q), ("construction", args.construction), ("a", args.a),
                                          ("delta", args.delta), ("oracle", args.oracle), ("budget", budget)])
    log.info("verifying with %d worker processes", workers)
    report = RunReport("verify", parameters)
    code = _construct(args, params)
    report.outputs["n"] = code.n
    report.outputs["k"] = code.k
    report.outputs["provenance"] = code.provenance
    if code.k == 0:
        report.claim("zero code has no nonzero words", "inf", "inf", True)
    else:
        if args.oracle == "exhaustive":
            d = min_weight_exhaustive(code, budget, workers)
        else:
            d = weight_distribution_via_dual(code, budget, workers).min_distance
        report.outputs["min_distance"] = d
        kind, mode = _split_construction(args.construction)
        if mode == "classical":
            pred = _classical_prediction(args, params)
            if pred.exact:
                report.claim("distance equals the predicted distance", pred.distance, d, d == pred.distance)
            else:
                report.claim("distance is at least the order bound", pred.distance, d, d >= pred.distance)
        else:
            report.claim("distance is at least the designed distance", args.delta, d, d >= args.delta)
    report.finish()
    _emit(args, to_json(report.to_dict(), "verify", parameters))
    return EXIT_OK if report.passed else EXIT_INTERNAL


def cmd_improvement_stats(args, prm):
    params = _bound_params(args.q)
    stats = strict_improvement_stats(params)
    payload = collections.OrderedDict([("q", args.q), ("improvement", stats._asdict())])
    if args.q % 2 == 0:
        payload["good_family"] = goodfamily_check(params)._asdict()
    else:
        payload["good_family"] = None
    _emit(args, to_json(payload, "improvement-stats", collections.OrderedDict([("q", args.q)])))
    return EXIT_OK


COMMANDS = {"coset-bounds": cmd_coset_bounds, "redundancy": cmd_redundancy, "build": cmd_build,
            "verify": cmd_verify, "improvement-stats": cmd_improvement_stats}


def build_parser(prm):
    parser = argparse.ArgumentParser(prog="hermitcodes.py",
                                     description="Improved two-point codes on Hermitian curves")
    parser.add_argument("--version", action="version", version="%(prog)s " + pyhermitcodes_version)
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("coset-bounds", help="coset bounds along iP or iP + Q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="twopoint")
    p.add_argument("--method", choices=METHODS, default="simple")
    p.add_argument("--i-max", type=int, default=None)
    p.add_argument("--format", choices=prm['data']['available_formats'], default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("redundancy", help="optimal redundancy for given designed distance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta-min", type=int, default=None)
    p.add_argument("--delta-max", type=int, default=None)
    p.add_argument("--delta-step", type=int, default=None)
    p.add_argument("--format", choices=prm['data']['available_formats'], default=None)
    p.add_argument("--output", default=None)

    for name, hlp in (("build", "write the check matrix and check listing"),
                      ("verify", "check a code's distance with an exhaustive oracle")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--construction", choices=prm['data']['available_constructions'], required=True)
        p.add_argument("--delta", type=int, default=None)
        p.add_argument("--a", type=int, default=None)
        if name == "build":
            p.add_argument("--out", default=".")
        else:
            p.add_argument("--oracle", choices=prm['data']['available_oracles'], default="exhaustive")
            p.add_argument("--budget", type=int, default=None)
            p.add_argument("--workers", type=int, default=None)
            p.add_argument("--output", default=None)

    p = sub.add_parser("improvement-stats", help="designed distances where the two-point improved code wins")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--output", default=None)
    return parser


def main(argv=None, pref_dir=None):
    if argv is None:
        argv = sys.argv[1:]
    prm = init_prm(pref_dir)
    parser = build_parser(prm)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    args.argv = list(argv)
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT,
                        level=getattr(logging, args.log_level or prm["pref"]["log_level"]))
    try:
        return COMMANDS[args.command](args, prm)
    except BudgetExceededError as e:
        print("budget exceeded: %d vectors needed, budget is %d; rerun with --budget %d" %
              (e.required, e.budget, e.required), file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        #UsageError, VacuousCodeError and argument checks of the library
        print("hermitcodes.py: error: " + str(e), file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        log.error("unexpected failure: %s", e, exc_info=True)
        return EXIT_INTERNAL
