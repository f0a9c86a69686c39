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
Table and matrix serialization: CSV with '#' provenance lines, JSON with a
provenance header, and aligned plain-text tables.
"""

from __future__ import division, print_function
import collections, csv, io, json, os
import numpy
from ._version_info import pyhermitcodes_version

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "schemas")


def provenance_header(command, parameters=None):
    head = collections.OrderedDict()
    head["program"] = "pyhermitcodes"
    head["version"] = pyhermitcodes_version
    head["command"] = command
    if parameters is not None:
        head["parameters"] = parameters
    return head


def to_json(payload, command, parameters=None):
    doc = provenance_header(command, parameters)
    doc.update(payload)
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def to_csv(header, rows, comments=(), delimiter=","):
    """
    CSV text with LF line endings.  Comment lines and the column header are
    prefixed with '# ' so that numpy.loadtxt reads the body directly.
    """
    buf = io.StringIO()
    for line in comments:
        buf.write("# " + line + "\n")
    buf.write("# " + delimiter.join(header) + "\n")
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def to_text(header, rows):
    """Right-aligned plain-text table."""
    cells = [list(header)] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(header))]
    lines = []
    for n, r in enumerate(cells):
        lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    return str(v)


def matrix_rows(M):
    """Integer codes of a matrix over GF(q^2), row by row."""
    return [[int(v) for v in row] for row in numpy.asarray(M)]


def write_text(path, text):
    fOut = io.open(path, "w", encoding="utf-8", newline="\n")
    fOut.write(text)
    fOut.close()


def load_schema(name):
    fIn = io.open(os.path.join(SCHEMA_DIR, name + ".schema.json"), "r", encoding="utf-8")
    schema = json.load(fIn)
    fIn.close()
    return schema
