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

from __future__ import division, print_function
import logging, os, pickle
from .finite_field import SUPPORTED_Q
from .bound_engine import KINDS, METHODS

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def global_parameters(prm):
    prm['data']['available_q'] = list(SUPPORTED_Q)
    prm['data']['available_kinds'] = list(KINDS)
    prm['data']['available_methods'] = list(METHODS)
    prm['data']['available_constructions'] = ['onepoint-classical', 'onepoint-improved',
                                              'twopoint-classical', 'twopoint-improved']
    prm['data']['available_oracles'] = ['exhaustive', 'macwilliams']
    prm['data']['available_formats'] = ['json', 'csv', 'text']
    prm['data']['exit_codes'] = {'ok': EXIT_OK, 'internal': EXIT_INTERNAL, 'usage': EXIT_USAGE, 'budget': EXIT_BUDGET}
    #designed distances displayed per curve
    prm['data']['delta_ranges'] = {}
    for q in SUPPORTED_Q:
        prm['data']['delta_ranges'][q] = (2, q * q, 1)
    prm['data']['delta_ranges'][4] = (3, 11, 1)
    prm['data']['delta_ranges'][8] = (5, 31, 2)

    return prm


def delta_range(prm, q):
    """Default (first, last, step) of the designed-distance sweep for q."""
    if q in prm['data']['delta_ranges']:
        return prm['data']['delta_ranges'][q]
    return (2, q * q, 1)


def def_prefs(prm):
    prm["pref"] = {}
    #enumeration
    prm["pref"]["budget"] = 10**7
    prm["pref"]["workers"] = 1
    prm["pref"]["extended_checks"] = False
    #output
    prm["pref"]["output_format"] = "json"
    prm["pref"]["csv_delimiter"] = ","
    prm["pref"]["log_level"] = "WARNING"

    return prm


def get_prefs(prm, pref_dir=None):
    prm = def_prefs(prm)
    if pref_dir is None:
        pref_dir = os.path.join(os.path.expanduser("~"), '.config', 'pyhermitcodes')
    prm['prefFile'] = os.path.join(pref_dir, 'preferences')

    if os.path.exists(pref_dir) == False:
        os.makedirs(pref_dir)
    if os.path.exists(prm['prefFile']):
        fIn = open(prm['prefFile'], 'rb')
        prm['tmp'] = pickle.load(fIn)
        fIn.close()
        for k in prm['pref'].keys():
            if k in prm['tmp']:
                prm['pref'][k] = prm['tmp'][k]

    env_budget = os.environ.get("HERMIT_BUDGET")
    if env_budget is not None:
        try:
            prm["pref"]["budget"] = int(env_budget)
        except ValueError:
            log.warning("ignoring HERMIT_BUDGET=%r: not a decimal integer", env_budget)
    if os.environ.get("HERMIT_EXTENDED"):
        prm["pref"]["extended_checks"] = True
    return prm


def save_prefs(prm):
    fOut = open(prm['prefFile'], 'wb')
    pickle.dump(prm['pref'], fOut)
    fOut.close()


def init_prm(pref_dir=None):
    prm = {'data': {}}
    prm = get_prefs(prm, pref_dir)
    prm = global_parameters(prm)
    return prm
