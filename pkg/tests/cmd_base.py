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

import os, shutil, tempfile, unittest
import numpy as np
from pyhermitcodes.global_parameters import init_prm

#slow oracle checks run when HERMIT_EXTENDED is set or the saved
#preferences turn on extended_checks
EXTENDED = init_prm(os.environ.get("HERMIT_PREF_DIR"))["pref"]["extended_checks"]


def arraycmp(fout, fref):
    dataout = np.loadtxt(fout, delimiter=",", ndmin=2, dtype=np.int64)
    dataref = np.loadtxt(fref, delimiter=",", ndmin=2, dtype=np.int64)
    return dataout.shape == dataref.shape and np.array_equal(dataout, dataref)


class BaseTestCmd(unittest.TestCase):
    # require attribute:
    #
    #   fdata = {
    #       'onepoint': (['coset-bounds', '--q', '4', ...], 'coset_bounds_q4_onepoint_simple.csv'),
    #   }
    #
    # each command is run with '--output <work dir>/<reference name>'
    fdata = {}

    @classmethod
    def setUpClass(cls):
        cls.original_cwd = os.getcwd()
        cls.golden_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")
        cls.work_dir = tempfile.mkdtemp(prefix="hermitcodes-")
        cls.pref_dir = os.path.join(cls.work_dir, "config")
        os.chdir(cls.work_dir)
        return super().setUpClass()

    @classmethod
    def tearDownClass(cls):
        os.chdir(cls.original_cwd)
        shutil.rmtree(cls.work_dir, ignore_errors=True)
        return super().tearDownClass()

    def run_cmd(self, argv):
        from pyhermitcodes.cli import main
        return main(list(argv), pref_dir=self.pref_dir)

    def fcomp(self, key):
        argv, fref = self.fdata[key]
        fout = os.path.join(self.work_dir, fref)
        if os.path.exists(fout):
            os.remove(fout)
        status = self.run_cmd(list(argv) + ["--format", "csv", "--output", fout])
        self.assertEqual(status, 0)
        return arraycmp(fout, os.path.join(self.golden_dir, fref))
