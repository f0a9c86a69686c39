#! /usr/bin/env python
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

import sys
from pyhermitcodes.cli import main

if __name__ == "__main__":
    sys.exit(main())
