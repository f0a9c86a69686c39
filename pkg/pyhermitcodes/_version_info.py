# -*- coding: utf-8 -*-

pyhermitcodes_version = "0.3.0"
pyhermitcodes_builddate = "17-Oct-2026 10:12"
