# -*- coding: utf-8 -*-
#
# pyhermitcodes documentation build configuration file

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyhermitcodes'
copyright = u'2024-2026, pyhermitcodes developers'
version = "0.3.0"
release = "0.3.0"

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
htmlhelp_basename = 'pyhermitcodesdoc'

latex_elements = {
}
latex_documents = [
  ('index', 'pyhermitcodes.tex', u'pyhermitcodes Documentation',
   u'pyhermitcodes developers', 'manual'),
]
man_pages = [
    ('index', 'hermitcodes', u'pyhermitcodes Documentation',
     [u'pyhermitcodes developers'], 1)
]
