# -*- coding: utf-8 -*-
#
# pyBDT documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.
import sys
import os

sys.path.insert(0, os.path.abspath('../..'))
import pyBDT

# -- General configuration ------------------------------------------------
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'numpydoc',
    'sphinxcontrib.programoutput'
]

autosummary_generate = True
numpydoc_class_members_toctree = True
numpydoc_show_class_members = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyBDT'
copyright = u'2026, the pyBDT developers'
author = u'the pyBDT developers'

release = pyBDT.__version__
version = release

exclude_patterns = ['build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = ['_static']
htmlhelp_basename = 'pybdtdoc'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
    'sympy': ('https://docs.sympy.org/latest/', None)
}
