# -*- coding: utf-8 -*-
#
# pyOFG documentation build configuration file

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))
sys.path.insert(0, os.path.abspath('.'))

# get the package version from from the main __init__ file.
for line in open('../../pyOFG/__init__.py'):
    if '__version__' in line:
        package_version = line.split()[-1].strip('\'"')

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.intersphinx',
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'numpydoc',
    'sphinx.ext.autosummary',
]

# numpydoc settings
numpydoc_show_class_members = False

autosummary_generate = True

templates_path = ['templates']

source_suffix = '.rst'

master_doc = 'index'

# General information about the project.
project = u'pyOFG'
copyright = u'pyOFG developers'
author = u'pyOFG developers'

# The short X.Y version.
version = '.'.join(package_version.split('.', 2)[:2])
# The full version, including alpha/beta/rc tags.
release = package_version

language = 'en'

exclude_patterns = []

add_module_names = False

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_sidebars = {
    '**': ['localtoc.html', 'relations.html', 'sourcelink.html',
           'searchbox.html']}

htmlhelp_basename = 'pyOFGdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'pyOFG.tex', u'pyOFG Documentation',
     u'pyOFG developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'pyofg', u'pyOFG Documentation',
     [author], 1)
]

# Example configuration for intersphinx: refer to the Python standard
# library.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'obspy': ('https://docs.obspy.org/', None),
}
