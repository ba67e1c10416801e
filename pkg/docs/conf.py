# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

import os

# -- General configuration ------------------------------------------------

# Do not warn on external images.
suppress_warnings = ['image.nonlocal_uri']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'relaycap'
copyright = u'2026, relaycap developers'
author = u'relaycap developers'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join(os.path.dirname(__file__), '..',
                       'relaycap', 'version.py'),
          'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

release = version
language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Rates and bounds of relay channels with causal state.',
    'show_powered_by': False,
}
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'relaycap_namedoc'

# -- Options for LaTeX and manual pages -----------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'relaycap.tex', u'relaycap Documentation',
     author, 'manual'),
]
man_pages = [
    (master_doc, 'relaycap', u'relaycap Documentation', [author], 1)
]
texinfo_documents = [
    (master_doc, 'relaycap', u'relaycap Documentation', author, 'relaycap',
     'Rates and bounds of relay channels with causal state.',
     'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

autoclass_content = 'both'
