# -*- coding: utf-8 -*-
#
# hodgefl documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

sys.path.insert(0, os.path.abspath('..'))

from hodgefl import __version__ as hodgefl_version

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.todo',
              'sphinx.ext.coverage', 'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'hodgefl'
copyright = u'hodgefl Developers'

version = hodgefl_version
release = hodgefl_version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
html_last_updated_fmt = '%b %d, %Y'
htmlhelp_basename = 'hodgefl-doc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
'papersize': 'a4paper',
}

latex_documents = [
  ('index', 'hodgefl.tex', u'hodgefl Documentation', u'hodgefl Developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'hodgefl', u'hodgefl Documentation', [u'hodgefl Developers'], 1)
]

autoclass_content = 'both'
autodoc_default_flags = ['members', 'show-inheritance']
