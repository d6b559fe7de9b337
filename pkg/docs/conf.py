# -*- coding: utf-8 -*-
#
# Sphinx configuration for discrete_wigner.
import os
import sys

sys.path.insert(0, os.path.abspath("../src"))

project = u"discrete_wigner"
copyright = u"2024, discrete_wigner developers"  # pylint: disable=redefined-builtin
author = u"discrete_wigner developers"
version = u"1.0"
release = u"1.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]
autodoc_member_order = "bysource"

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = [u"_build", "Thumbs.db", ".DS_Store"]

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
htmlhelp_basename = "discrete_wignerdoc"

latex_documents = [
    (
        master_doc,
        "discrete_wigner.tex",
        u"discrete\\_wigner Documentation",
        u"discrete_wigner developers",
        "manual",
    ),
]
man_pages = [(master_doc, "discrete_wigner", u"discrete_wigner Documentation", [author], 1)]
