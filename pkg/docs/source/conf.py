# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html
from datetime import datetime
from typing import List

from pkg_resources import get_distribution

# -- Project information -----------------------------------------------------

project = "PyCatalanC"
copyright = "2026, PyCatalanC developers"
author = "PyCatalanC developers"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "myst_nb",
    "sphinx.ext.mathjax",
    "sphinx_math_dollar",
]

templates_path = ["_templates"]
exclude_patterns: List[str] = []

# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"
html_static_path: List[str] = []

myst_enable_extensions = ["colon_fence", "dollarmath", "amsmath", "substitution"]

myst_substitutions = {
    "version": get_distribution("pycatalanc").version,
    "date": datetime.now().strftime("%Y-%m-%d"),
}

autodoc_typehints = "description"

numfig = True
