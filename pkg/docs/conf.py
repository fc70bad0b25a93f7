# Configuration file for the Sphinx documentation builder.

project = 'asmdpp'
copyright = '2026, the asmdpp developers'
author = 'the asmdpp developers'
release = '1.0'

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "enum_tools.autoenum",
    "sphinxcontrib.autodoc_pydantic"
]

# docstrings cross-reference Fraction and the stdlib types only
intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None)
}

exclude_patterns = ['_build']

html_theme = 'sphinx_rtd_theme'

# -- Options for pydantic -------------------------------------------------
autodoc_pydantic_model_show_json = True
autodoc_pydantic_show_field_summary = True
autodoc_pydantic_model_undoc_members = False
autodoc_pydantic_model_show_config_summary = False
