"""Horn formula toolkit: variable forgetting, common equivalence, minimization.

Every function takes and returns rule text: one clause per line,
``body -> head`` with whitespace-separated variables, ``false`` (or an empty
head) for negative clauses, and an optional ``# alphabet: ...`` header.
"""

import importlib

__all__ = [
    "canonical",
    "ce_witness",
    "classify",
    "common_equivalent",
    "cover_formula",
    "forget",
    "greedy_minimize",
    "min_formula",
    "minimality_report",
    "named_family",
    "newvar",
    "random_horn",
    "size",
    "vc_reduction",
]

try:
    _impl = importlib.import_module("._hornlogic", __name__)
except ImportError:  # in-tree builds put the extension on sys.path directly
    _impl = importlib.import_module("_hornlogic")

globals().update({name: getattr(_impl, name) for name in __all__})
