"""Hesitant fuzzy soft beta-covering approximation spaces.

Thin wrapper over the compiled core.  Degrees travel as strings
("0.35", "1") so nothing is lost to binary floating point; hesitant
fuzzy sets are dicts mapping object names to descending degree lists.
"""

try:
    from ._core import (  # installed layout: extension lives in the package
        HfsError,
        Space,
        element_complement,
        element_intersect,
        element_mean,
        element_union,
        includes,
        run_fixtures,
        run_laws,
    )
except ImportError:  # build-tree layout: extension sits on PYTHONPATH
    from _core import (
        HfsError,
        Space,
        element_complement,
        element_intersect,
        element_mean,
        element_union,
        includes,
        run_fixtures,
        run_laws,
    )

__all__ = [
    "HfsError",
    "Space",
    "element_complement",
    "element_intersect",
    "element_mean",
    "element_union",
    "includes",
    "run_fixtures",
    "run_laws",
]
