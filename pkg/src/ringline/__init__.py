"""Projective lines over small finite commutative rings with unity.

Construct rings from a small expression DSL, compute their ideal structure,
enumerate the projective line with its neighbour/distant relations, and
classify lines by a seven-number profile.  A built-in catalog covers every
line type over rings of order 2 through 31.
"""

from .catalog import CATALOG, CatalogEntry, entries_for_orders
from .dsl import (GF, ParseError, Polynomial, Product, Quotient, RingExpr,
                  SemanticError, Zn, expr_order, parse, render)
from .ideals import (IdealLattice, InternalError, all_ideals, is_local,
                     principal_ideal, residue_field_sizes)
from .line import (CrossCheckError, ProjectiveLine, ProjectivePoint,
                   enumerate_points, is_admissible, is_neighbour,
                   neighbourhood, to_dot, to_edge_csv)
from .profile import (HomogeneityError, LineProfile, group_profiles,
                      jacobson_points, max_distant_set, profile)
from .rings import (BoundError, FiniteRing, NotAUnitError, ValidationError,
                    build, format_tables)

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "CatalogEntry", "entries_for_orders",
    "GF", "ParseError", "Polynomial", "Product", "Quotient", "RingExpr",
    "SemanticError", "Zn", "expr_order", "parse", "render",
    "IdealLattice", "InternalError", "all_ideals", "is_local",
    "principal_ideal", "residue_field_sizes",
    "CrossCheckError", "ProjectiveLine", "ProjectivePoint",
    "enumerate_points", "is_admissible", "is_neighbour", "neighbourhood",
    "to_dot", "to_edge_csv",
    "HomogeneityError", "LineProfile", "group_profiles", "jacobson_points",
    "max_distant_set", "profile",
    "BoundError", "FiniteRing", "NotAUnitError", "ValidationError", "build",
    "format_tables",
]
