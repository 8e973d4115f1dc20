"""Exact tools for minimal faithful representations and Jordan constants.

Three strands, all in exact arithmetic:

* root-system combinatorics for the simple types: Weyl dimensions,
  centers of the simply connected groups, and the minimal total
  dimension of a faithful completely reducible representation;
* closed bound formulas for Jordan constants of Lie groups, algebraic
  groups, and isometry/automorphism groups, kept symbolic where the
  underlying constant is not pinned down;
* brute-force Jordan constants of explicit finite groups given by
  Cayley tables or permutation generators.
"""
from .bounds import (BoundExpr, ExactInt, GroupDims, Power, Product,
                     SymbolicJ, bound_algebraic, bound_compact_complex,
                     bound_hyperbolic, bound_lie, bound_lie_connected,
                     bound_riemannian, consistency_check_bounds,
                     expr_from_json, expr_to_json, jordan_gl,
                     stabilizer_bound_hyperbolic)
from .center import (CenterClass, WeightSet, center_classes, center_order,
                     is_faithful, pair)
from .errors import OrderLimitError, RankBudgetError, ResourceGuardError
from .finitegroup import (FiniteGroup, Subgroup, all_subgroups,
                          boundedness_constant, jordan_constant,
                          jordan_constant_with_witness,
                          min_normal_abelian_index, parse_group,
                          subgroup_group)
from .minfaithful import RdimResult, rdim, rdim_table, verify_dimension_cap
from .rootdata import (DominantWeight, RootDatum, SimpleType,
                       build_root_datum, cartan_matrix,
                       enumerate_dominant_weights, max_rank,
                       positive_root_count, weyl_dim)

__all__ = [
    "BoundExpr", "CenterClass", "DominantWeight", "ExactInt", "FiniteGroup",
    "GroupDims", "OrderLimitError", "Power", "Product", "RankBudgetError",
    "RdimResult", "ResourceGuardError", "RootDatum", "SimpleType",
    "Subgroup", "SymbolicJ", "WeightSet", "all_subgroups",
    "bound_algebraic", "bound_compact_complex", "bound_hyperbolic",
    "bound_lie", "bound_lie_connected", "bound_riemannian",
    "boundedness_constant", "build_root_datum", "cartan_matrix",
    "center_classes", "center_order", "consistency_check_bounds",
    "enumerate_dominant_weights", "expr_from_json", "expr_to_json",
    "is_faithful", "jordan_constant", "jordan_constant_with_witness",
    "jordan_gl", "max_rank", "min_normal_abelian_index", "parse_group",
    "positive_root_count", "rdim", "rdim_table",
    "stabilizer_bound_hyperbolic", "subgroup_group", "verify_dimension_cap",
    "weyl_dim",
]
