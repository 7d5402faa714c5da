"""Z_n-intersection graphs of ideals of Z_m.

Two nontrivial ideals d1Z_m, d2Z_m are adjacent when d1Z_m*Z_n and d2Z_m*Z_n
meet nontrivially, equivalently when n does not divide lcm(d1, d2).
"""

from idealgraph.arith import Factorization, divisors, factorize, lcm_exponents
from idealgraph.errors import NotAModuleError, OracleLimitError
from idealgraph.families import (
    chi_oracle,
    chi_via_pairing,
    class_size_table,
    closed_form_odd_exponents,
    omega_lower_bound,
    omega_oracle,
    omega_via_families,
)
from idealgraph.graph import (
    IdealGraph,
    ModulePair,
    build_graph,
    build_truncated_z_graph,
    diameter,
    girth,
    graph_stats,
    isolated_vertices,
)
from idealgraph.perfect import find_odd_antihole, find_odd_hole, is_perfect_closed_form, perfectness_report

__all__ = [
    "Factorization",
    "IdealGraph",
    "ModulePair",
    "NotAModuleError",
    "OracleLimitError",
    "build_graph",
    "build_truncated_z_graph",
    "chi_oracle",
    "chi_via_pairing",
    "class_size_table",
    "closed_form_odd_exponents",
    "diameter",
    "divisors",
    "factorize",
    "find_odd_antihole",
    "find_odd_hole",
    "girth",
    "graph_stats",
    "is_perfect_closed_form",
    "isolated_vertices",
    "lcm_exponents",
    "omega_lower_bound",
    "omega_oracle",
    "omega_via_families",
    "perfectness_report",
]
