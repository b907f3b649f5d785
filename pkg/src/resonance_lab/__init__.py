"""Exact-arithmetic toolkit for degree-one resonance of rank-3 matroids.

Weights live in R^n for a commutative ring R (a field or Z/N); the package
computes their resonance kernels, the combinatorial components indexed by
neighborly graphs, the line geometry of those components (directrices, depth,
carriers), and Schubert-calculus degree predictions, all backed by exhaustive
finite-ring scans.
"""

from .graphs import Graph, from_blocks, is_neighborly, parse_graph
from .linegeom import (DirectrixArrangement, Subspace, carrier_contains,
                       complex_contains, depth, directrices, join, join_sub,
                       meet, plucker_line, span)
from .matroid import Matroid, catalog, catalog_names, from_lines, \
    incidence_matrix, line_of, load_matroid
from .neighborly import (CapExceeded, component_report, decomposition_check,
                         enumerate_neighborly, gamma_of, generic_partner,
                         k_gamma, set_partitions, v1_contains, v1_k_contains,
                         z_gamma)
from .oracle import (fit_forms, regulus_check, scan_component, scan_resonance)
from .osalg import (dlambda_matrix, is_resonant, is_resonant_pair, pair_graph,
                    rank2_partner, wedge_is_zero, z_of)
from .rings import (ExtensionField, IntegersModN, Matrix, PrimeField,
                    Rationals, are_dependent, howell_form, is_parallel,
                    kernel_field, kernel_modn, make_ring, minors2, rank_field,
                    smith_normal_form)
from .schubert import SchubertClass, carrier_degree, pieri, product, special

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "DirectrixArrangement", "ExtensionField", "Graph",
    "IntegersModN", "Matrix", "Matroid", "PrimeField", "Rationals",
    "SchubertClass", "Subspace", "are_dependent", "carrier_contains",
    "carrier_degree", "catalog", "catalog_names", "complex_contains",
    "component_report", "decomposition_check", "depth", "directrices",
    "dlambda_matrix", "enumerate_neighborly", "fit_forms", "from_blocks",
    "from_lines", "gamma_of", "generic_partner", "howell_form",
    "incidence_matrix", "is_neighborly", "is_parallel", "is_resonant",
    "is_resonant_pair", "join", "join_sub", "k_gamma", "kernel_field",
    "kernel_modn", "line_of", "load_matroid", "make_ring", "meet", "minors2",
    "pair_graph", "parse_graph", "pieri", "plucker_line", "product",
    "rank2_partner", "rank_field", "regulus_check", "scan_component",
    "scan_resonance", "set_partitions", "smith_normal_form", "span",
    "special", "v1_contains", "v1_k_contains", "wedge_is_zero", "z_gamma",
    "z_of",
]
