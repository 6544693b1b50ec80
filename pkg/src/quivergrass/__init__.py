"""Combinatorics of cyclic-quiver Grassmannians.

Fixed points, cells, moment graphs, Poincare polynomials, irreducible
components, projections between vertex sets, automorphism dimensions and the
extended-quiver desingularization, each backed by an independent brute-force
oracle.
"""

from .core import (
    Chain,
    InstanceError,
    ParahoricData,
    ShiftRepresentation,
    VerificationError,
    build_ambient,
    chains,
    indec_dim_vector,
    make_parahoric,
)
from .fixedpoints import (
    all_patterns,
    cell_parameter_count,
    energy,
    from_lvector,
    stratum_key,
    strata_partition,
    to_lvector,
    validate_pattern,
)
from .geometry import (
    aut_dim_formula,
    aut_dim_oracle,
    gaussian_binomial,
    irr_components,
    poincare,
    poincare_closure,
)
from .momentgraph import admissible_moves, build_graph, cell_closure, dominance_order, reachability_order
from .projections import commutation_check, image_check, lift_pattern, project_pattern

__version__ = "0.1.0"
