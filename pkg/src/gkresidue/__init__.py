"""Exact residue-formula computations for sparse Laurent systems.

For n Laurent polynomials in n variables whose Newton polytopes are in
generic relative position, the sum of any Laurent polynomial over the
common zeros in the torus is a signed sum of residues at the vertices of
the Minkowski sum of the Newton polytopes. This package computes the
ingredients (combinatorial coefficients, vertex residues) exactly and
derives solution counts, mixed volumes and univariate eliminants.
"""

from .coefficients import admissible_flags, coefficient_table, combinatorial_coefficient, flag_sign
from .engine import (
    EliminantPoly,
    SystemInstance,
    count_solutions,
    eliminant,
    mixed_volume,
    newton_to_elementary,
    power_sums,
    solution_sum,
)
from .errors import (
    ConsistencyError,
    DegenerateSum,
    GKError,
    NoFlags,
    NotCritical,
    NotGeneric,
    NotPointed,
    NotVertex,
    ParseError,
    ZeroPolynomial,
)
from .geometry import (
    LatticePolytope,
    SumComplex,
    critical_vertices,
    extreme_points,
    is_generic_position,
    is_locked,
    minkowski_sum,
    newton_polytope,
    support_face,
)
from .laurent import (
    LaurentPoly,
    expansion_coefficient,
    jacobian,
    laurent_expansion,
    partial_derivative,
    positive_functional,
    residue_at_vertex,
)
from .oracle import KnownSystem, make_known_system, mixed_volume_oracle, volume

__version__ = "0.1.0"
