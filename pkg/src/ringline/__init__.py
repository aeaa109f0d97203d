"""ringline: exact commutation algebra of a single-qudit shift/clock operator
group, computed through the geometry of the projective line over Z_d.

The library is pure stdlib and exact everywhere: ring elements are ints mod d,
operators are exponent triples, and the independent operator model is a
generalized permutation matrix whose entries are roots of unity encoded by
exponent.  All values are immutable; every operation is a pure function, safe
to call from any number of concurrent workers.
"""

from .oracle import (
    CheckResult,
    VerificationReport,
    construct_witness,
    verify_all,
    verify_group,
    verify_theorem1,
    verify_theorem2,
    verify_witness_construction,
)
from .pauli import (
    IDENTITY,
    X,
    Z,
    GenPermMatrix,
    PauliOp,
    centre,
    commutator,
    commutes,
    commuting_count,
    format_pauli,
    group_closure_order,
    inverse,
    multiply,
    to_matrix,
)
from .projline import (
    NeighbourGraph,
    Point,
    cyclic_submodule,
    enumerate_points,
    index_set_K,
    is_admissible,
    is_distant,
    line_size_formula,
    neighbour_graph,
    perp_as_point_union,
    perp_size_formula,
    point_count_formula,
    point_through,
    points_containing,
)
from .ring import Modulus, component, invert, is_unit, make_modulus, unit_count
from .symplectic import PerpSet, Vector2, form, is_perp, perp_set

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "GenPermMatrix",
    "IDENTITY",
    "Modulus",
    "NeighbourGraph",
    "PauliOp",
    "PerpSet",
    "Point",
    "VerificationReport",
    "Vector2",
    "X",
    "Z",
    "centre",
    "commutator",
    "commutes",
    "commuting_count",
    "component",
    "construct_witness",
    "cyclic_submodule",
    "enumerate_points",
    "form",
    "format_pauli",
    "group_closure_order",
    "index_set_K",
    "invert",
    "inverse",
    "is_admissible",
    "is_distant",
    "is_perp",
    "is_unit",
    "line_size_formula",
    "make_modulus",
    "multiply",
    "neighbour_graph",
    "perp_as_point_union",
    "perp_set",
    "perp_size_formula",
    "point_count_formula",
    "point_through",
    "points_containing",
    "to_matrix",
    "unit_count",
    "verify_all",
    "verify_group",
    "verify_theorem1",
    "verify_theorem2",
    "verify_witness_construction",
]
