# Exact arithmetic and quaternions
from .core.field import FieldScalar, TAU, SIGMA, SQRT2, SQRT5, SQRT10, field_arith, field_sign, galois_conjugate
from .core.quaternion import Quaternion, OrthogonalAction, qmul, qdot, tilde, apply_action

# Groups and orbits
from .core.binary_groups import QuaternionSet, build_set, verify_group
from .core.weyl import (
    Weight, GroupElement, Subgroup, reflect, generate_group, orbit, stabilizer,
    parabolic, dynkin_flip, scalar_product
)
from .core.representation import (
    weight_to_quaternion, build_w_a4, build_aut_a4, verify_representation, coxeter_element
)

# Projection, duals and meshes
from .core.projection import lambda_sequence, dominant_slices, to_p_coordinates, abg_parameters
from .core.duals import (
    cell_types, incident_cells, dual_scales, dual_polytope, dual_cell_geometry, catalog
)
from .core.mesh import Mesh3D, extract_faces

from .config import PolytopeConfig

__all__ = [
    "FieldScalar", "TAU", "SIGMA", "SQRT2", "SQRT5", "SQRT10",
    "field_arith", "field_sign", "galois_conjugate",
    "Quaternion", "OrthogonalAction", "qmul", "qdot", "tilde", "apply_action",
    "QuaternionSet", "build_set", "verify_group",
    "Weight", "GroupElement", "Subgroup", "reflect", "generate_group", "orbit",
    "stabilizer", "parabolic", "dynkin_flip", "scalar_product",
    "weight_to_quaternion", "build_w_a4", "build_aut_a4", "verify_representation",
    "coxeter_element",
    "lambda_sequence", "dominant_slices", "to_p_coordinates", "abg_parameters",
    "cell_types", "incident_cells", "dual_scales", "dual_polytope", "dual_cell_geometry",
    "catalog",
    "Mesh3D", "extract_faces",
    "PolytopeConfig",
]
