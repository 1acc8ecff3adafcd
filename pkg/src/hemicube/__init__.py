"""CSS codes on quotients of the Hamming cube by classical linear codes,
with recursive filling decoders and brute-force verification oracles."""

from .csscode import (
    CodeInstance,
    build,
    canonical_cocycle,
    cocycle_S,
    dimension,
    distance_formula,
    is_stabilizer_x,
    is_stabilizer_z,
    logical_basis,
    logical_cycle_np,
    product_cycle,
    standard_face,
)
from .cube import Chain, Face, boundary, coboundary, complement, translate
from .decoder import Correction, Syndrome, decode, guaranteed_radius, verify
from .filler import (
    cube_cofill,
    cube_fill,
    gen_cofill_k2,
    gen_fill_k2,
    hemi_cofill,
    hemi_fill,
    sym_cofill,
    sym_fill,
)
from .quotient import ClassicalCode, QuotientComplex, canonical_rep, enumerate_faces

__all__ = [
    "Chain",
    "ClassicalCode",
    "CodeInstance",
    "Correction",
    "Face",
    "QuotientComplex",
    "Syndrome",
    "boundary",
    "build",
    "canonical_cocycle",
    "canonical_rep",
    "coboundary",
    "cocycle_S",
    "complement",
    "cube_cofill",
    "cube_fill",
    "decode",
    "dimension",
    "distance_formula",
    "enumerate_faces",
    "gen_cofill_k2",
    "gen_fill_k2",
    "guaranteed_radius",
    "hemi_cofill",
    "hemi_fill",
    "is_stabilizer_x",
    "is_stabilizer_z",
    "logical_basis",
    "logical_cycle_np",
    "product_cycle",
    "standard_face",
    "sym_cofill",
    "sym_fill",
    "translate",
    "verify",
]
