"""Exact construction and verification of Concrete Billiard Arrays of
polynomial type, and their relation to Leonard systems."""

from .field import QQ, FieldSpec, Scalar, scalar_arith, scalar_parse
from .leonard import (
    LeonardSystem,
    QRacahParams,
    SplitDecomposition,
    border_correspondence,
    downarrow,
    qracah_eigenvalues,
    qracah_value,
    split_decomposition,
    verify_leonard_system,
)
from .linalg import EigStructure, Matrix, Vector, poly_apply, primitive_idempotents, rank
from .polycba import (
    EdgeLabeling,
    PolyCBA,
    ValueFunction,
    black_clique_relation_check,
    bottom_border_check,
    build_poly_cba,
    closed_form_value,
    edge_labels,
    value_function,
    verify_cba,
)
from .simplex import Location, black_cliques, locations, maximal_lines, white_cliques

__version__ = "0.1.0"
