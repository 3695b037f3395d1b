"""Boolean control network toolkit: DSL front end, matrix compilation,
and controllability/observability analyses over the Boolean semiring."""

from .boolmat import BooleanMatrix, LogicalMatrix
from .compiler import AlgebraicForm, algebraic_form, encode_state, decode_state, structure_matrix
from .netlang import NetworkModel, parse_expr, parse_network
from .observe import observability_verdict, distinguishing_witness
from .reach import (
    SetFamily,
    StateSet,
    controllability_matrix,
    one_step_matrix,
    output_controllability_matrix,
    set_controllability_matrix,
)

__all__ = [
    "AlgebraicForm",
    "BooleanMatrix",
    "LogicalMatrix",
    "NetworkModel",
    "SetFamily",
    "StateSet",
    "algebraic_form",
    "controllability_matrix",
    "decode_state",
    "distinguishing_witness",
    "encode_state",
    "observability_verdict",
    "one_step_matrix",
    "output_controllability_matrix",
    "parse_expr",
    "parse_network",
    "set_controllability_matrix",
    "structure_matrix",
]
