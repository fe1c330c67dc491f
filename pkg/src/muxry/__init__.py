"""Gray-ordered synthesis of multiplexed y-rotations into RotY/CNOT circuits."""

from muxry.angle_transform import AngleVector, Basis, phis_from_thetas, thetas_from_phis
from muxry.gray_seq import (
    BitWord,
    LazyOrdering,
    flip_sequence_by_tree,
    flip_sequence_closed_form,
    lazy_ordering,
    validate_lazy,
)
from muxry.synth import (
    Circuit,
    CNot,
    RotY,
    UnsupportedShapeError,
    cancel_adjacent,
    emit_naive,
    emit_optimized,
    emit_term,
    gate_counts,
)

__all__ = [
    "AngleVector",
    "Basis",
    "BitWord",
    "CNot",
    "Circuit",
    "LazyOrdering",
    "RotY",
    "UnsupportedShapeError",
    "cancel_adjacent",
    "emit_naive",
    "emit_optimized",
    "emit_term",
    "flip_sequence_by_tree",
    "flip_sequence_closed_form",
    "gate_counts",
    "lazy_ordering",
    "phis_from_thetas",
    "thetas_from_phis",
    "validate_lazy",
]
