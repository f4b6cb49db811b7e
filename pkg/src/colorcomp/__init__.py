"""Counting, enumerating and bijectively mapping (an+b)-color compositions."""

from .bijection import phi, phi_zero_a, psi, psi_zero_a, to_colored, to_domino
from .core import (
    ColorLaw,
    ColoredComposition,
    ColoredPart,
    DominoComposition,
    DominoTile,
    ValidationError,
    WeightSequence,
    validate_colored,
    validate_domino,
)
from .counting import (
    binomial,
    check_convolution,
    count_domino_stratum,
    count_parts_closed,
    count_parts_n_minus_1,
    count_parts_n_minus_2,
    count_parts_partition,
    count_total_closed,
    count_total_recurrence,
    fibonacci,
    fibonacci_identity_check,
    invert_transform,
)
from .enumeration import enumerate_colored, enumerate_colored_law, enumerate_domino, enumerate_restricted_signed

__version__ = "0.1.0"
