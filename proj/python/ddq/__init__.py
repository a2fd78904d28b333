"""Exact computations with double derivation quivers.

Thin re-export of the compiled module; all vertices are 1-based and all
rational values cross the boundary as strings to stay exact.
"""

from ._ddq import (
    Algebra,
    betti_numbers,
    check_tensor,
    derivation_dimension,
    free_product_bracket,
    moment_map,
    necklace_bracket,
    quiver_arrows,
)

__all__ = [
    "Algebra",
    "betti_numbers",
    "check_tensor",
    "derivation_dimension",
    "free_product_bracket",
    "moment_map",
    "necklace_bracket",
    "quiver_arrows",
]
