"""Free alternative algebras, the ABG Lie algebra and sl3 character computations."""

from ._abgalt import (
    Algebra,
    ResourceLimit,
    ch_irr,
    check_distinct_mod_delta,
    decompose,
    garland_lepowsky,
    phi,
    solve_conjecture,
    weyl_dimension,
)

__all__ = [
    "Algebra",
    "ResourceLimit",
    "ch_irr",
    "check_distinct_mod_delta",
    "decompose",
    "garland_lepowsky",
    "phi",
    "solve_conjecture",
    "weyl_dimension",
]
