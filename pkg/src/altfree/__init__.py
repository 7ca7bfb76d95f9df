"""Alternation-free hypergraphs, their duals, and the 0/1 patterns that characterize them."""

from altfree.core import (
    AlternationWitness,
    BinaryMatrix,
    Coloring,
    HittingSet,
    OrderedHypergraph,
    Ordering,
    Pattern,
    PatternWitness,
    Subset,
    WitnessError,
    from_incidence,
    incidence,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AlternationWitness",
    "BinaryMatrix",
    "Coloring",
    "HittingSet",
    "OrderedHypergraph",
    "Ordering",
    "Pattern",
    "PatternWitness",
    "Subset",
    "WitnessError",
    "from_incidence",
    "incidence",
    "verify_witness",
]
