"""Exact commutative algebra for cyclic determinantal ideals.

The engine is implemented in C++; this package re-exports the extension module.
"""

from ._detsat import (
    CyclicFamily,
    EngineError,
    Ideal,
    InputError,
    PolyMatrix,
    Polynomial,
    ResourceExhausted,
    Ring,
    __version__,
    build,
    buchberger,
    colon,
    determinant,
    determinant_bareiss,
    dimension,
    height,
    ideal_equal,
    intersect,
    maximal_ideal,
    minors_ideal,
    rank,
    saturate,
    signed_max_minors,
    std_monomial_count,
    strand_summary,
    syzygies,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
