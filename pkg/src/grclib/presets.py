"""Reference constructions used by the demo command and the regression
suite: the binary and ternary Golay codes, their repetition-code variants,
and the two worked quasi-cyclic codes over the binary Golay code (cyclic
shifts for Type-I, mixing cofactors for Type-II)."""

from __future__ import annotations

from .codes import LinearCode
from .fields import field_create
from .grc import GrcCode, from_qc_generators, type1
from .perms import Permutation
from .poly import Poly

__all__ = [
    "binary_golay",
    "ternary_golay",
    "simplex_15_4",
    "golay_type1_shift",
    "golay_type2_mixed",
    "golay_classical_repetition",
    "GOLAY_GEN",
    "TERNARY_GOLAY_GEN",
    "MIXING_COFACTORS",
]

GOLAY_GEN = "x^11+x^9+x^7+x^6+x^5+x+1"
TERNARY_GOLAY_GEN = "x^5+2x^3+x^2+2x+2"
SIMPLEX_15_4_GEN = "x^11+x^10+x^9+x^8+x^6+x^4+x^3+1"
# cofactors pairing with the Golay generator in the mixed QC construction
MIXING_COFACTORS = (
    "x^9+x^6+x^5+x^4+x^3+x+1",
    "x^12+x^11+x^10+x^9+x^8+x^5+x",
    "x^11+x^8+x^7+x^6+x^5+x^3+x",
)


def binary_golay() -> LinearCode:
    gf2 = field_create(2)
    return LinearCode.cyclic(gf2, 23, Poly.parse(gf2, GOLAY_GEN))


def ternary_golay() -> LinearCode:
    gf3 = field_create(3)
    return LinearCode.cyclic(gf3, 11, Poly.parse(gf3, TERNARY_GOLAY_GEN))


def simplex_15_4() -> LinearCode:
    gf2 = field_create(2)
    return LinearCode.cyclic(gf2, 15, Poly.parse(gf2, SIMPLEX_15_4_GEN))


def golay_type1_shift(m: int = 4) -> GrcCode:
    """Type-I code (g, xg, x^2 g, ...): m copies under the cyclic shift."""
    gf2 = field_create(2)
    g = Poly.parse(gf2, GOLAY_GEN)
    gens = [Poly.monomial(gf2, i) * g for i in range(m)]
    return from_qc_generators(23, gens)


def golay_type2_mixed() -> GrcCode:
    """Type-II code (g, f1 g, f2 g, f3 g) with the mixing cofactors."""
    gf2 = field_create(2)
    g = Poly.parse(gf2, GOLAY_GEN)
    gens = [g] + [Poly.parse(gf2, f) * g for f in MIXING_COFACTORS]
    return from_qc_generators(23, gens)


def golay_classical_repetition(m: int = 4) -> GrcCode:
    """Classical repetition: Type-I with identity permutations."""
    base = binary_golay()
    return type1(base, [Permutation.identity(23) for _ in range(m - 1)])
