#coding: utf-8


u"""deg Δ from a pencil of hyperplane sections of a surface.

For the Beauville-Mukai system on S^[n] (S a K3 surface, C^2 = 2n - 2) and
for the generalized Kummer K_n (S an abelian surface, C^2 = 2(n + 1)),
deg Δ counts the singular members of a pencil of curves in |C|.  That is
the top Chern class of the rank-3 bundle O(C,1) + T*S(C,1) on S x P^1.
"""

from dataclasses import dataclass

from .graded_ring import make_ring
from .errors import NonIntegerResult, InvalidWeight
from .fibration_formulas import (HILBERT_SCHEME, GENERALIZED_KUMMER, deg_delta_principal,
                                 deg_delta_polarized, known_example_sqrt_ahat,
                                 known_example_polarization, _positive_int)
from .runtime import logs

K3 = "k3"
ABELIAN = "abelian"
SURFACES = (K3, ABELIAN)

# C and h are divisor classes (C on S, h a point of P^1); g stands for c_2(S).
PENCIL_RING = make_ring([("C", 1), ("h", 1), ("g", 2)], 3)

# The only weight-3 monomials which survive on S x P^1 are C^2 h and g h.
PENCIL_EVALUATION_KEYS = ("C.C.h", "g.h")


@dataclass(frozen=True)
class SurfaceData:
    c2_number: int
    curve_self_intersection: int
    c1_is_zero: bool = True

    def __post_init__(self):
        if not self.c1_is_zero:
            raise ValueError("Only surfaces with c_1 = 0 are supported")
        for name in ("c2_number", "curve_self_intersection"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.curve_self_intersection % 2:
            raise InvalidWeight(f"C^2 = {self.curve_self_intersection} is odd; C^2 = 2g - 2 is always even")

    @classmethod
    def for_family(cls, surface, n):
        u"""The K3 surface with C^2 = 2n - 2, or the abelian surface with C^2 = 2(n + 1)."""
        n = _positive_int("n", n)
        if surface == K3:
            return cls(24, 2 * n - 2)
        if surface == ABELIAN:
            return cls(0, 2 * (n + 1))
        raise ValueError(f"Unknown surface '{surface}'; choose one of {', '.join(SURFACES)}")


def pencil_chern_class():
    u"""Total Chern class (1 + D)(1 + 2D + g + D^2) of O(D) + T*S(D), D = C + h, in the free ring."""
    D = PENCIL_RING.generator("C") + PENCIL_RING.generator("h")
    g = PENCIL_RING.generator("g")
    line = 1 + D
    # c(T*S (x) O(D)) for rank 2 with c_1(T*S) = 0: 1 + 2D + (c_2 + D^2)
    twisted_cotangent = 1 + D.scale(2) + g + D * D
    return line * twisted_cotangent


def pencil_degree(surface):
    u"""c_3 of the bundle on S x P^1 as an integer: c_2(S) + 3 C^2."""
    top = pencil_chern_class().part(3)
    values = dict(zip(PENCIL_EVALUATION_KEYS,
                      (surface.curve_self_intersection, surface.c2_number)))
    result = top.evaluate(values, 3)
    logs.noisy(f"pencil: c3 = {top} -> {result}")
    if result.denominator != 1:
        raise NonIntegerResult(name="pencil_degree", value=result)
    return int(result)


def formula_degree(surface, n):
    u"""The same degree from the discriminant formula for the matching known family."""
    if surface == K3:
        return deg_delta_principal(n, known_example_sqrt_ahat(HILBERT_SCHEME, n))
    if surface == ABELIAN:
        return deg_delta_polarized(n, known_example_polarization(GENERALIZED_KUMMER, n),
                                   known_example_sqrt_ahat(GENERALIZED_KUMMER, n))
    raise ValueError(f"Unknown surface '{surface}'; choose one of {', '.join(SURFACES)}")
