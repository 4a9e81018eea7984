#coding: utf-8


u"""The finite census of (b_2, b_3, d, deg Δ) for fibred holomorphic symplectic four-folds.

Guan's bounds leave 53 possible (b_2, b_3).  Salamon's relation gives b_4,
hence c_4 = χ(X); Â[X] = 3 then fixes c_2^2, and with it the integer
1152 sqrt(Â)[X] = 992 - 4 b_2 + b_3.  A fibration by abelian surfaces of
type (1, d) with good singular fibres has deg Δ^2 d = 1152 sqrt(Â)[X], so d
runs over divisors of that integer.  A fibred four-fold has b_2 >= 4
because L is isotropic for a form of signature (3, b_2 - 3).
"""

from dataclasses import dataclass
from fractions import Fraction
import functools
import itertools
import math
from typing import NamedTuple

from sympy import divisors

from .char_classes import ChernNumbers, ahat_series, sqrt_ahat_series, characteristic_number
from .errors import NotInGuanTable, EmptyCensus, NotPerfectPower, NonIntegerResult, RouteDisagreement
from .fibration_formulas import rational_nth_root
from .runtime import logs

# (b_2, allowed b_3 values), in the order Guan lists them
GUAN_RANGES = (
    (23, (0,)),
    (8, (0,)),
    (7, (0, 8)),
    (6, tuple(range(0, 17, 4))),
    (5, tuple(range(0, 37, 4))),
    (4, tuple(range(0, 61, 4))),
    (3, tuple(range(0, 69, 4))),
)

MIN_FIBRED_B2 = 4
RW_SCALE = 1152


@dataclass(frozen=True, order=True)
class BettiPair:
    b2: int
    b3: int

    @classmethod
    def coerce(cls, value):
        return value if isinstance(value, cls) else cls(*value)


def guan_table():
    return [BettiPair(b2, b3) for b2, b3s in GUAN_RANGES for b3 in b3s]


_GUAN_SET = frozenset(guan_table())


@dataclass(frozen=True)
class FourfoldInvariants:
    betti: BettiPair
    b4: int
    c4: int
    c2_squared: int
    sqrt_ahat: Fraction
    rw: int

    def chern_numbers(self):
        name = f"b2={self.betti.b2},b3={self.betti.b3}"
        return ChernNumbers(4, {"c2.c2": self.c2_squared, "c4": self.c4}, name)

    def ahat_number(self):
        u"""Â[X], which must be χ(O_X) = 3."""
        return characteristic_number(ahat_series(4), self.chern_numbers())


def invariants_from_betti(betti):
    u"""Everything the four-fold relations determine from (b_2, b_3).

    1152 sqrt(Â)[X] is computed three ways (from the Betti numbers, from
    c_4, and from the √Â series on the Chern numbers) and they must agree.
    """
    betti = BettiPair.coerce(betti)
    if betti not in _GUAN_SET:
        raise NotInGuanTable(b2=betti.b2, b3=betti.b3)
    b2, b3 = betti.b2, betti.b3
    b4 = 46 + 10 * b2 - b3
    c4 = 48 + 12 * b2 - 3 * b3
    if (2160 + c4) % 3:
        raise NonIntegerResult(name="c2^2 = (2160 + c4)/3", value=Fraction(2160 + c4, 3))
    c2_squared = (2160 + c4) // 3
    rw = 992 - 4 * b2 + b3
    chern = ChernNumbers(4, {"c2.c2": c2_squared, "c4": c4}, f"b2={b2},b3={b3}")
    sqrt_ahat = characteristic_number(sqrt_ahat_series(4), chern)
    from_c4 = 1008 - Fraction(c4, 3)
    if from_c4 != rw:
        raise RouteDisagreement(left_name="992 - 4b2 + b3", left=rw, right_name="1008 - c4/3", right=from_c4)
    if RW_SCALE * sqrt_ahat != rw:
        raise RouteDisagreement(left_name="992 - 4b2 + b3", left=rw,
                                right_name="1152 sqrt(Â)[X]", right=RW_SCALE * sqrt_ahat)
    return FourfoldInvariants(betti, b4, c4, c2_squared, sqrt_ahat, rw)


def census_degree_formula(rw, d):
    u"""deg Δ = (1152 sqrt(Â)[X] / d)^(1/2) for a polarization of type (1, d)."""
    return rational_nth_root(Fraction(rw, d), 2)


@dataclass(frozen=True)
class CensusRow:
    u"""One admissible (b_2, b_3, d).  `deg_delta` is None when rw/d is not a perfect square."""
    invariants: FourfoldInvariants
    d: int
    deg_delta: int = None

    @property
    def sort_key(self):
        return (self.invariants.betti.b2, self.invariants.betti.b3, self.d)

    @property
    def deg_delta_bound(self):
        u"""floor((rw / d)^(1/2)), the bound used when deg Δ need not be an integer."""
        return math.isqrt(self.invariants.rw // self.d)

    def as_record(self):
        inv = self.invariants
        return {
            "b2": inv.betti.b2,
            "b3": inv.betti.b3,
            "b4": inv.b4,
            "c4": inv.c4,
            "c2sq": inv.c2_squared,
            "rw": inv.rw,
            "d": self.d,
            "deg_delta": self.deg_delta,
        }


CENSUS_COLUMNS = ("b2", "b3", "b4", "c4", "c2sq", "rw", "d", "deg_delta")


def census_rows_for_pair(betti, require_integer_degree=True):
    inv = invariants_from_betti(betti)
    rows = []
    for d in divisors(inv.rw):
        d = int(d)
        try:
            deg = int(census_degree_formula(inv.rw, d))
        except NotPerfectPower:
            if require_integer_degree:
                continue
            deg = None
        rows.append(CensusRow(inv, d, deg))
    return rows


def census(require_integer_degree=True, pool=None):
    u"""All census rows for Guan pairs with b_2 >= 4, sorted by (b_2, b_3, d).

    With a :class:`~lagfib.runtime.process_pool.Pool` the pairs are farmed
    out to worker processes; the result is identical to the serial one.
    """
    pairs = [p for p in guan_table() if p.b2 >= MIN_FIBRED_B2]
    worker = functools.partial(census_rows_for_pair, require_integer_degree=require_integer_degree)
    with logs.timed(f"census over {len(pairs)} Betti pairs"):
        if pool is None:
            chunks = map(worker, pairs)
        else:
            chunks = pool.map(worker, pairs)
        rows = sorted(itertools.chain.from_iterable(chunks), key=lambda row: row.sort_key)
    logs.noisy(f"census: {len(rows)} rows (require_integer_degree={require_integer_degree})")
    return rows


class CensusBounds(NamedTuple):
    max_d: int
    max_deg: int
    max_rw: int


def bounds_summary(rows):
    rows = list(rows)
    if not rows:
        raise EmptyCensus()
    max_deg = max(row.deg_delta if row.deg_delta is not None else row.deg_delta_bound
                  for row in rows)
    return CensusBounds(max_d=max(row.d for row in rows),
                        max_deg=max_deg,
                        max_rw=max(row.invariants.rw for row in rows))
