#coding: utf-8


u"""Multiplicative sequences in Chern classes: the Â-genus and its square root.

The Â series is built from first principles rather than from tables.  Write
Q(x) = (x/2)/sinh(x/2) and log Q(x) = sum_m a_m x^m.  Over Chern roots x_i
the genus is the product of Q(x_i), so its logarithm is sum_m a_m p_m with
p_m the power sums of the roots, and p_m is a polynomial in c_1, c_2, ...
by Newton's identities.  Exponentiating in the truncated ring gives Â;
:func:`sqrt_ahat_series` then takes the formal square root.

Series are memoized per weight.  All returned values are immutable.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
import math
import re

import yaml

from .graded_ring import make_ring, Monomial, GradedElement
from .errors import InvalidChernNumbers, InvalidWeight, WeightMismatch, UnknownGenerator, NonUnitConstantTerm
from .runtime import logs
from .utils import load_yaml

AHAT = "ahat"
SQRT_AHAT = "sqrt-ahat"
GENERA = (AHAT, SQRT_AHAT)

_CHERN_NAME = re.compile(r"^c([1-9][0-9]*)$")


def _require_weight(max_weight, minimum):
    if isinstance(max_weight, bool) or not isinstance(max_weight, int) or max_weight < minimum:
        raise InvalidWeight(f"Series weight must be an integer >= {minimum}, got {max_weight!r}")


@lru_cache(maxsize=None)
def chern_ring(max_weight):
    u"""The ring generated by c_1, ..., c_m (c_i of weight i), truncated at weight m."""
    _require_weight(max_weight, 1)
    return make_ring([(f"c{i}", i) for i in range(1, max_weight + 1)], max_weight)


@lru_cache(maxsize=None)
def _power_sums(max_weight):
    ring = chern_ring(max_weight)
    c = [None] + [ring.generator(f"c{i}") for i in range(1, max_weight + 1)]
    p = [None]
    # p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k
    for k in range(1, max_weight + 1):
        p_k = c[k].scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            p_k = p_k + (c[i] * p[k - i]).scale((-1) ** (i - 1))
        p.append(p_k)
    return tuple(p[1:])


def power_sums_from_chern(max_weight):
    u"""Power sums p_1, ..., p_m of the Chern roots, as polynomials in the Chern classes."""
    _require_weight(max_weight, 1)
    return list(_power_sums(max_weight))


@lru_cache(maxsize=None)
def log_q_coefficients(max_weight):
    u"""Coefficients a_1..a_m of log((x/2)/sinh(x/2)), computed by exact series inversion and logarithm."""
    _require_weight(max_weight, 1)
    ring = make_ring([("x", 1)], max_weight)
    half_x = ring.generator("x").scale(Fraction(1, 2))
    sinh_ratio = ring.zero()
    for k in range(0, max_weight // 2 + 1):
        sinh_ratio = sinh_ratio + (half_x ** (2 * k)).scale(Fraction(1, math.factorial(2 * k + 1)))
    log_q = sinh_ratio.inverse_unit().log_unit()
    return tuple(log_q.coefficient({"x": m}) for m in range(1, max_weight + 1))


@dataclass(frozen=True)
class CharacteristicSeries:
    u"""A genus as a truncated series in c_1, c_2, ...; `source` names the genus."""
    element: GradedElement
    source: str

    def __post_init__(self):
        if self.element.constant_term != 1:
            raise NonUnitConstantTerm(operation="A multiplicative sequence", expected=1,
                                      constant=self.element.constant_term)

    @property
    def max_weight(self):
        return self.element.ring.truncation_weight

    def part(self, weight):
        return self.element.part(weight)

    def specialize_odd_zero(self):
        u"""Set c_1 = c_3 = ... = 0, as for holomorphic symplectic manifolds."""
        odd = [f"c{i}" for i in range(1, self.max_weight + 1, 2)]
        return CharacteristicSeries(self.element.specialize_zero(odd), self.source)

    def square(self):
        return self.element * self.element

    def __str__(self):
        return str(self.element)


@lru_cache(maxsize=None)
def ahat_series(max_weight):
    u"""The Â-genus through weight `max_weight`, for general Chern classes."""
    _require_weight(max_weight, 2)
    with logs.timed(f"Â series through weight {max_weight}"):
        ring = chern_ring(max_weight)
        log_genus = ring.zero()
        for a_m, p_m in zip(log_q_coefficients(max_weight), _power_sums(max_weight)):
            if a_m:
                log_genus = log_genus + p_m.scale(a_m)
        element = log_genus.exp_nilpotent()
    logs.debug(f"Â through weight {max_weight}: {element}")
    return CharacteristicSeries(element, AHAT)


@lru_cache(maxsize=None)
def sqrt_ahat_series(max_weight):
    u"""The formal square root of the Â series (not the square root of the Â number)."""
    _require_weight(max_weight, 2)
    element = ahat_series(max_weight).element.sqrt_unit()
    return CharacteristicSeries(element, SQRT_AHAT)


def genus_series(genus, max_weight):
    if genus == AHAT:
        return ahat_series(max_weight)
    if genus == SQRT_AHAT:
        return sqrt_ahat_series(max_weight)
    raise ValueError(f"Unknown genus '{genus}'; choose one of {', '.join(GENERA)}")


@dataclass(frozen=True)
class ChernNumbers:
    u"""Integer Chern numbers of a compact complex manifold of the given dimension.

    `values` maps top-weight monomials in c_1, c_2, ... to integers.  Keys
    may be given as :class:`Monomial` objects or as dot-separated strings
    such as ``"c2.c2"``; they are stored as monomials.
    """
    complex_dimension: int
    values: MappingProxyType = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        dim = self.complex_dimension
        where = f"'{self.name}'" if self.name else ""
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise InvalidChernNumbers(f"complex_dimension must be a positive integer, got {dim!r}", where=where)
        ring = chern_ring(dim)
        values = {}
        for key, value in dict(self.values).items():
            try:
                monomial = key if isinstance(key, Monomial) else Monomial.from_key(str(key))
                for factor in monomial.names():
                    if not _CHERN_NAME.match(factor):
                        raise InvalidChernNumbers(f"'{factor}' is not a Chern class c1, c2, ...", where=where)
                weight = ring.weight(monomial)
            except (UnknownGenerator, WeightMismatch):
                raise InvalidChernNumbers(f"monomial '{key}' is not a Chern monomial of weight {dim}", where=where)
            if weight != dim:
                raise InvalidChernNumbers(f"monomial '{key}' has weight {weight}, expected {dim}", where=where)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidChernNumbers(f"Chern number for '{key}' must be an integer, got {value!r}", where=where)
            if monomial in values:
                raise InvalidChernNumbers(f"monomial '{key}' given twice", where=where)
            values[monomial] = value
        object.__setattr__(self, "values", MappingProxyType(values))

    def __hash__(self):
        return hash((self.complex_dimension, frozenset(self.values.items()), self.name))

    def __getitem__(self, key):
        monomial = key if isinstance(key, Monomial) else Monomial.from_key(key)
        return self.values.get(monomial, 0)

    @classmethod
    def from_record(cls, record):
        u"""Build from a record ``{"name": ..., "complex_dimension": n, "chern_numbers": {...}}``."""
        if not isinstance(record, dict):
            raise InvalidChernNumbers("record must be a mapping")
        missing = [k for k in ("complex_dimension", "chern_numbers") if k not in record]
        if missing:
            raise InvalidChernNumbers(f"missing field(s) {', '.join(missing)}", where=record.get("name", ""))
        numbers = record["chern_numbers"]
        if not isinstance(numbers, dict):
            raise InvalidChernNumbers("chern_numbers must be a mapping", where=record.get("name", ""))
        return cls(record["complex_dimension"], numbers, str(record.get("name", "")))

    @classmethod
    def load(cls, filename):
        u"""Read a JSON (or YAML) manifold record from disc."""
        try:
            with open(filename) as f:
                record = load_yaml(f)
        except OSError as error:
            raise InvalidChernNumbers(f"cannot read record: {error.strerror or error}", where=filename)
        except (ValueError, yaml.YAMLError) as error:
            first_line = (str(error).splitlines() or [type(error).__name__])[0]
            raise InvalidChernNumbers(f"malformed record: {first_line}", where=filename)
        return cls.from_record(record)

    def to_record(self):
        ring = chern_ring(self.complex_dimension)
        ordered = sorted(self.values, key=ring.sort_key)
        return {
            "name": self.name,
            "complex_dimension": self.complex_dimension,
            "chern_numbers": {m.key(): self.values[m] for m in ordered},
        }


def characteristic_number(series, chern):
    u"""Evaluate the weight-`complex_dimension` part of `series` on the Chern numbers."""
    if chern.complex_dimension > series.max_weight:
        raise WeightMismatch(f"Series known through weight {series.max_weight} cannot be "
                             f"evaluated on a manifold of complex dimension {chern.complex_dimension}")
    value = series.element.evaluate(chern.values, chern.complex_dimension)
    logs.noisy(f"{series.source}[{chern.name or 'X'}] = {value}")
    return value
