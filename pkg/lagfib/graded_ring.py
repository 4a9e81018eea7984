#coding: utf-8


u"""Truncated graded commutative polynomial rings over the rationals.

A :class:`RingSpec` declares named generators with positive weights and a
truncation weight.  A :class:`GradedElement` is a sparse map from
:class:`Monomial` to :class:`fractions.Fraction`; anything heavier than the
truncation weight is discarded as soon as it is produced, which is the
same as working modulo classes above the dimension of a manifold.

Relations such as h^2 = 0 are never imposed inside the ring.  They are
applied when an element is paired with a table of values by
:func:`evaluate`, where monomials missing from the table count as zero.

All objects here are immutable once built.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
import math

from .errors import (DuplicateGenerator, InvalidWeight, UnknownGenerator,
                     RingMismatch, NonUnitConstantTerm, WeightMismatch)


def as_fraction(value):
    u"""Convert an int, Fraction or "p/q" string to a Fraction, refusing floats."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational numbers")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot use {value!r} ({type(value).__name__}) as an exact rational")


@dataclass(frozen=True, order=True)
class Monomial:
    u"""A product of generators, stored as (name, exponent) pairs sorted by name.

    Zero exponents are never stored, so the empty tuple is the unit monomial.
    """
    exponents: tuple = ()

    @classmethod
    def from_mapping(cls, mapping):
        pairs = []
        for name, power in mapping.items():
            power = int(power)
            if power < 0:
                raise InvalidWeight(f"Negative exponent {power} for generator {name}")
            if power:
                pairs.append((name, power))
        return cls(tuple(sorted(pairs)))

    @classmethod
    def from_key(cls, key):
        u"""Parse a dot-separated key such as "c2.c2.c4"; "1" or "" is the unit monomial."""
        key = key.strip()
        counts = {}
        if key and key != "1":
            for factor in key.split("."):
                factor = factor.strip()
                if not factor:
                    raise WeightMismatch(f"Empty factor in monomial key '{key}'")
                counts[factor] = counts.get(factor, 0) + 1
        return cls.from_mapping(counts)

    def as_dict(self):
        return dict(self.exponents)

    def degree(self, name):
        return self.as_dict().get(name, 0)

    def names(self):
        return [name for name, _ in self.exponents]

    def __mul__(self, other):
        combined = self.as_dict()
        for name, power in other.exponents:
            combined[name] = combined.get(name, 0) + power
        return Monomial.from_mapping(combined)

    def key(self):
        return ".".join(name for name, power in self.exponents for _ in range(power)) or "1"

    def __str__(self):
        return self.key()


ONE = Monomial()


@dataclass(frozen=True)
class RingSpec:
    u"""Ordered weighted generators and a truncation weight.

    The declaration order of the generators is the canonical order used
    when elements are printed.
    """
    generators: tuple
    truncation_weight: int

    def __post_init__(self):
        generators = tuple((str(name), weight) for name, weight in self.generators)
        object.__setattr__(self, "generators", generators)
        seen = set()
        for name, weight in generators:
            if name in seen:
                raise DuplicateGenerator(name=name)
            seen.add(name)
            if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
                raise InvalidWeight(f"Generator {name} has weight {weight!r}; weights must be integers >= 1")
        t = self.truncation_weight
        if isinstance(t, bool) or not isinstance(t, int) or t < 1:
            raise InvalidWeight(f"Truncation weight must be an integer >= 1, got {t!r}")
        if generators and t < max(weight for _, weight in generators):
            raise InvalidWeight(f"Truncation weight {t} is below the heaviest generator weight")

    @cached_property
    def names(self):
        return tuple(name for name, _ in self.generators)

    @cached_property
    def weights(self):
        return dict(self.generators)

    @cached_property
    def _position(self):
        return {name: i for i, name in enumerate(self.names)}

    def check_monomial(self, monomial):
        for name in monomial.names():
            if name not in self.weights:
                raise UnknownGenerator(name=name, known=", ".join(self.names))
        return monomial

    def weight(self, monomial):
        weights = self.weights
        try:
            return sum(weights[name] * power for name, power in monomial.exponents)
        except KeyError:
            self.check_monomial(monomial)
            raise

    def sort_key(self, monomial):
        # lexicographic with the first declared generator largest
        vector = [0] * len(self.names)
        for name, power in monomial.exponents:
            vector[self._position[name]] = power
        return (self.weight(monomial), tuple(-p for p in vector))

    def format_monomial(self, monomial):
        powers = monomial.as_dict()
        factors = []
        for name in self.names:
            power = powers.get(name, 0)
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        return "*".join(factors)

    def monomial(self, key):
        if isinstance(key, Monomial):
            return self.check_monomial(key)
        if isinstance(key, str):
            return self.check_monomial(Monomial.from_key(key))
        return self.check_monomial(Monomial.from_mapping(key))

    def element(self, terms):
        return GradedElement(self, {self.monomial(k): v for k, v in dict(terms).items()})

    def zero(self):
        return GradedElement(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        return GradedElement(self, {ONE: value})

    def generator(self, name):
        return GradedElement(self, {self.monomial({name: 1}): 1})

    def truncated(self, truncation_weight):
        return RingSpec(self.generators, truncation_weight)

    def __str__(self):
        gens = ", ".join(f"{name}:{weight}" for name, weight in self.generators)
        return f"Ring[{gens} | weight <= {self.truncation_weight}]"


def make_ring(generators, truncation_weight):
    u"""Build and validate a :class:`RingSpec` from (name, weight) pairs."""
    return RingSpec(tuple(generators), truncation_weight)


class GradedElement:
    u"""An immutable sparse truncated polynomial with Fraction coefficients."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms):
        canonical = {}
        limit = ring.truncation_weight
        for monomial, coefficient in terms.items():
            ring.check_monomial(monomial)
            if ring.weight(monomial) > limit:
                continue
            coefficient = as_fraction(coefficient)
            if coefficient:
                canonical[monomial] = coefficient
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("GradedElement is immutable")

    @classmethod
    def _trusted(cls, ring, terms):
        # terms already canonical: no zeros, no overweight monomials
        self = cls.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", terms)
        return self

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, monomial):
        return self._terms.get(self.ring.monomial(monomial), Fraction(0))

    @property
    def constant_term(self):
        return self._terms.get(ONE, Fraction(0))

    def is_zero(self):
        return not self._terms

    def weights(self):
        return sorted({self.ring.weight(m) for m in self._terms})

    def part(self, weight):
        u"""The homogeneous component of the given weight."""
        ring = self.ring
        return GradedElement._trusted(ring, {m: c for m, c in self._terms.items()
                                             if ring.weight(m) == weight})

    def _check(self, other):
        if not isinstance(other, GradedElement):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatch(left=self.ring, right=other.ring)
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return GradedElement._trusted(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement._trusted(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, factor):
        factor = as_fraction(factor)
        if not factor:
            return self.ring.zero()
        return GradedElement._trusted(self.ring, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedElement):
            return self.scale(other)
        other = self._check(other)
        ring = self.ring
        limit = ring.truncation_weight
        left = [(m, c, ring.weight(m)) for m, c in self._terms.items()]
        right = [(m, c, ring.weight(m)) for m, c in other._terms.items()]
        terms = {}
        for m1, c1, w1 in left:
            for m2, c2, w2 in right:
                if w1 + w2 > limit:
                    continue
                product = m1 * m2
                terms[product] = terms.get(product, 0) + c1 * c2
        return GradedElement._trusted(ring, {m: c for m, c in terms.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / as_fraction(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers are supported")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def coerce(self, ring):
        u"""The same polynomial in a ring with the same generators but another truncation."""
        if ring.generators != self.ring.generators:
            raise RingMismatch(left=self.ring, right=ring)
        return GradedElement(ring, self._terms)

    def specialize_zero(self, names):
        u"""Set the named generators to zero."""
        names = set(names)
        return GradedElement._trusted(self.ring, {m: c for m, c in self._terms.items()
                                                  if not names.intersection(m.names())})

    def _nilpotent_series(self, coefficients):
        # sum_k coefficients(k) * self^k, self has zero constant term
        result = self.ring.zero()
        power = self.ring.one()
        k = 0
        while not power.is_zero():
            coefficient = coefficients(k)
            if coefficient:
                result = result + power.scale(coefficient)
            power = power * self
            k += 1
        return result

    def _require_constant(self, operation, expected):
        if self.constant_term != expected:
            raise NonUnitConstantTerm(operation=operation, expected=expected,
                                      constant=self.constant_term)

    def sqrt_unit(self):
        u"""Formal square root, solved one weight at a time from s*s = self."""
        self._require_constant("Square root", 1)
        root = self.ring.one()
        for weight in range(1, self.ring.truncation_weight + 1):
            residual = (self - root * root).part(weight)
            if not residual.is_zero():
                root = root + residual.scale(Fraction(1, 2))
        return root

    def inverse_unit(self):
        u"""Multiplicative inverse of an element with non-zero constant term."""
        c0 = self.constant_term
        if not c0:
            raise NonUnitConstantTerm(operation="Inversion", expected="non-zero", constant=c0)
        u = self.scale(1 / c0) - 1
        return u._nilpotent_series(lambda k: Fraction((-1) ** k)).scale(1 / c0)

    def log_unit(self):
        self._require_constant("Logarithm", 1)
        u = self - 1
        return u._nilpotent_series(lambda k: Fraction((-1) ** (k + 1), k) if k else 0)

    def exp_nilpotent(self):
        self._require_constant("Exponential", 0)
        return self._nilpotent_series(lambda k: Fraction(1, math.factorial(k)))

    def evaluate(self, values, select_weight):
        u"""Pair the weight-`select_weight` part with a table of monomial values.

        Keys of `values` may be :class:`Monomial` objects or dot-separated
        strings.  Every key must have weight `select_weight`; monomials that
        are not in the table contribute nothing.
        """
        ring = self.ring
        table = {}
        for key, value in values.items():
            monomial = ring.monomial(key)
            weight = ring.weight(monomial)
            if weight != select_weight:
                raise WeightMismatch(f"Value given for {monomial} (weight {weight}) "
                                     f"but evaluating weight {select_weight}")
            table[monomial] = as_fraction(value)
        total = Fraction(0)
        for monomial, value in table.items():
            coefficient = self._terms.get(monomial)
            if coefficient is not None:
                total += coefficient * value
        return total

    def __eq__(self, other):
        if isinstance(other, GradedElement):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        ring = self.ring
        text = ""
        for i, monomial in enumerate(sorted(self._terms, key=ring.sort_key)):
            coefficient = self._terms[monomial]
            name = ring.format_monomial(monomial)
            magnitude = abs(coefficient)
            if not name:
                body = str(magnitude)
            elif magnitude == 1:
                body = name
            else:
                body = f"{magnitude}*{name}"
            if i == 0:
                text = ("-" if coefficient < 0 else "") + body
            else:
                text += (" - " if coefficient < 0 else " + ") + body
        return text

    def __repr__(self):
        return f"GradedElement({self})"


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def sqrt_unit(a):
    return a.sqrt_unit()


def inverse_unit(a):
    return a.inverse_unit()


def log_unit(a):
    return a.log_unit()


def exp_nilpotent(a):
    return a.exp_nilpotent()


def evaluate(a, values, select_weight):
    return a.evaluate(values, select_weight)
