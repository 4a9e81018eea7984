#coding: utf-8


u"""Degree of the discriminant locus of a Lagrangian fibration X -> P^n.

Three routes are provided and they must agree exactly:

* the closed forms :func:`deg_delta_principal` and :func:`deg_delta_polarized`,
  24 (n! sqrt(Â)[X] / (d_1...d_n))^(1/n);
* the b_Theta form :func:`deg_delta_from_b_theta`, 1/2 (b / (d_1...d_n))^(1/n);
* :func:`master_equation_solve`, which rebuilds the answer from the three
  integrals that enter the Fujiki relation for sigma + t sigma-bar and Y + t L.

All quantities are exact.  When an n-th root is irrational the inputs cannot
describe a fibration with good singular fibres, so :class:`NotPerfectPower`
is raised instead of approximating.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from sympy import divisors, integer_nthroot

from .errors import NotPerfectPower, NegativeEvenRoot, NonPositiveInput, InvalidPolarization
from .graded_ring import as_fraction
from .runtime import logs

HILBERT_SCHEME = "hilbert_scheme"
GENERALIZED_KUMMER = "generalized_kummer"
FAMILIES = (HILBERT_SCHEME, GENERALIZED_KUMMER)


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise NonPositiveInput(name=name, value=value)
    return value


def rational_nth_root(x, n):
    u"""The exact rational r with r**n == x, or :class:`NotPerfectPower`."""
    x = as_fraction(x)
    n = _positive_int("root order n", n)
    if x < 0 and n % 2 == 0:
        raise NegativeEvenRoot(value=x, n=n)
    num_root, num_exact = integer_nthroot(abs(x.numerator), n)
    den_root, den_exact = integer_nthroot(x.denominator, n)
    if not (num_exact and den_exact):
        raise NotPerfectPower(value=x, n=n)
    root = Fraction(int(num_root), int(den_root))
    return -root if x < 0 else root


@dataclass(frozen=True)
class PolarizationType:
    u"""Elementary divisors (d_1, ..., d_n) with d_1 | d_2 | ... | d_n."""
    d: tuple

    def __post_init__(self):
        d = tuple(self.d)
        object.__setattr__(self, "d", d)
        if not d:
            raise InvalidPolarization("it must have at least one entry", d=d)
        for value in d:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidPolarization("entries must be positive integers", d=d)
        for smaller, larger in zip(d, d[1:]):
            if larger % smaller:
                raise InvalidPolarization(f"{smaller} does not divide {larger}", d=d)

    @classmethod
    def principal(cls, n):
        return cls((1,) * _positive_int("n", n))

    @classmethod
    def coerce(cls, pol):
        return pol if isinstance(pol, cls) else cls(tuple(pol))

    @property
    def n(self):
        return len(self.d)

    @property
    def product(self):
        return math.prod(self.d)

    @property
    def is_primitive(self):
        return self.d[0] == 1

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.d) + ")"


@dataclass(frozen=True, order=True)
class DegenerationModel:
    u"""A good singular fibre: k P^1-bundles over an abelian variety of type d_prime."""
    k: int
    d_prime: tuple

    def satisfies(self, pol):
        pol = PolarizationType.coerce(pol)
        if len(self.d_prime) != pol.n - 1:
            return False
        if pol.d[-1] % self.k:
            return False
        if any(dp % d for d, dp in zip(pol.d, self.d_prime)):
            return False
        return math.prod(self.d_prime) * self.k == pol.product


@dataclass(frozen=True)
class FujikiData:
    u"""Inputs of the master equation: Y restricts to theta_multiple times the polarization."""
    n: int
    polarization_product: int
    sqrt_ahat: Fraction
    theta_multiple: int = 1

    def __post_init__(self):
        _positive_int("n", self.n)
        _positive_int("polarization product", self.polarization_product)
        _positive_int("theta multiple m", self.theta_multiple)
        sqrt_ahat = as_fraction(self.sqrt_ahat)
        if sqrt_ahat <= 0:
            raise NonPositiveInput(name="sqrt(Â)[X]", value=sqrt_ahat)
        object.__setattr__(self, "sqrt_ahat", sqrt_ahat)


@dataclass(frozen=True)
class DegreeResult:
    deg_delta: Fraction
    b_theta: Fraction
    intermediate_c2YL: Fraction


def _check_sqrt_ahat(sqrt_ahat):
    sqrt_ahat = as_fraction(sqrt_ahat)
    if sqrt_ahat <= 0:
        raise NonPositiveInput(name="sqrt(Â)[X]", value=sqrt_ahat)
    return sqrt_ahat


def _check_polarization(n, pol):
    pol = PolarizationType.coerce(pol)
    if pol.n != n:
        raise InvalidPolarization(f"it has {pol.n} entries but n = {n}", d=pol.d)
    if not pol.is_primitive:
        logs.warning(f"Polarization {pol} has d_1 > 1, so Y is not primitive on the fibres; "
                     "the good-fibre models assume d_1 = 1")
    return pol


def b_theta_from_sqrt_ahat(n, sqrt_ahat):
    u"""The Rozansky-Witten invariant b_Theta^n(X) = 48^n n! sqrt(Â)[X]."""
    n = _positive_int("n", n)
    return 48 ** n * math.factorial(n) * as_fraction(sqrt_ahat)


def deg_delta_principal(n, sqrt_ahat):
    n = _positive_int("n", n)
    sqrt_ahat = _check_sqrt_ahat(sqrt_ahat)
    return 24 * rational_nth_root(math.factorial(n) * sqrt_ahat, n)


def deg_delta_polarized(n, pol, sqrt_ahat):
    n = _positive_int("n", n)
    pol = _check_polarization(n, pol)
    sqrt_ahat = _check_sqrt_ahat(sqrt_ahat)
    return 24 * rational_nth_root(math.factorial(n) * sqrt_ahat / pol.product, n)


def deg_delta_from_b_theta(n, pol, b_theta):
    n = _positive_int("n", n)
    pol = _check_polarization(n, pol)
    b_theta = as_fraction(b_theta)
    if b_theta <= 0:
        raise NonPositiveInput(name="b_Theta", value=b_theta)
    return rational_nth_root(b_theta / pol.product, n) / 2


def master_equation_solve(data):
    u"""Solve the Fujiki relation for the integral of c_2 Y^(n-1) L^(n-1) and hence deg Δ.

    With I = n! m^n d_1...d_n (the integral of Y^n L^n) and
    R = 24^n (n!)^2 / n^n sqrt(Â)[X], the relation reads A^n = I^(n-1) R.
    Each component of the singular locus contributes (n-1)! m^(n-1) d_1...d_n
    to A per unit degree, so deg Δ = A / ((n-1)! m^(n-1) d_1...d_n).
    The multiple m cancels.
    """
    n, product, m = data.n, data.polarization_product, data.theta_multiple
    integral_ynln = math.factorial(n) * m ** n * product
    ratio = Fraction(24 ** n * math.factorial(n) ** 2, n ** n) * data.sqrt_ahat
    c2yl = rational_nth_root(integral_ynln ** (n - 1) * ratio, n)
    deg_delta = c2yl / (math.factorial(n - 1) * m ** (n - 1) * product)
    logs.noisy(f"master equation: n={n} m={m} Y^nL^n={integral_ynln} "
               f"c2Y^(n-1)L^(n-1)={c2yl} deg Δ={deg_delta}")
    return DegreeResult(deg_delta=deg_delta,
                        b_theta=b_theta_from_sqrt_ahat(n, data.sqrt_ahat),
                        intermediate_c2YL=c2yl)


def _ordered_factorizations(value, parts):
    if parts == 0:
        if value == 1:
            yield ()
        return
    if parts == 1:
        yield (value,)
        return
    for first in divisors(value):
        for rest in _ordered_factorizations(value // first, parts - 1):
            yield (int(first),) + rest


def degeneration_models(pol):
    u"""Every (k, d') compatible with a polarization of type `pol`.

    k divides d_n, d_i divides d'_i, and d_1...d_n = d'_1...d'_(n-1) k.
    Writing d'_i = d_i e_i turns this into ordered factorizations of d_n / k.
    For n = 1 no abelian part remains, so only k = d_1 with empty d' fits.
    Models come sorted by k and then lexicographically by d'.
    """
    pol = PolarizationType.coerce(pol)
    head, d_n = pol.d[:-1], pol.d[-1]
    models = []
    for k in divisors(d_n):
        k = int(k)
        for e in _ordered_factorizations(d_n // k, len(head)):
            models.append(DegenerationModel(k, tuple(d * x for d, x in zip(head, e))))
    models.sort()
    logs.noisy(f"{len(models)} degeneration models for polarization {pol}")
    return models


def singular_locus_pairing(model, n, deg_delta):
    u"""k (n-1)! d'_1...d'_(n-1) deg Δ: the c_2 Y^(n-1) L^(n-1) integral seen through one model."""
    return model.k * math.factorial(n - 1) * math.prod(model.d_prime) * as_fraction(deg_delta)


def _check_family(family):
    if family not in FAMILIES:
        raise ValueError(f"Unknown family '{family}'; choose one of {', '.join(FAMILIES)}")


def known_example_b_theta(family, n):
    u"""b_Theta^n for S^[n] of a K3 surface, 12^n (n+3)^n, or for K_n, 12^n (n+1)^(n+1)."""
    _check_family(family)
    n = _positive_int("n", n)
    if family == HILBERT_SCHEME:
        return Fraction(12 ** n * (n + 3) ** n)
    return Fraction(12 ** n * (n + 1) ** (n + 1))


def known_example_sqrt_ahat(family, n):
    return known_example_b_theta(family, n) / (48 ** n * math.factorial(n))


def known_example_polarization(family, n):
    _check_family(family)
    n = _positive_int("n", n)
    if family == HILBERT_SCHEME:
        return PolarizationType.principal(n)
    return PolarizationType((1,) * (n - 1) + (n + 1,))
