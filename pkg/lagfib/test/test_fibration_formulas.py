from fractions import Fraction
import itertools
import math
import random

import pytest

from lagfib.fibration_formulas import (rational_nth_root, PolarizationType, DegenerationModel,
                                       FujikiData, b_theta_from_sqrt_ahat, deg_delta_principal,
                                       deg_delta_polarized, deg_delta_from_b_theta,
                                       master_equation_solve, degeneration_models,
                                       singular_locus_pairing, known_example_b_theta,
                                       known_example_sqrt_ahat, known_example_polarization,
                                       HILBERT_SCHEME, GENERALIZED_KUMMER)
from lagfib.errors import NotPerfectPower, NegativeEvenRoot, NonPositiveInput, InvalidPolarization
from lagfib.runtime import logs

S2_SQRT_AHAT = Fraction(25, 32)
K2_SQRT_AHAT = Fraction(27, 32)


def test_nth_root_examples():
    assert rational_nth_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert rational_nth_root(Fraction(-27, 8), 3) == Fraction(-3, 2)
    assert rational_nth_root(0, 4) == 0
    assert rational_nth_root(Fraction(25, 16), 2) == Fraction(5, 4)
    with pytest.raises(NotPerfectPower):
        rational_nth_root(2, 2)
    with pytest.raises(NotPerfectPower):
        rational_nth_root(Fraction(4, 3), 2)
    with pytest.raises(NegativeEvenRoot):
        rational_nth_root(-4, 2)
    with pytest.raises(NonPositiveInput):
        rational_nth_root(4, 0)


def test_nth_root_random():
    rng = random.Random(314159)
    for _ in range(1000):
        n = rng.randint(1, 7)
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        if n % 2 == 0:
            x = abs(x)
        assert rational_nth_root(x ** n, n) == x


def test_polarization_type():
    pol = PolarizationType((1, 3))
    assert pol.n == 2
    assert pol.product == 3
    assert pol.is_primitive
    assert str(pol) == "(1,3)"
    assert PolarizationType.principal(3).d == (1, 1, 1)
    assert PolarizationType.coerce([1, 2, 4]).product == 8
    assert not PolarizationType((2, 4)).is_primitive


@pytest.mark.parametrize("d", [(), (2, 3), (0, 1), (1, -2), (1.0, 2)])
def test_invalid_polarization(d):
    with pytest.raises(InvalidPolarization):
        PolarizationType(d)


@pytest.mark.parametrize("n", range(1, 11))
def test_hilbert_scheme_family(n):
    sqrt_ahat = Fraction((n + 3) ** n, 4 ** n * math.factorial(n))
    assert known_example_sqrt_ahat(HILBERT_SCHEME, n) == sqrt_ahat
    assert deg_delta_principal(n, sqrt_ahat) == 6 * (n + 3)
    b_theta = known_example_b_theta(HILBERT_SCHEME, n)
    assert b_theta == b_theta_from_sqrt_ahat(n, sqrt_ahat)
    assert deg_delta_from_b_theta(n, PolarizationType.principal(n), b_theta) == 6 * (n + 3)


@pytest.mark.parametrize("n", range(1, 11))
def test_kummer_family(n):
    pol = known_example_polarization(GENERALIZED_KUMMER, n)
    assert pol.d == (1,) * (n - 1) + (n + 1,)
    sqrt_ahat = Fraction((n + 1) ** (n + 1), 4 ** n * math.factorial(n))
    assert known_example_sqrt_ahat(GENERALIZED_KUMMER, n) == sqrt_ahat
    assert deg_delta_polarized(n, pol, sqrt_ahat) == 6 * (n + 1)
    b_theta = known_example_b_theta(GENERALIZED_KUMMER, n)
    assert deg_delta_from_b_theta(n, pol, b_theta) == 6 * (n + 1)


def test_fourfold_examples():
    assert deg_delta_principal(2, S2_SQRT_AHAT) == 30
    assert deg_delta_polarized(2, (1, 3), K2_SQRT_AHAT) == 18
    assert deg_delta_polarized(2, (1, 1), S2_SQRT_AHAT) == 30
    with pytest.raises(NotPerfectPower):
        deg_delta_principal(2, Fraction(1, 7))


def test_formula_input_errors():
    with pytest.raises(NonPositiveInput):
        deg_delta_principal(2, 0)
    with pytest.raises(NonPositiveInput):
        deg_delta_principal(0, S2_SQRT_AHAT)
    with pytest.raises(InvalidPolarization):
        deg_delta_polarized(2, (1, 1, 1), S2_SQRT_AHAT)
    with pytest.raises(NonPositiveInput):
        FujikiData(2, 1, S2_SQRT_AHAT, theta_multiple=0)
    with pytest.raises(NonPositiveInput):
        FujikiData(2, 1, Fraction(-1, 2))
    with pytest.raises(ValueError):
        known_example_b_theta("enriques", 2)


def test_non_primitive_warning(capsys):
    logs.set_verbosity("standard")
    assert deg_delta_polarized(1, (4,), Fraction(4)) == 24
    captured = capsys.readouterr()
    assert "not primitive" in captured.err
    assert captured.out == ""


@pytest.mark.parametrize("data, expected", [
    ((2, 1, S2_SQRT_AHAT), 30),
    ((2, 3, K2_SQRT_AHAT), 18),
])
def test_theta_multiple_cancels(data, expected):
    n, product, sqrt_ahat = data
    results = [master_equation_solve(FujikiData(n, product, sqrt_ahat, m)) for m in range(1, 6)]
    assert all(r.deg_delta == expected for r in results)
    assert results[0].b_theta == b_theta_from_sqrt_ahat(n, sqrt_ahat)
    # the intermediate integral scales with m^(n-1)
    for m, r in enumerate(results, start=1):
        assert r.intermediate_c2YL == results[0].intermediate_c2YL * m ** (n - 1)


def test_master_equation_matches_formula():
    for n in range(1, 7):
        for family in (HILBERT_SCHEME, GENERALIZED_KUMMER):
            pol = known_example_polarization(family, n)
            sqrt_ahat = known_example_sqrt_ahat(family, n)
            result = master_equation_solve(FujikiData(n, pol.product, sqrt_ahat))
            assert result.deg_delta == deg_delta_polarized(n, pol, sqrt_ahat)


def test_master_equation_irrational():
    with pytest.raises(NotPerfectPower):
        master_equation_solve(FujikiData(2, 1, Fraction(1, 7)))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_two_models_for_prime(p):
    models = degeneration_models((1, p))
    assert models == [DegenerationModel(1, (p,)), DegenerationModel(p, (1,))]


def test_models_principal_and_rank_one():
    assert degeneration_models((1, 1, 1)) == [DegenerationModel(1, (1, 1))]
    assert degeneration_models((6,)) == [DegenerationModel(6, ())]


def test_models_keep_positions():
    # (1, 2, 2): d' = (2, 1) would break d_2 | d'_2
    models = degeneration_models((1, 2, 2))
    assert DegenerationModel(1, (1, 2)) not in models
    assert all(model.satisfies((1, 2, 2)) for model in models)


def brute_force_models(pol):
    d = pol.d
    found = set()
    if pol.n == 1:
        return [DegenerationModel(d[0], ())]
    ranges = [range(di, pol.product + 1, di) for di in d[:-1]]
    for d_prime in itertools.product(*ranges):
        rest, remainder = divmod(pol.product, math.prod(d_prime))
        if remainder:
            continue
        model = DegenerationModel(rest, tuple(d_prime))
        if model.satisfies(pol):
            found.add(model)
    return sorted(found)


def random_chain(rng):
    n = rng.randint(2, 3)
    d = [1]
    for _ in range(n - 1):
        d.append(d[-1] * rng.choice([1, 1, 2, 3, 4, 6]))
    return PolarizationType(tuple(d))


def test_models_against_brute_force():
    rng = random.Random(2718)
    for _ in range(50):
        pol = random_chain(rng)
        assert degeneration_models(pol) == brute_force_models(pol)


def test_singular_locus_pairing():
    # every model pairs to the same master-equation integral
    for family, n in [(HILBERT_SCHEME, 2), (GENERALIZED_KUMMER, 2), (GENERALIZED_KUMMER, 3)]:
        pol = known_example_polarization(family, n)
        result = master_equation_solve(FujikiData(n, pol.product, known_example_sqrt_ahat(family, n)))
        for model in degeneration_models(pol):
            assert singular_locus_pairing(model, n, result.deg_delta) == result.intermediate_c2YL


def random_chain_n(rng, n):
    d = [1]
    for _ in range(n - 1):
        d.append(d[-1] * rng.randint(1, 4))
    return tuple(d)


def test_polarized_degree_scaling():
    # deg_delta(d) * (d_1...d_n)^(1/n) is the principal degree, checked exactly through n-th powers
    rng = random.Random(1729)
    for _ in range(200):
        n = rng.randint(1, 5)
        pol = PolarizationType(random_chain_n(rng, n))
        r = Fraction(rng.randint(1, 60), rng.randint(1, 12))
        sqrt_ahat = pol.product * r ** n / math.factorial(n)
        polarized = deg_delta_polarized(n, pol, sqrt_ahat)
        assert polarized == 24 * r
        assert polarized ** n * pol.product == (24 ** n) * math.factorial(n) * sqrt_ahat


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_polarized_degree_scaling_exact_root(n):
    rng = random.Random(n)
    for _ in range(50):
        q = rng.randint(1, 5)
        pol = PolarizationType((1,) * (n - 1) + (q ** n,))
        r = Fraction(rng.randint(1, 60), rng.randint(1, 12))
        sqrt_ahat = r ** n / math.factorial(n)
        assert deg_delta_polarized(n, pol, sqrt_ahat) * q == deg_delta_principal(n, sqrt_ahat)
