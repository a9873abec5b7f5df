import math

import pytest

from hopfbundles import DomainError, Factor, HopfManifold, Kind, classify_manifold, detect_monomial
from hopfbundles.factors import ALL_NONNEG, combine, detect_resonance
from hopfbundles.manifold import (
    Divisor,
    canonical_divisor,
    curve_divisor,
    divisor_to_line_bundle,
)
from hopfbundles import oracles

GEN = HopfManifold((0.31, 0.47))


def test_classify_examples():
    assert classify_manifold((0.5, 0.5))[0] is Kind.CLASSICAL
    assert classify_manifold((0.25, 0.5)) == (Kind.RESONANT, (1, 2))
    assert classify_manifold((0.31, 0.47), exp_bound=32)[0] is Kind.GENERIC


def test_hyperresonant_and_other():
    # 0.5^3 = (0.5^(3/2))^2, so p = 3, q = 2
    assert classify_manifold((0.5**1.5, 0.5)) == (Kind.HYPERRESONANT, (2, 3))
    kind, rel = classify_manifold((0.06, 0.2, 0.3))
    assert kind is Kind.OTHER and rel is not None
    assert classify_manifold((0.31, 0.47, 0.53))[0] is Kind.GENERIC


def test_generic_verdict_matches_enumeration_oracle():
    box = range(-32, 33)
    hits = oracles.naive_monomial(0.0, 0.0, GEN, [box, box], 1e-9)
    assert hits == [(0, 0)]


def test_invalid_multipliers():
    with pytest.raises(DomainError):
        HopfManifold((0.5,))
    with pytest.raises(DomainError):
        HopfManifold((0.5, 1.0))
    with pytest.raises(DomainError):
        HopfManifold((0.6, 0.5))


def test_scale_stability():
    mu = (0.31 * (1 + 1e-13), 0.47 * (1 - 1e-13))
    assert classify_manifold(mu)[0] is Kind.GENERIC
    mu = (0.25 * (1 + 1e-13), 0.5)
    assert classify_manifold(mu)[0] is Kind.RESONANT


def test_canonical_and_divisors():
    assert canonical_divisor(GEN).coeffs == (-1, -1)
    X3 = HopfManifold((0.31, 0.47, 0.53))
    assert canonical_divisor(X3).coeffs == (-1, -1, -1)
    assert (-canonical_divisor(GEN)).coeffs == (1, 1)
    assert divisor_to_line_bundle(GEN, Divisor.hypersurface(2, 1)) == Factor((1, 0))
    assert divisor_to_line_bundle(GEN, Divisor((0, 0))) == Factor.identity(2)
    assert divisor_to_line_bundle(GEN, canonical_divisor(GEN)) == Factor((-1, -1))
    D1, D2 = Divisor((1, 2)), Divisor((-3, 1))
    assert divisor_to_line_bundle(GEN, D1 + D2) == divisor_to_line_bundle(GEN, D1) * divisor_to_line_bundle(GEN, D2)
    assert divisor_to_line_bundle(GEN, curve_divisor(GEN, 1)) == Factor((0, 1))
    assert divisor_to_line_bundle(GEN, curve_divisor(GEN, 2)) == Factor((1, 0))
    assert Divisor((1, 0)).intersect(Divisor((0, 1))) == 0


def test_combine_examples():
    assert combine(Factor((1, 0)), Factor((0, 1)), "mul") == Factor((1, 1))
    assert combine(Factor((-1, 0)), None, "pow", 2) == Factor((-2, 0))
    f = Factor((3, -1), 0.2 + 0.1j)
    g = combine(f, f, "div")
    assert g.exponents == (0, 0) and g.scalar == 1
    with pytest.raises(DomainError):
        Factor((0, 0), 0)


def test_detect_monomial_examples():
    assert detect_monomial(Factor((2, 1)), GEN, ALL_NONNEG) == (2, 1)
    assert detect_monomial(Factor.constant(2, 0.31**2 * 0.47), GEN) == (2, 1)
    assert detect_monomial(Factor.constant(2, 0.31 / 0.47), GEN, ALL_NONNEG) is None
    assert detect_monomial(Factor.constant(2, 0.31 / 0.47), GEN) == (1, -1)


def test_detect_monomial_soundness():
    a = Factor((1, 0), 0.47**-3 * (0.31**2))
    m = detect_monomial(a, GEN)
    target = 0.31 ** m[0] * 0.47 ** m[1]
    assert abs(a.value(GEN) - target) / abs(a.value(GEN)) < 1e-8


def test_detect_resonance_examples():
    P = HopfManifold((0.25, 0.5), Kind.OTHER)
    assert detect_resonance(P) == (1, 2)
    assert detect_resonance(HopfManifold((0.5, 0.5), Kind.OTHER)) == (1, 1)
    assert detect_resonance(HopfManifold((0.31, 0.47), Kind.OTHER), 32) is None


def test_normalized_folds_scalar():
    f = Factor((1, 0), 0.47**2)
    assert f.normalized(GEN) == Factor((1, 2))
    g = Factor((1, 0), 0.3)
    assert g.normalized(GEN) is g


def test_log_modulus_is_exact_in_log_space():
    f = Factor((400, -300))
    assert math.isclose(f.log_modulus(GEN), 400 * math.log(0.31) - 300 * math.log(0.47))
