import cmath

import pytest

from hopfbundles import Factor, HopfManifold, Kind, classify_manifold
from hopfbundles.covers import (
    Branch,
    CoverKind,
    classify_cyclic_cover,
    nonprimary_homology,
    pushforward_rank2,
)
from hopfbundles.errors import DomainError

GEN = HopfManifold((0.31, 0.47))


def test_cover_examples():
    c = classify_cyclic_cover(GEN, 2, "0", k=2)
    assert c.kind is CoverKind.UNRAMIFIED
    assert c.mu == pytest.approx((0.31**2, 0.47**2))
    c = classify_cyclic_cover(GEN, 2, "t1")
    assert c.kind is CoverKind.RAMIFIED and c.map_exponents == (1, 2)
    assert c.mu[0] == 0.31 and c.mu[1] ** 2 == pytest.approx(0.47)
    c = classify_cyclic_cover(GEN, 3, "t1t2")
    assert c.kind is CoverKind.NON_PRIMARY and c.d == -3
    assert c.beta**3 == pytest.approx(0.47 / 0.31)
    strict = classify_cyclic_cover(GEN, 3, "t1t2", strict_lemma=True)
    assert strict.beta**3 == pytest.approx(0.31)


def test_empty_branch_cases():
    c = classify_cyclic_cover(GEN, 4, Branch.EMPTY)
    assert c.kind is CoverKind.DISCONNECTED and c.count == 4
    c = classify_cyclic_cover(GEN, 4, Branch.EMPTY, k=2)
    assert c.kind is CoverKind.DISCONNECTED and c.count == 2
    assert c.mu == pytest.approx((0.31**2, 0.47**2))
    with pytest.raises(DomainError):
        classify_cyclic_cover(GEN, 4, Branch.EMPTY, k=3)
    with pytest.raises(ValueError):
        classify_cyclic_cover(GEN, 2, "t3")


def test_roots_are_principal_and_deterministic():
    X = HopfManifold((0.31 * cmath.exp(2j), 0.47 * cmath.exp(-1j)))
    a = classify_cyclic_cover(X, 3, "t2")
    b = classify_cyclic_cover(X, 3, "t2")
    assert a == b
    assert abs(cmath.phase(a.mu[0])) <= cmath.pi / 3 + 1e-12


def test_branch_t1_cover_genericity_matches_classifier():
    c = classify_cyclic_cover(GEN, 2, "t1")
    Y = c.surface()
    assert Y.kind is classify_manifold(tuple(sorted(c.mu, key=abs)))[0]
    # a relation among (mu_1, alpha) would raise to one among (mu_1, mu_2)
    for mu in ((0.2, 0.7), (0.31, 0.47 * cmath.exp(1j)), (0.05, 0.9)):
        for r in (2, 3):
            assert classify_cyclic_cover(HopfManifold(mu), r, "t1").surface().kind is Kind.GENERIC


def test_nonprimary_homology_examples():
    h = nonprimary_homology(-1)
    assert str(h[2]) == "0" and str(h[3]) == "Z"
    h = nonprimary_homology(-2)
    assert str(h[2]) == "Z_2" and str(h[3]) == "Z + Z_2"
    assert str(nonprimary_homology(-5)[2]) == "Z_5"
    assert [str(g) for g in nonprimary_homology(4).groups] == ["Z", "Z", "Z_4", "Z + Z_4", "Z"]
    with pytest.raises(DomainError):
        nonprimary_homology(0)


def test_pushforward_examples():
    double = classify_cyclic_cover(GEN, 2, "0", k=2)
    out = pushforward_rank2(double, Factor((3, -1), 0.2j))
    assert out["c2"] == 0 and out["filtrable"] and "decomposition" not in out
    nonprimary = classify_cyclic_cover(GEN, 2, "t1t2")
    assert nonprimary.d == -2
    assert pushforward_rank2(nonprimary, Factor((1, 0)))["c2"] == 0
    triv = pushforward_rank2(double, Factor.identity(2))
    assert triv["c2"] == 0 and "decomposition" in triv
