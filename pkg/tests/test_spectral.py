import numpy as np
import pytest

from hopfbundles import Factor, HopfManifold
from hopfbundles.elliptic import SplitKind, SplittingType
from hopfbundles.errors import DomainError, ModelInconsistencyError, UndefinedCasimirError, UnsupportedKindError
from hopfbundles.oracles import bidegree_sections, riemann_hurwitz_genus
from hopfbundles.projective import P1Point, RationalMap
from hopfbundles.rank2 import FiltrableRank2, JumpRecord
from hopfbundles.spectral import (
    FIBRE,
    SIGMA,
    GraphData,
    RuledClass,
    bisection_genus,
    casimirs,
    graph_of_spectral,
    higher_spectral,
    intersect,
    irreducible_spectral,
    leaf_of_bundle,
    poisson_rank,
    spectral_of_filtrable,
)

CL = HopfManifold((0.5, 0.5))
ONE = Factor.identity(2)


def test_intersect_examples():
    assert intersect(SIGMA, FIBRE) == 1
    assert intersect(2 * SIGMA + 2 * FIBRE, 2 * SIGMA + 2 * FIBRE) == 8
    assert intersect(FIBRE, FIBRE) == 0 and intersect(SIGMA, SIGMA) == 0


def test_spectral_of_filtrable_examples():
    split = FiltrableRank2(CL, ONE, 0, Factor.constant(2, 0.7))
    S = spectral_of_filtrable(split)
    assert S.total_class == RuledClass(2, 0) and not S.vertical and S.filtrable
    E = FiltrableRank2(CL, ONE, 1, Factor.constant(2, 0.7), (JumpRecord(0, (1,), P1Point.affine(2)),))
    S = spectral_of_filtrable(E)
    assert S.total_class == RuledClass(2, 1) and S.self_intersection() == 4
    with pytest.raises(UnsupportedKindError):
        spectral_of_filtrable(FiltrableRank2(HopfManifold((0.31, 0.47)), ONE, 0, ONE))


def test_irreducible_cover_class():
    F = RationalMap((1, 2, 3), (0, 1, 0))
    S = irreducible_spectral(F, [(P1Point.affine(1), 2)], 1.0, 0.5)
    assert S.c2 == 4 and S.self_intersection() == 16 and not S.filtrable


def test_bisection_genus_examples():
    assert bisection_genus(1, 0) == 1
    assert bisection_genus(2, 0) == 3
    with pytest.raises(DomainError):
        bisection_genus(2, 2)


def test_bisection_genus_against_branch_point_count():
    q = 0.05 * np.exp(0.7j)
    for d in range(1, 6):
        assert riemann_hurwitz_genus(d, q, seed=d) == bisection_genus(d + 1, 1)


def test_graph_examples():
    E = FiltrableRank2(CL, ONE, 1, Factor.constant(2, 0.7), (JumpRecord(0, (1,), P1Point.affine(2)),))
    G = graph_of_spectral(spectral_of_filtrable(E))
    assert G.F.is_constant and G.degree == 0 and len(G.vertical) == 1
    assert G.ambient_dim == 3
    for c2 in range(1, 11):
        G = GraphData((), RationalMap((0,) * c2 + (1,), (1,)), c2)
        assert G.ambient_dim + 1 == bidegree_sections(c2)
        assert G.bidegree == (c2, 1)


def test_casimir_examples():
    c = P1Point.affine(0.3 + 0.1j)
    G = GraphData((), RationalMap.constant(c), 1)
    C1, C2 = casimirs(G, P1Point.infinity(), P1Point.affine(0))
    assert C1.close(C2) and C1.close(c)
    G = GraphData((), RationalMap((0, 1), (1, 0)), 1)
    C1, C2 = casimirs(G, P1Point.infinity(), P1Point.affine(0))
    assert not C1.close(C2)
    # degree-1 map through (x1, C1): F(t) = (t + 2) / (t + 1) sends 0 to 2
    G = GraphData((), RationalMap((2, 1), (1, 1)), 1)
    assert casimirs(G, P1Point.affine(0), P1Point.affine(5))[0].close(P1Point.affine(2))
    G = GraphData(((P1Point.affine(0), 1),), RationalMap.constant(c), 1)
    with pytest.raises(UndefinedCasimirError):
        casimirs(G, P1Point.infinity(), P1Point.affine(0))


def test_poisson_examples():
    reg = SplittingType.sample(SplitKind.REGULAR_DISTINCT)
    jump = SplittingType.sample(SplitKind.UNSTABLE_JUMP, h=1)
    assert poisson_rank(1, reg, reg) == 2
    assert poisson_rank(1, jump, reg) == 0
    assert poisson_rank(3, reg, reg) == 10
    with pytest.raises(ModelInconsistencyError):
        poisson_rank(1, jump, jump)


def test_leaf_examples():
    a = Factor.constant(2, 0.7)
    E = FiltrableRank2(CL, ONE, 1, a, (JumpRecord(0, (1,), P1Point.affine(2)),))
    L = leaf_of_bundle(E)
    assert L.dim == 2 and L.C1.close(L.C2)
    E = FiltrableRank2(CL, ONE, 1, a, (JumpRecord(1, (1,)),))
    assert leaf_of_bundle(E).rank == 0


def test_higher_spectral_examples():
    X = HopfManifold((0.5, 0.5, 0.5))
    assert higher_spectral(X, [0.6, 0.8]).shape == "decomposes"
    h = higher_spectral(X, [0.6, 0.6 * 0.5])
    assert h.shape == "twisted_pullback_candidate"
    assert h.cn == 0
    with pytest.raises(DomainError):
        higher_spectral(CL, [0.6])
