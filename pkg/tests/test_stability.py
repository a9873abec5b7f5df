import math

import pytest

from hopfbundles import Factor, HopfManifold
from hopfbundles.errors import DomainError, PreconditionError, UnsupportedKindError
from hopfbundles.rank2 import FiltrableRank2, HigherExtensionType, HigherVariant, IdealComponent, JumpRecord
from hopfbundles.stability import (
    Annulus,
    Status,
    audit_maximal_sub,
    c2one_parameters,
    d_domain,
    find_stable_higher,
    is_stable_filtrable_surface,
    is_stable_higher,
    moduli_dimension,
    monopole_parameters,
    slope,
)

GEN = HopfManifold((0.31, 0.47))
GEN3 = HopfManifold((0.31, 0.47, 0.53))
CL = HopfManifold((0.5, 0.5))
ONE = Factor.identity(2)


def bundle(sub, l1=0, l2=0, det=ONE, X=GEN):
    jumps = tuple(JumpRecord(c, (1,) * l) for c, l in ((1, l1), (2, l2)) if l)
    return FiltrableRank2(X, det, l1 + l2, sub, jumps)


def test_slope_examples():
    assert slope(2.0, 2) == 1.0
    assert slope(0, 1) == 0
    # 0.1457 = 0.31 * 0.47; the listed value 0.96305 is off in the fifth digit
    assert slope(-math.log(0.1457), 2) == pytest.approx(0.96305, abs=1e-4)
    assert slope(-math.log(0.1457), 2) == pytest.approx(-(math.log(0.31) + math.log(0.47)) / 2, abs=1e-15)
    with pytest.raises(DomainError):
        slope(1.0, 0)


def test_d_domain_examples():
    assert d_domain(ONE, (0, 0), GEN).empty
    D = d_domain(ONE, (1, 0), GEN)
    assert D.r_lo == pytest.approx(1) and D.r_hi == pytest.approx(3.22581, abs=1e-5)
    D = d_domain(ONE, 2, CL)
    assert (D.r_lo, D.r_hi) == (pytest.approx(1), pytest.approx(4))


def test_annulus_boundary_is_strict():
    A = Annulus(1.0, 2.0)
    assert A.locate(1.5) == (True, False)
    assert A.locate(1.0) == (False, True)
    assert A.locate(2.0 - 1e-12) == (False, True)
    assert A.locate(2.5) == (False, False)


def test_stability_examples():
    v = is_stable_filtrable_surface(bundle(Factor.constant(2, 1.5), 1))
    assert v.status is Status.STABLE and v.branch == "annulus"
    a = Factor.constant(2, (0.31 * 0.47) ** -0.5)
    v = is_stable_filtrable_surface(bundle(a, 1))
    assert v.status is Status.STABLE and v.branch == "condition-a" and v.witness["k"] == [0, 1]
    v = is_stable_filtrable_surface(bundle(ONE))
    assert v.status is Status.UNSTABLE and v.witness["destabilizer"]["line_bundle"] == "sub"


def test_condition_a_exact_path():
    # a = mu_2^-1 with l = (2, 0): a^2 / delta' = mu_1^2 mu_2^-2, not all non-positive
    v = is_stable_filtrable_surface(bundle(Factor((0, -1)), 2))
    assert v.branch == "annulus"
    v = is_stable_filtrable_surface(bundle(Factor((0, -1)), 0, 1))
    assert v.branch == "condition-a" and v.witness["k"] == [0, 1]


def test_quotient_destabilises_above_annulus():
    v = is_stable_filtrable_surface(bundle(Factor.constant(2, 10.0), 1))
    assert v.status is Status.UNSTABLE
    assert v.witness["destabilizer"]["line_bundle"] == "quotient"


def test_boundary_flag():
    # a phase keeps a^2 / delta' off the monomial lattice so condition (a) fails
    edge = Factor.constant(2, complex(math.cos(0.5), math.sin(0.5)) / 0.31)
    v = is_stable_filtrable_surface(bundle(edge, 1))
    assert v.status is Status.UNSTABLE and v.boundary


def test_classical_surface_uses_annulus():
    E = FiltrableRank2(CL, ONE, 2, Factor.constant(2, 2.0), (JumpRecord(1, (1, 1)),))
    assert is_stable_filtrable_surface(E).status is Status.STABLE
    with pytest.raises(UnsupportedKindError):
        is_stable_filtrable_surface(FiltrableRank2(HopfManifold((0.25, 0.5)), ONE, 0, ONE))


def test_audit_demotes_when_quotient_is_larger():
    E = bundle(Factor.constant(2, 2.0))
    v = is_stable_filtrable_surface(E)
    assert v.status is Status.UNSTABLE
    assert v.witness["destabilizer"]["line_bundle"] == "quotient"
    assert audit_maximal_sub(E, v).status is Status.INDETERMINATE
    E = bundle(Factor.constant(2, 1.5), 1)
    assert is_stable_filtrable_surface(E, audit=True).status is Status.STABLE


def test_higher_examples():
    c = IdealComponent(1, 2, 1, 1)
    one = Factor.identity(3)
    t3 = HigherExtensionType(HigherVariant.IDEAL_EXTENSION, one, (0, 0, 3), c)
    t4 = HigherExtensionType(HigherVariant.IDEAL_EXTENSION, one, (0, 0, 4), c)
    assert is_stable_higher(t3, GEN3).status is Status.STABLE
    assert is_stable_higher(t4, GEN3).status is Status.UNSTABLE
    le = HigherExtensionType(HigherVariant.LINE_EXTENSION, one, (1, 0, 0))
    assert is_stable_higher(le, GEN3).status is Status.UNSTABLE
    found = find_stable_higher(GEN3)
    assert found is not None and is_stable_higher(found, GEN3).stable


def test_moduli_examples():
    assert not moduli_dimension(ONE, 0).nonempty
    assert moduli_dimension(ONE, 1).dim == 4
    assert moduli_dimension(ONE, 3).dim == 12


def test_c2one_examples():
    assert c2one_parameters(Factor.constant(2, 1.5), ONE, GEN)["projection_space_dim"] == 0
    exceptional = Factor.constant(2, (0.47 / 0.31) ** 0.5)
    p = c2one_parameters(exceptional, ONE, GEN)
    assert p["projection_space_dim"] == 1 and p["relation"] == [-1, 1]
    # a^2 = delta mu_2 has modulus below |delta|^{1/2}, outside D_(1,0)
    with pytest.raises(PreconditionError):
        c2one_parameters(Factor.constant(2, 0.47**0.5), ONE, GEN)
    same = HopfManifold((0.5 * complex(math.cos(1), math.sin(1)), 0.5))
    assert c2one_parameters(Factor.constant(2, 1.5), ONE, same)["projection_space_dim"] == 0


def test_monopole_examples():
    M = monopole_parameters(1, 1)
    assert M.dim == 2 and M.parametrization["base"] == ["D_1", "Pic^1(T_1)"]
    M = monopole_parameters(3, 2)
    assert M.dim == 4 and M.parametrization["projection_space_dim"] == 2
    for k in range(1, 8):
        p = monopole_parameters(2, k).parametrization
        assert p["annulus_dim"] + p["picard_dim"] + p["projection_space_dim"] == 2 * k

