"""Property-based checks of the structural invariants."""
import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hopfbundles import Factor, HopfManifold, Kind, classify_manifold, detect_monomial
from hopfbundles.elliptic import EllipticPic, h0_line
from hopfbundles.factors import ANY, detect_resonance
from hopfbundles.picard import LineBundle, cohomology_dims, degree
from hopfbundles.rank2 import (
    FiltrableRank2,
    IdealComponent,
    JumpRecord,
    classify_extension_c2zero,
    classify_rank2_higher,
    elementary_modification,
    remove_all_jumps,
)
from hopfbundles.spectral import intersect, spectral_of_filtrable
from hopfbundles.stability import Status, d_domain, find_stable_higher, is_stable_filtrable_surface

GEN = HopfManifold((0.31, 0.47))
GEN3 = HopfManifold((0.31, 0.47, 0.53))
CL = HopfManifold((0.5, 0.5))

exps2 = st.tuples(st.integers(-12, 12), st.integers(-12, 12))
exps3 = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
phase = st.floats(-math.pi, math.pi)
modulus = st.floats(0.05, 20.0)
scalars = st.builds(lambda r, t: complex(r * math.cos(t), r * math.sin(t)), modulus, phase)
factors2 = st.builds(Factor, exps2, scalars)


@given(exps2, scalars)
def test_monomial_detection_is_sound(e, s):
    f = Factor(e, s)
    m = detect_monomial(f, GEN, ANY)
    if m is not None:
        target = 0.31 ** m[0] * 0.47 ** m[1]
        assert abs(f.value(GEN) - target) / abs(f.value(GEN)) < 1e-8


@given(exps2)
def test_pure_monomials_are_recovered(e):
    assert detect_monomial(Factor(e), GEN, ANY) == e


@given(factors2, factors2)
def test_degree_is_a_homomorphism(a, b):
    for X in (GEN, CL):
        lhs = degree(LineBundle(a * b, X))
        assert math.isclose(lhs, degree(LineBundle(a, X)) + degree(LineBundle(b, X)), abs_tol=1e-9)


@given(exps2)
def test_cohomology_obeys_euler_and_serre(e):
    h = cohomology_dims(LineBundle(Factor(e), GEN)).h
    assert h[1] == h[0] + h[2]
    dual = cohomology_dims(LineBundle(Factor((-1 - e[0], -1 - e[1])), GEN)).h
    assert h == dual[::-1]


@given(st.floats(0.05, 0.95), st.floats(0.05, 0.95), phase, phase)
def test_resonance_none_iff_generic(r1, r2, t1, t2):
    r1, r2 = sorted((r1, r2))
    mu = (complex(r1 * math.cos(t1), r1 * math.sin(t1)), complex(r2 * math.cos(t2), r2 * math.sin(t2)))
    kind, _ = classify_manifold(mu)
    assume(kind in (Kind.GENERIC, Kind.RESONANT, Kind.HYPERRESONANT))
    none = detect_resonance(HopfManifold(mu, Kind.OTHER)) is None
    assert none == (kind is Kind.GENERIC)


@given(st.integers(-20, 20), scalars)
def test_elliptic_serre_duality(d, s):
    L = EllipticPic(d, s, 0.31)
    assert h0_line(L) - h0_line(L.inverse()) == d


@given(factors2, factors2, factors2)
def test_extension_verdict_is_twist_invariant(a, b, t):
    v1 = classify_extension_c2zero(a, b, GEN)
    v2 = classify_extension_c2zero(a * t, b * t, GEN)
    assert (v1.verdict, v1.m) == (v2.verdict, v2.m)


@given(exps3, scalars, st.integers(1, 3), st.integers(1, 3), st.integers(0, 4))
def test_higher_classification_is_twist_normalising(te, ts, ki, kj, m3):
    t = Factor(te, ts)
    sub = Factor((-ki, -kj, m3))
    c = IdealComponent(1, 2, ki, kj)
    base = classify_rank2_higher(GEN3, sub, Factor.identity(3), ideal=[c])
    assert classify_rank2_higher(GEN3, sub * t, t, ideal=[c]).normalized() == base.normalized()


profiles = st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=3), min_size=0, max_size=2)


@given(profiles, st.integers(0, 3), factors2)
def test_c2_is_conserved_through_modifications(hs, z_off, delta):
    jumps = tuple(JumpRecord(c, tuple(h)) for c, h in zip((1, 2), hs))
    c2 = sum(sum(h) for h in hs) + z_off
    E = FiltrableRank2(GEN, delta, c2, Factor.identity(2), jumps, z_off)
    while E.jumps:
        j = E.jumps[0]
        nxt = elementary_modification(E, j.curve, EllipticPic(-j.height, 1, GEN.mu[j.curve - 1]))
        assert nxt.c2 == E.c2 - j.height
        assert sum(x.multiplicity for x in nxt.jumps) + nxt.z_off == nxt.c2
        E = nxt
    assert E.c2 == z_off


@given(profiles)
def test_full_removal_divides_det_by_curve_factors(hs):
    jumps = tuple(JumpRecord(c, tuple(h)) for c, h in zip((1, 2), hs))
    c2 = sum(sum(h) for h in hs)
    E = FiltrableRank2(GEN, Factor.identity(2), c2, Factor.identity(2), jumps)
    Ebar, ratio = remove_all_jumps(E)
    assert not Ebar.jumps
    assert ratio == Factor((-E.length_on(1), -E.length_on(2)))


@given(factors2, st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_domains_nest(delta, l1, l2, d1, d2):
    small = d_domain(delta, (l1, l2), GEN)
    big = d_domain(delta, (l1 + d1, l2 + d2), GEN)
    assert small.subset_of(big)
    assert small.empty == (l1 == l2 == 0)


@given(factors2, scalars, st.integers(1, 3), st.integers(0, 3))
def test_domain_scales_with_delta(delta, t, l1, l2):
    D = d_domain(delta, (l1, l2), GEN)
    Dt = d_domain(delta * Factor.constant(2, t), (l1, l2), GEN)
    s = abs(t) ** 0.5
    assert math.isclose(Dt.r_lo, s * D.r_lo, rel_tol=1e-12)
    assert math.isclose(Dt.r_hi, s * D.r_hi, rel_tol=1e-12)


@settings(max_examples=50)
@given(scalars, modulus, st.integers(1, 3))
def test_membership_is_scale_covariant(t, a_mod, l1):
    def verdict(delta, a):
        E = FiltrableRank2(GEN, delta, l1, a, (JumpRecord(1, (1,) * l1),))
        return is_stable_filtrable_surface(E).status

    one = Factor.identity(2)
    a = Factor.constant(2, a_mod * complex(math.cos(0.3), math.sin(0.3)))
    base = verdict(one, a)
    assume(base is not Status.INDETERMINATE)
    D = d_domain(one, (l1, 0), GEN)
    assume(min(abs(a_mod - D.r_lo), abs(a_mod - D.r_hi)) > 1e-6)
    scaled = verdict(Factor.constant(2, t), a * Factor.constant(2, complex(t) ** 0.5))
    assert scaled is base


@given(st.lists(st.integers(1, 3), min_size=0, max_size=3), scalars)
def test_spectral_self_intersection_is_4c2(mults, s):
    from hopfbundles.projective import P1Point

    jumps = tuple(JumpRecord(0, (m,), P1Point.affine(k + 1)) for k, m in enumerate(mults))
    E = FiltrableRank2(CL, Factor.identity(2), sum(mults), Factor.constant(2, s), jumps)
    S = spectral_of_filtrable(E)
    assert intersect(S.total_class, S.total_class) == 4 * E.c2


@settings(max_examples=30)
@given(st.floats(0.1, 0.9), st.floats(0.1, 0.9), st.floats(0.1, 0.9), phase, phase, phase)
def test_stable_higher_type_always_exists(r1, r2, r3, t1, t2, t3):
    rs = sorted((r1, r2, r3))
    assume(rs[0] < rs[1] < rs[2])
    mu = tuple(complex(r * math.cos(t), r * math.sin(t)) for r, t in zip(rs, (t1, t2, t3)))
    kind, _ = classify_manifold(mu)
    assume(kind is Kind.GENERIC)
    assert find_stable_higher(HopfManifold(mu)) is not None
