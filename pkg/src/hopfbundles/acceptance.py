"""The acceptance suite, shared by the test-suite and ``hopfbundles selftest``.

Each ``criterion_*`` function returns ``(passed, detail)``.  Randomised
criteria take a seed so that runs are reproducible.
"""
from __future__ import annotations

import cmath
import math
import random
import time
from typing import Callable, Dict, List, Tuple

from . import oracles
from .config import THEOREM
from .covers import Branch, CoverKind, classify_cyclic_cover, pushforward_rank2
from .elliptic import EllipticPic, SplitKind, SplittingType
from .errors import HopfError
from .factors import Factor
from .manifold import HopfManifold, Kind
from .picard import LineBundle, cohomology_dims, degree
from .projective import P1Point, RationalMap
from .rank2 import (
    JumpRecord,
    FiltrableRank2,
    HigherVariant,
    IdealComponent,
    add_jump,
    classify_rank2_higher,
    elementary_modification,
    remove_all_jumps,
)
from .spectral import (
    bisection_genus,
    graph_of_spectral,
    irreducible_spectral,
    leaf_of_bundle,
    poisson_rank,
    spectral_of_filtrable,
)
from .stability import (
    Status,
    d_domain,
    find_stable_higher,
    is_stable_filtrable_surface,
    is_stable_higher,
    moduli_dimension,
    monopole_parameters,
)

Result = Tuple[bool, str]

# pinned tolerances and sizes
COHOM_SAMPLES = 1000
COHOM_SECONDS = 1.0
DEGREE_TOL = 1e-12
DOMAIN_SAMPLES = 100
BOUNDARY_OFFSET = 10
STAB_SAMPLES = 500
STAB_BOUND = 8
STAB_SECONDS = 30.0
JUMP_MAX_C2 = 6
SPECTRAL_MAX_C2 = 10
GENUS_MAX_DEGREE = 5
# a well-conditioned curve: the branch values of eta stay far apart
GENUS_Q = 0.05 * cmath.exp(0.7j)
POISSON_MAX_C2 = 10
HIGHER_MU = (0.31, 0.47, 0.53)
HIGHER_STABLE = range(1, 4)
HIGHER_UNSTABLE = range(4, 11)
HIGHER_SAMPLES = 100
HIGHER_MAX_TOTAL = 8
SELFTEST_SECONDS = 60.0
TOL = 1e-9


def random_generic_surface(rng: random.Random, lo: float = 0.1, hi: float = 0.9) -> HopfManifold:
    while True:
        r = sorted(rng.uniform(lo, hi) for _ in range(2))
        mu = tuple(cmath.rect(x, rng.uniform(-math.pi, math.pi)) for x in r)
        X = HopfManifold(mu)
        if X.kind is Kind.GENERIC:
            return X


def random_generic_triple(rng: random.Random) -> HopfManifold:
    while True:
        r = sorted(rng.uniform(0.05, 0.95) for _ in range(3))
        mu = tuple(cmath.rect(x, rng.uniform(-math.pi, math.pi)) for x in r)
        X = HopfManifold(mu, exp_bound=8)
        if X.kind is Kind.GENERIC:
            return X


def _random_unit_arg(rng):
    return cmath.exp(1j * rng.uniform(-math.pi, math.pi))


def _bundle_with_lengths(X, delta, a, l1, l2, z_off=0):
    jumps = []
    if l1:
        jumps.append(JumpRecord(1, (1,) * l1))
    if l2:
        jumps.append(JumpRecord(2, (1,) * l2))
    return FiltrableRank2(X, delta, l1 + l2 + z_off, a, tuple(jumps), z_off)


# -- 1 ----------------------------------------------------------------------

def _table_by_enumeration(a: Factor, X: HopfManifold, bound: int):
    box = range(-bound, bound + 1)
    hits = oracles.naive_monomial(a.log_modulus(X), a.argument(X), X, [box, box], 1e-9)
    pos = any(all(x >= 0 for x in m) for m in hits)
    neg = any(all(x < 0 for x in m) for m in hits)
    return (int(pos), int(pos) + int(neg), int(neg))


def criterion_cohomology(seed: int = 1) -> Result:
    rng = random.Random(seed)
    X = HopfManifold((0.31, 0.47))
    bound = 8
    factors = []
    for t in range(COHOM_SAMPLES):
        if t % 2 == 0:
            sign = rng.choice((1, -1, 0))
            if sign == 1:
                m = (rng.randint(0, 5), rng.randint(0, 5))
            elif sign == -1:
                m = (rng.randint(-5, -1), rng.randint(-5, -1))
            else:
                m = (rng.randint(-5, 5), rng.randint(-5, 5))
            if rng.random() < 0.5:
                factors.append(Factor(m))
            else:
                factors.append(Factor.constant(2, X.mu[0] ** m[0] * X.mu[1] ** m[1]))
        else:
            factors.append(Factor.constant(2, cmath.rect(math.exp(rng.uniform(-3, 3)), rng.uniform(-3, 3))))
    start = time.perf_counter()
    tables = [cohomology_dims(LineBundle(f, X), exp_bound=bound).h for f in factors]
    elapsed = time.perf_counter() - start
    bad = [f for f, h in zip(factors, tables) if h != _table_by_enumeration(f, X, bound)]
    euler = all(h[1] == h[0] + h[2] for h in tables)
    ok = not bad and euler and elapsed < COHOM_SECONDS
    return ok, f"{len(bad)} mismatches, h1=h0+h2: {euler}, {elapsed:.3f}s"


# -- 2 ----------------------------------------------------------------------

def criterion_degree(seed: int = 2) -> Result:
    worst = 0.0
    for mu in (0.5, 0.31, 0.8 * cmath.exp(1j), 0.05j):
        X = HopfManifold((mu, mu))
        for m in range(-10, 11):
            for f in (Factor((m, 0)), Factor((m - 3, 3)), Factor.constant(2, mu**m)):
                worst = max(worst, abs(degree(LineBundle(f, X)) - m))
    gen_ok = True
    X = HopfManifold((0.31, 0.47))
    for i in range(2):
        for m in range(1, 11):
            e = tuple(m if k == i else 0 for k in range(2))
            d = degree(LineBundle(Factor(e), X))
            gen_ok &= d > 0 and abs(d + m * math.log(abs(X.mu[i]))) <= DEGREE_TOL
    ok = worst <= DEGREE_TOL and gen_ok
    return ok, f"classical max error {worst:.2e}, generic formula holds: {gen_ok}"


# -- 3 ----------------------------------------------------------------------

def criterion_domain(seed: int = 3) -> Result:
    rng = random.Random(seed)
    X = HopfManifold((0.31, 0.47))
    problems = []
    ls = [(l1, l2) for l1 in range(4) for l2 in range(4)]
    for _ in range(DOMAIN_SAMPLES):
        delta = Factor.constant(2, cmath.rect(math.exp(rng.uniform(-2, 2)), rng.uniform(-3, 3)))
        doms = {l: d_domain(delta, l, X) for l in ls}
        for l, D in doms.items():
            if D.empty != (l == (0, 0)):
                problems.append(("emptiness", l))
        for l in ls:
            for lp in ls:
                if l[0] <= lp[0] and l[1] <= lp[1] and not doms[l].subset_of(doms[lp]):
                    problems.append(("nesting", l, lp))
        D = doms[(1, 1)]
        off = BOUNDARY_OFFSET * TOL
        for edge in (D.r_lo, D.r_hi):
            inside_edge, flag = D.locate(edge, TOL)
            if inside_edge or not flag:
                problems.append(("edge", edge))
        if not D.contains(D.r_lo + off) or D.contains(D.r_lo - off):
            problems.append(("lower offset",))
        if not D.contains(D.r_hi - off) or D.contains(D.r_hi + off):
            problems.append(("upper offset",))
        # the stability verdict at the boundary is unstable and flagged
        E = _bundle_with_lengths(X, delta, Factor.constant(2, D.r_lo), 1, 1)
        v = is_stable_filtrable_surface(E)
        if v.status is not Status.UNSTABLE or not v.boundary:
            problems.append(("verdict at edge", v))
    return not problems, f"{len(problems)} violations over {DOMAIN_SAMPLES} determinants"


# -- 4 ----------------------------------------------------------------------

def random_stability_instance(rng: random.Random):
    X = random_generic_surface(rng)
    delta = Factor.constant(2, cmath.rect(rng.uniform(0.3, 3.0), rng.uniform(-math.pi, math.pi)))
    l1, l2 = rng.randint(0, 3), rng.randint(0, 3)
    L = [math.log(abs(m)) for m in X.mu]
    A = [cmath.phase(m) for m in X.mu]
    ld = math.log(abs(delta.scalar)) - l1 * L[0] - l2 * L[1]
    ad = cmath.phase(delta.scalar) - l1 * A[0] - l2 * A[1]
    mode = rng.randrange(3)
    if mode == 0:
        k = (0, 0)
        while k == (0, 0):
            k = (rng.randint(0, STAB_BOUND), rng.randint(0, STAB_BOUND))
        la = (ld - k[0] * L[0] - k[1] * L[1]) / 2
        aa = (ad - k[0] * A[0] - k[1] * A[1]) / 2 + rng.choice((0, math.pi))
    elif mode == 1:
        lo = math.log(abs(delta.scalar)) / 2
        hi = ld - lo
        la = rng.uniform(lo - 1, hi + 1)
        aa = rng.uniform(-math.pi, math.pi)
    else:
        la = ld / 2
        aa = ad / 2 + rng.choice((0, math.pi))
    a = Factor.constant(2, cmath.rect(math.exp(la), aa))
    E = _bundle_with_lengths(X, delta, a, l1, l2, z_off=rng.randint(0, 2))
    return E, (l1, l2)


def criterion_stability_oracle(seed: int = 4, samples: int = STAB_SAMPLES) -> Result:
    rng = random.Random(seed)
    start = time.perf_counter()
    disagree = []
    stable = 0
    for _ in range(samples):
        E, l = random_stability_instance(rng)
        v = is_stable_filtrable_surface(E, exp_bound=STAB_BOUND)
        ref = oracles.brute_force_stable(E.sub, E.det, l, E.X, STAB_BOUND)
        stable += ref
        if (v.status is Status.STABLE) != ref:
            disagree.append((E, v, ref))
    elapsed = time.perf_counter() - start
    ok = not disagree and elapsed < STAB_SECONDS
    return ok, f"{samples - len(disagree)}/{samples} agree ({stable} stable), {elapsed:.2f}s"


# -- 5 ----------------------------------------------------------------------

def _random_profile(rng, c2):
    """Split c2 into heights on T_1 and T_2."""
    parts = []
    left = c2
    while left:
        h = rng.randint(1, left)
        parts.append(h)
        left -= h
    cut = rng.randint(0, len(parts))
    return tuple(parts[:cut]), tuple(parts[cut:])


def criterion_jumps(seed: int = 5) -> Result:
    rng = random.Random(seed)
    problems = []
    X = HopfManifold((0.31, 0.47))
    for c2 in range(JUMP_MAX_C2 + 1):
        for _ in range(20):
            h1, h2 = _random_profile(rng, c2)
            jumps = tuple(JumpRecord(c, h) for c, h in ((1, h1), (2, h2)) if h)
            delta = Factor((rng.randint(-3, 3), rng.randint(-3, 3)))
            a = Factor((rng.randint(-3, 3), rng.randint(-3, 3)))
            E = FiltrableRank2(X, delta, c2, a, jumps)
            if sum(j.multiplicity for j in E.jumps) != E.c2:
                problems.append(("sum", E))
            Ebar, ratio = remove_all_jumps(E, THEOREM)
            expect = Factor((-len(h1), -len(h2)))
            if ratio != expect or Ebar.jumps or Ebar.c2 != 0:
                problems.append(("removal", E, ratio))
            for curve in (1, 2):
                h = rng.randint(1, 3)
                lam = EllipticPic(h, _random_unit_arg(rng) * 0.6, X.mu[curve - 1])
                up = add_jump(E, curve, lam)
                down = elementary_modification(up, curve, lam.inverse())
                if (down.det, down.c2) != (E.det, E.c2):
                    problems.append(("round trip", E, curve))
    return not problems, f"{len(problems)} bookkeeping violations"


# -- 6 ----------------------------------------------------------------------

def criterion_spectral(seed: int = 6) -> Result:
    rng = random.Random(seed)
    problems = []
    X = HopfManifold((0.5, 0.5))
    q = X.mu[0]
    for c2 in range(SPECTRAL_MAX_C2 + 1):
        for _ in range(10):
            # filtrable bundle with all of Z on random fibres
            jumps, left = [], c2
            while left:
                h = rng.randint(1, left)
                jumps.append(JumpRecord(0, (h,), P1Point.affine(complex(rng.gauss(0, 1), rng.gauss(0, 1)))))
                left -= h
            delta = Factor.constant(2, cmath.rect(rng.uniform(0.3, 3), rng.uniform(-3, 3)))
            a = Factor.constant(2, cmath.rect(rng.uniform(0.3, 3), rng.uniform(-3, 3)))
            S = spectral_of_filtrable(FiltrableRank2(X, delta, c2, a, tuple(jumps)))
            if S.self_intersection() != 4 * c2:
                problems.append(("S.S", c2))
            G = graph_of_spectral(S)
            if G.ambient_dim != 2 * c2 + 1 or G.ambient_dim != oracles.bidegree_sections(c2) - 1:
                problems.append(("ambient", c2))
            if G.degree + S.k != c2:
                problems.append(("degree", c2))
            # non-filtrable cover with a random map of degree d = c2 - k
            if c2 >= 1:
                k = rng.randint(0, c2 - 1)
                d = c2 - k
                F = RationalMap(
                    [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(d + 1)],
                    [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(d + 1)],
                )
                vert = [(P1Point.affine(float(t)), 1) for t in range(k)]
                S2 = irreducible_spectral(F, vert, 1, q)
                if S2.self_intersection() != 4 * c2 or S2.c2 != c2:
                    problems.append(("irreducible S.S", c2))
    for c2 in range(1, GENUS_MAX_DEGREE + 3):
        for k in range(c2):
            if c2 - k > GENUS_MAX_DEGREE:
                continue
            ref = oracles.riemann_hurwitz_genus(c2 - k, GENUS_Q, seed=seed + 31 * c2 + k)
            if bisection_genus(c2, k) != ref:
                problems.append(("genus", c2, k, ref))
    return not problems, f"{len(problems)} violations"


# -- 7 ----------------------------------------------------------------------

def criterion_poisson(seed: int = 7) -> Result:
    q = 0.5
    regular = [SplittingType.sample(SplitKind.REGULAR_DISTINCT, q=q), SplittingType.sample(SplitKind.ATIYAH_NONSPLIT, q=q)]
    problems = []
    for c2 in range(1, POISSON_MAX_C2 + 1):
        for s1 in regular:
            for s2 in regular:
                if poisson_rank(c2, s1, s2) != 4 * c2 - 2:
                    problems.append((c2, s1.kind, s2.kind))
    jump = SplittingType.sample(SplitKind.UNSTABLE_JUMP, h=1, q=q)
    for other in regular:
        for pair in ((jump, other), (other, jump)):
            if poisson_rank(1, *pair) != 0:
                problems.append(("jump", pair))
    X = HopfManifold((q, q))
    for curve in (1, 2):
        E = FiltrableRank2(X, Factor((0, 0), 1.3), 1, Factor((0, 0), 0.9j), (JumpRecord(curve, (1,)),))
        if leaf_of_bundle(E).rank != 0:
            problems.append(("leaf", curve))
    return not problems, f"{len(problems)} violations"


# -- 8 ----------------------------------------------------------------------

def _higher(X, m3):
    sub = Factor((-1, -1, m3))
    return classify_rank2_higher(X, sub, Factor.identity(3), ideal=(IdealComponent(1, 2, 1, 1),))


def criterion_higher(seed: int = 8) -> Result:
    X = HopfManifold(HIGHER_MU)
    problems = []
    for m3 in list(HIGHER_STABLE) + list(HIGHER_UNSTABLE):
        t = _higher(X, m3)
        want = Status.STABLE if m3 in HIGHER_STABLE else Status.UNSTABLE
        if t.variant is not HigherVariant.IDEAL_EXTENSION or is_stable_higher(t, X).status is not want:
            problems.append(m3)
    rng = random.Random(seed)
    found = 0
    for _ in range(HIGHER_SAMPLES):
        Y = random_generic_triple(rng)
        t = find_stable_higher(Y, HIGHER_MAX_TOTAL)
        found += t is not None and is_stable_higher(t, Y).status is Status.STABLE
    ok = not problems and found == HIGHER_SAMPLES
    return ok, f"boundary mismatches {problems}, existence {found}/{HIGHER_SAMPLES}"


# -- 9 ----------------------------------------------------------------------

def criterion_covers(seed: int = 9) -> Result:
    rng = random.Random(seed)
    X = HopfManifold((0.31, 0.47))
    m1, m2 = X.mu
    problems = []
    close = lambda x, y: abs(x - y) <= 1e-9 * max(1.0, abs(y))  # noqa: E731
    for r in (2, 3):
        for branch in Branch:
            ks = (0, 1, r) if branch is Branch.EMPTY else (None,)
            for k in ks:
                c = classify_cyclic_cover(X, r, branch, k)
                if branch is Branch.EMPTY:
                    if k == r:
                        good = c.kind is CoverKind.UNRAMIFIED and close(c.mu[0], m1**r) and close(c.mu[1], m2**r)
                    else:
                        good = c.kind is CoverKind.DISCONNECTED and c.count == r
                elif branch is Branch.T1:
                    good = c.kind is CoverKind.RAMIFIED and c.mu[0] == m1 and close(c.mu[1] ** r, m2) and c.map_exponents == (1, r)
                elif branch is Branch.T2:
                    good = c.kind is CoverKind.RAMIFIED and c.mu[1] == m2 and close(c.mu[0] ** r, m1) and c.map_exponents == (r, 1)
                else:
                    good = c.kind is CoverKind.NON_PRIMARY and c.d == -r and close(c.beta**r, m2 / m1)
                M = Factor((rng.randint(-3, 3), rng.randint(-3, 3)), _random_unit_arg(rng))
                push = pushforward_rank2(c, M)
                if not good or push["c2"] != 0 or not push["filtrable"]:
                    problems.append((r, str(branch), k))
    return not problems, f"{len(problems)} case mismatches"


# -- 10 ---------------------------------------------------------------------

def criterion_moduli(seed: int = 10) -> Result:
    problems = []
    for c2 in range(11):
        M = moduli_dimension(None, c2)
        if M.dim != 4 * c2 or M.nonempty != (c2 > 0):
            problems.append(("moduli", c2))
    for m in range(1, 6):
        for k in range(1, 6):
            P = monopole_parameters(m, k)
            if P.dim != 2 * k or P.parametrization["projection_space_dim"] != 2 * k - 2:
                problems.append(("monopole", m, k))
            if k == 1 and P.parametrization["base"] != [f"D_{m}", "Pic^1(T_1)"]:
                problems.append(("monopole base", m))
    return not problems, f"{len(problems)} violations"


CRITERIA: List[Tuple[str, Callable[[], Result]]] = [
    ("cohomology tables", criterion_cohomology),
    ("degree normalisations", criterion_degree),
    ("stability domain geometry", criterion_domain),
    ("brute-force stability oracle", criterion_stability_oracle),
    ("jump and modification bookkeeping", criterion_jumps),
    ("spectral arithmetic", criterion_spectral),
    ("poisson rank", criterion_poisson),
    ("higher-dimensional stability", criterion_higher),
    ("cover case table", criterion_covers),
    ("moduli descriptors", criterion_moduli),
]


def run_all() -> Dict:
    start = time.perf_counter()
    rows = []
    for k, (name, fn) in enumerate(CRITERIA, 1):
        try:
            ok, detail = fn()
        except HopfError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append({"id": k, "name": name, "passed": bool(ok), "detail": detail})
    elapsed = time.perf_counter() - start
    rows.append(
        {"id": 11, "name": "selftest runtime", "passed": elapsed < SELFTEST_SECONDS, "detail": f"{elapsed:.2f}s"}
    )
    passed = sum(r["passed"] for r in rows)
    return {"passed": passed, "failed": len(rows) - passed, "criteria": rows}
