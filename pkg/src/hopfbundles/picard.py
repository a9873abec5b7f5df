"""Line bundles ``L_a``: degree, cohomology tables and restriction to T_i."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb
from typing import Optional, Tuple

from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL
from .elliptic import EllipticPic, reduce_log
from .errors import DomainError, UnsupportedKindError
from .factors import ALL_NEG, ALL_NONNEG, Factor, detect_monomial
from .kernels import find_relations
from .manifold import HopfManifold, Kind


@dataclass(frozen=True)
class LineBundle:
    a: Factor
    X: HopfManifold

    def __post_init__(self):
        self.a._check_manifold(self.X)

    def __mul__(self, other: "LineBundle") -> "LineBundle":
        return LineBundle(self.a * other.a, self.X)


@dataclass(frozen=True)
class CohomologyVector:
    h: Tuple[int, ...]

    def __getitem__(self, p: int) -> int:
        return self.h[p]

    def euler(self) -> int:
        return sum((-1) ** p * x for p, x in enumerate(self.h))


def degree(L: LineBundle) -> float:
    """Gauduchon degree with the two fixed normalisations.

    Classical: ``ln|a| / ln|mu|`` so that ``L_{mu^m}`` has degree m.  Every
    other kind: ``-ln|a|``, positive on ``L_{mu_i^m}`` for m > 0.
    """
    la = L.a.log_modulus(L.X)
    if L.X.kind is Kind.CLASSICAL:
        return la / L.X.log_moduli[0]
    return -la


def bott_dimension(N: int, m: int, p: int) -> int:
    """``dim H^p(P^N, O(m))``."""
    if N < 1:
        raise DomainError("projective dimension must be >= 1")
    if not 0 <= p <= N:
        raise DomainError(f"cohomological degree {p} outside 0..{N}")
    if p == 0 and m >= 0:
        return comb(N + m, N)
    if p == N and m <= -N - 1:
        return comb(-m - 1, N)
    return 0


def classical_power(
    a: Factor, X: HopfManifold, exp_bound: int = DEFAULT_EXP_BOUND, tol: float = DEFAULT_TOL
) -> Optional[int]:
    """The integer m with ``a = mu^m`` on a classical manifold, if any."""
    if X.kind is not Kind.CLASSICAL:
        raise UnsupportedKindError("classical_power needs a classical manifold")
    base = sum(a.exponents)
    if a.is_pure:
        return base
    # only the scalar needs searching, against the single generator mu
    hits = find_relations(
        X.log_moduli[:1],
        X.arguments[:1],
        math.log(abs(a.scalar)),
        cmath.phase(a.scalar),
        [-exp_bound],
        [exp_bound],
        tol,
    )
    if not hits:
        return None
    return base + min(hits, key=lambda m: (abs(m[0]), m))[0]


def cohomology_dims(
    L: LineBundle,
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
    classical_base_dim: Optional[int] = None,
) -> CohomologyVector:
    """``(h^0, ..., h^n)`` of L_a from the tables for classical and generic X.

    The classical table uses ``P^N`` with ``N = n - 1`` by default (the base
    of the elliptic fibration); ``classical_base_dim`` overrides N.
    """
    X, a = L.X, L.a
    n = X.n
    if X.kind is Kind.CLASSICAL:
        N = n - 1 if classical_base_dim is None else classical_base_dim
        if N > n:
            raise DomainError(f"base dimension {N} exceeds n = {n}")
        h = [0] * (n + 1)
        m = classical_power(a, X, exp_bound, tol)
        if m is not None:
            for p in range(N + 1):
                h[p] = bott_dimension(N, m, p)
        return CohomologyVector(tuple(h))
    if X.kind is not Kind.GENERIC:
        raise UnsupportedKindError(f"no cohomology table for {X.kind} manifolds")
    pos = detect_monomial(a, X, ALL_NONNEG, exp_bound, tol) is not None
    neg = detect_monomial(a, X, ALL_NEG, exp_bound, tol) is not None
    h = [0] * (n + 1)
    if n == 2:
        h[0] = int(pos)
        h[2] = int(neg)
        h[1] = h[0] + h[2]
    else:
        h[0] = h[1] = int(pos)
        h[n - 1] = h[n] = int(neg)
    return CohomologyVector(tuple(h))


def restrict_to_curve(L: LineBundle, i: int) -> Tuple[Factor, EllipticPic]:
    """Class of ``L|_{T_i}`` in ``Pic^0(T_i) = C*/<mu_i>``.

    The kernel of the restriction is generated by ``O_X(H_i) = L_{mu_i}``, so
    the i-th exponent is dropped.  Returns the remaining factor and the
    degree-0 class on ``T_i`` with its annulus representative.
    """
    X, a = L.X, L.a
    if not 1 <= i <= X.n:
        raise DomainError(f"curve index {i} out of range 1..{X.n}")
    exps = list(a.exponents)
    exps[i - 1] = 0
    rest = Factor(tuple(exps), a.scalar)
    q = X.mu[i - 1]
    cls = reduce_log(rest.log_modulus(X), rest.argument(X), q)
    return rest, EllipticPic(0, cls, q)


def restriction_class(a: Factor, X: HopfManifold, i: int) -> EllipticPic:
    return restrict_to_curve(LineBundle(a, X), i)[1]
