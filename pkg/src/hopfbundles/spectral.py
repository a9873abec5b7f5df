"""Spectral covers and graphs of rank-2 bundles on classical Hopf surfaces.

The Jacobian surface is the ruled surface ``P^1 x T*``.  Classes on it are
written ``s Sigma + f F`` with ``Sigma = P^1 x {pt}`` and ``F = {pt} x T*``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple, Union

from .config import DEFAULT_TOL
from .elliptic import (
    EllipticPic,
    SplittingType,
    eta,
    h0_ad,
    involution,
    reduce_log,
    same_class,
)
from .errors import (
    DomainError,
    ModelInconsistencyError,
    UndefinedCasimirError,
    UnsupportedKindError,
)
from .manifold import HopfManifold, Kind
from .projective import P1Point, RationalMap
from .rank2 import FiltrableRank2


@dataclass(frozen=True)
class RuledClass:
    s: int
    f: int

    def __add__(self, other: "RuledClass") -> "RuledClass":
        return RuledClass(self.s + other.s, self.f + other.f)

    def __rmul__(self, k: int) -> "RuledClass":
        return RuledClass(k * self.s, k * self.f)


SIGMA = RuledClass(1, 0)
FIBRE = RuledClass(0, 1)


def intersect(c1: RuledClass, c2: RuledClass) -> int:
    return c1.s * c2.f + c2.s * c1.f


@dataclass(frozen=True)
class Reducible:
    """Two sections ``P^1 x {lam}`` and ``P^1 x {delta / lam}`` (classes on T*)."""

    lam1: complex
    lam2: complex


@dataclass(frozen=True)
class Irreducible:
    """Bisection pulled back from the graph of ``F`` along ``eta``."""

    F: RationalMap


@dataclass(frozen=True)
class SpectralCover:
    vertical: Tuple[Tuple[P1Point, int], ...]
    bisection: Union[Reducible, Irreducible]
    c2: int
    delta_cls: complex
    q: complex

    def __post_init__(self):
        object.__setattr__(self, "vertical", tuple(self.vertical))
        if any(m < 1 for _, m in self.vertical):
            raise DomainError("vertical multiplicities must be positive")
        if self.k + self.bisection_degree != self.c2:
            raise DomainError("vertical count plus bisection degree must equal c2")

    @property
    def k(self) -> int:
        return sum(m for _, m in self.vertical)

    @property
    def bisection_degree(self) -> int:
        if isinstance(self.bisection, Reducible):
            return 0
        return self.bisection.F.degree

    @property
    def bisection_class(self) -> RuledClass:
        return 2 * SIGMA + self.bisection_degree * FIBRE

    @property
    def total_class(self) -> RuledClass:
        return self.bisection_class + self.k * FIBRE

    @property
    def filtrable(self) -> bool:
        return isinstance(self.bisection, Reducible)

    def self_intersection(self) -> int:
        return intersect(self.total_class, self.total_class)


def _fibre_class(a, X: HopfManifold) -> complex:
    return reduce_log(a.log_modulus(X), a.argument(X), X.mu[0])


def spectral_of_filtrable(E: FiltrableRank2) -> SpectralCover:
    """Spectral cover of a filtrable bundle: jump fibres plus two sections."""
    X = E.X
    if X.kind is not Kind.CLASSICAL:
        raise UnsupportedKindError("spectral covers are built on classical Hopf surfaces")
    vertical = tuple((j.fibre(X), j.multiplicity) for j in E.jumps)
    lam1 = _fibre_class(E.sub, X)
    lam2 = _fibre_class(E.quotient, X)
    return SpectralCover(vertical, Reducible(lam1, lam2), E.c2, _fibre_class(E.det, X), X.mu[0])


def irreducible_spectral(
    F: RationalMap,
    vertical: Sequence[Tuple[P1Point, int]],
    delta_cls: complex,
    q: complex,
) -> SpectralCover:
    c2 = F.degree + sum(m for _, m in vertical)
    return SpectralCover(tuple(vertical), Irreducible(F), c2, delta_cls, q)


def bisection_genus(c2: int, k: int) -> int:
    """Genus of a smooth irreducible bisection of class ``2 Sigma + (c2 - k) F``."""
    d = c2 - k
    if d < 1:
        raise DomainError("a smooth irreducible bisection needs c2 - k >= 1")
    return 2 * d - 1


@dataclass(frozen=True)
class GraphData:
    vertical: Tuple[Tuple[P1Point, int], ...]
    F: RationalMap
    c2: int

    @property
    def degree(self) -> int:
        return self.F.degree

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (self.c2, 1)

    @property
    def ambient_dim(self) -> int:
        """Dimension of the linear system ``|O(c2, 1)|`` on ``P^1 x P^1``."""
        return 2 * self.c2 + 1


def graph_of_spectral(S: SpectralCover, tol: float = DEFAULT_TOL) -> GraphData:
    """Image of S under ``id x eta : P^1 x T* -> P^1 x P^1``."""
    if isinstance(S.bisection, Reducible):
        b = S.bisection
        if not same_class(involution(b.lam1, S.delta_cls, S.q), b.lam2, S.q, max(tol, 1e-7)):
            raise ModelInconsistencyError("spectral cover is not invariant under the involution")
        F = RationalMap.constant(eta(b.lam1, S.delta_cls, S.q, tol))
    else:
        F = S.bisection.F
    return GraphData(S.vertical, F, S.c2)


def casimirs(G: GraphData, x1: P1Point, x2: P1Point, tol: float = DEFAULT_TOL) -> Tuple[P1Point, P1Point]:
    for x in (x1, x2):
        for p, _ in G.vertical:
            if p.close(x, tol):
                raise UndefinedCasimirError(f"{x} is a vertical point of the graph")
    return G.F(x1), G.F(x2)


def poisson_rank(c2: int, st1: SplittingType, st2: SplittingType, tol: float = DEFAULT_TOL) -> int:
    """Rank of the Poisson structure at E from its restrictions to T_1 and T_2."""
    if c2 < 1:
        raise DomainError("the Poisson structure lives on moduli with c2 >= 1")
    r = 4 * c2 - h0_ad(st1, tol) - h0_ad(st2, tol)
    if r < 0:
        raise ModelInconsistencyError(f"negative Poisson rank {r}: splitting data inconsistent with c2")
    return r


@dataclass(frozen=True)
class LeafLabel:
    C1: Optional[P1Point]
    C2: Optional[P1Point]
    rank: int
    parametrization: Dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.rank


def _restriction_type(E: FiltrableRank2, tol: float) -> SplittingType:
    # on a classical surface every fibre is the same curve, so T_1 and T_2 agree
    X = E.X
    q = X.mu[0]
    lam1 = EllipticPic(0, _fibre_class(E.sub, X), q)
    lam2 = EllipticPic(0, _fibre_class(E.quotient, X), q)
    if lam1.equals(lam2, max(tol, 1e-7)):
        return SplittingType.atiyah(lam1)
    return SplittingType.regular(lam1, lam2)


def leaf_of_bundle(E: FiltrableRank2, tol: float = DEFAULT_TOL) -> LeafLabel:
    """Symplectic leaf through a filtrable bundle with ``c2 = 1``.

    The Casimirs are ``F_E`` evaluated at the fibres of T_1 and T_2.  A jump
    on T_1 or T_2 gives a point leaf; otherwise the leaf is parametrised by
    the jump fibre ``x0`` and ``lambda in Pic^1(T_x0)``.
    """
    X = E.X
    if X.kind is not Kind.CLASSICAL:
        raise UnsupportedKindError("symplectic leaves are described on classical surfaces")
    if E.c2 != 1:
        raise DomainError("leaf_of_bundle handles c2 = 1")
    x1, x2 = X.curve_fibre_point(1), X.curve_fibre_point(2)
    (x0, _), = ((j.fibre(X), j.multiplicity) for j in E.jumps)
    if x0.close(x1, tol) or x0.close(x2, tol):
        return LeafLabel(None, None, 0, {"point": True, "x0": x0})
    G = graph_of_spectral(spectral_of_filtrable(E), tol)
    c1, c2 = casimirs(G, x1, x2, tol)
    st = _restriction_type(E, tol)
    rank = poisson_rank(1, st, st, tol)
    return LeafLabel(c1, c2, rank, {"x0": x0, "coordinates": ["x0 in P^1 - {x1, x2}", "lambda in Pic^1(T_x0)"]})


@dataclass(frozen=True)
class HigherSpectral:
    components: int
    lambdas: Tuple[complex, ...]
    vertical_multiplier: int
    cn: int
    filtrable: bool
    shape: str


def higher_spectral(X: HopfManifold, lambdas: Sequence[complex], tol: float = DEFAULT_TOL) -> HigherSpectral:
    """Spectral cover ``sum P^{n-1} x {lambda_i}`` of a bundle on a classical X, n >= 3."""
    if X.n < 3 or X.kind is not Kind.CLASSICAL:
        raise DomainError("higher_spectral needs a classical manifold with n >= 3")
    q = X.mu[0]
    lams = tuple(complex(x) for x in lambdas)
    if len(lams) < 1:
        raise DomainError("rank must be >= 1")
    t = max(tol, 1e-7)
    pairs = [(i, j) for i in range(len(lams)) for j in range(i + 1, len(lams))]
    equal = [same_class(lams[i], lams[j], q, t) for i, j in pairs]
    if not any(equal):
        shape = "decomposes"
    elif all(equal):
        shape = "twisted_pullback_candidate"
    else:
        shape = "mixed"
    return HigherSpectral(len(lams), lams, 0, 0, True, shape)
