"""Cyclic coverings of generic Hopf surfaces and non-primary Hopf surfaces."""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from .errors import DomainError
from .factors import Factor
from .manifold import HopfManifold, Kind


class Branch(str, Enum):
    EMPTY = "0"
    T1 = "t1"
    T2 = "t2"
    T1_PLUS_T2 = "t1t2"

    def __str__(self):
        return self.value


class CoverKind(str, Enum):
    DISCONNECTED = "disconnected_copies"
    UNRAMIFIED = "unramified_hopf"
    RAMIFIED = "ramified_hopf"
    NON_PRIMARY = "non_primary"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CoverDescriptor:
    """Result of the r-cyclic covering branched along ``branch``.

    ``mu`` holds the multipliers of the covering surface (for disconnected
    covers: of each component); ``map_exponents`` the powers in
    ``(z_1, z_2) -> (z_1^p, z_2^q)``.  Non-primary covers carry ``d`` and
    ``beta`` with ``mu = (mu_1,)``.
    """

    r: int
    branch: Branch
    kind: CoverKind
    mu: Tuple[complex, ...]
    k: Optional[int] = None
    count: int = 1
    map_exponents: Optional[Tuple[int, int]] = None
    d: Optional[int] = None
    beta: Optional[complex] = None

    def surface(self) -> HopfManifold:
        """Covering surface (a component, for disconnected covers) as a Hopf surface."""
        if self.kind is CoverKind.NON_PRIMARY:
            raise DomainError("a non-primary Hopf surface is not diagonal")
        return HopfManifold(tuple(sorted(self.mu, key=abs)))


def _root(x: complex, r: int) -> complex:
    return cmath.exp(cmath.log(complex(x)) / r)


def classify_cyclic_cover(
    X: HopfManifold,
    r: int,
    branch,
    k: Optional[int] = None,
    strict_lemma: bool = False,
) -> CoverDescriptor:
    """The cyclic r-covering of a generic surface branched over ``branch``.

    For an empty branch locus ``k`` is the order of the torsion line bundle
    defining the cover (0 or 1 for the trivial bundle).  Roots are principal.
    ``strict_lemma`` uses ``beta^r = mu_1`` for the non-primary case instead
    of ``beta^r = mu_1^-1 mu_2``.
    """
    if X.n != 2 or X.kind is not Kind.GENERIC:
        raise DomainError("cyclic covers are classified over generic Hopf surfaces")
    if r < 2:
        raise DomainError("cover degree must be >= 2")
    branch = Branch(branch)
    m1, m2 = X.mu
    if branch is Branch.EMPTY:
        k = 0 if k is None else int(k)
        if k < 0 or (k > 0 and r % k):
            raise DomainError(f"the order k = {k} of the defining bundle must divide r = {r}")
        if k <= 1:
            return CoverDescriptor(r, branch, CoverKind.DISCONNECTED, (m1, m2), k, count=r, map_exponents=(1, 1))
        if k == r:
            return CoverDescriptor(r, branch, CoverKind.UNRAMIFIED, (m1**r, m2**r), k, map_exponents=(1, 1))
        return CoverDescriptor(
            r, branch, CoverKind.DISCONNECTED, (m1**k, m2**k), k, count=r // k, map_exponents=(1, 1)
        )
    if k not in (None, 0, 1):
        raise DomainError("k only applies to covers with empty branch locus")
    if branch is Branch.T1:
        return CoverDescriptor(r, branch, CoverKind.RAMIFIED, (m1, _root(m2, r)), map_exponents=(1, r))
    if branch is Branch.T2:
        return CoverDescriptor(r, branch, CoverKind.RAMIFIED, (_root(m1, r), m2), map_exponents=(r, 1))
    beta = _root(m1 if strict_lemma else m2 / m1, r)
    return CoverDescriptor(r, branch, CoverKind.NON_PRIMARY, (m1,), d=-r, beta=beta)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free (+) Z_t1 (+) ...``; trivial torsion orders are dropped."""

    free: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(t for t in self.torsion if t > 1))

    def __str__(self):
        parts = ["Z"] * self.free + [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyTable:
    groups: Tuple[AbelianGroup, ...]

    def __getitem__(self, i: int) -> AbelianGroup:
        return self.groups[i]


def nonprimary_homology(d: int) -> HomologyTable:
    """Integral cohomology ``H^0 .. H^4`` of ``Theta*_d / (beta, mu)``."""
    if d == 0:
        raise DomainError("d must be non-zero")
    t = abs(d)
    Z = AbelianGroup(1)
    return HomologyTable((Z, Z, AbelianGroup(0, (t,)), AbelianGroup(1, (t,)), Z))


def pushforward_rank2(cover: CoverDescriptor, M: Factor) -> Dict:
    """Chern data of the direct image of a line bundle on the covering surface.

    Every line bundle on Y has torsion first Chern class, so ``c2 = 0`` and
    the direct image is filtrable.
    """
    if len(M.exponents) != 2:
        raise DomainError("line bundles on the covering surface have two exponents")
    out = {"rank": cover.r, "c2": 0, "filtrable": True}
    if M.is_pure and not any(M.exponents):
        out["decomposition"] = "direct sum of the powers L^-j, 0 <= j < r, of the defining bundle"
    return out
