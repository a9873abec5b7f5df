"""Slope stability of filtrable rank-2 bundles and moduli descriptors."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Dict, Optional, Tuple

from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL, THEOREM
from .errors import DomainError, PreconditionError, UnsupportedKindError
from .factors import ALL_NONNEG, ALL_NONPOS, Factor, detect_monomial
from .manifold import HopfManifold, Kind
from .rank2 import (
    FiltrableRank2,
    HigherExtensionType,
    HigherVariant,
    IdealComponent,
    modification_factor,
)


def slope(deg: float, rank: int) -> float:
    if rank < 1:
        raise DomainError("slope needs rank >= 1")
    return deg / rank


@dataclass(frozen=True)
class Annulus:
    """Open annulus ``r_lo < |z| < r_hi``."""

    r_lo: float
    r_hi: float

    @property
    def empty(self) -> bool:
        return self.r_lo >= self.r_hi

    def locate(self, r: float, tol: float = DEFAULT_TOL) -> Tuple[bool, bool]:
        """``(inside, on_boundary)``; points within ``tol`` of an edge are outside."""
        near = abs(r - self.r_lo) <= tol or abs(r - self.r_hi) <= tol
        inside = not near and self.r_lo < r < self.r_hi
        return inside, near

    def contains(self, r: float, tol: float = DEFAULT_TOL) -> bool:
        return self.locate(r, tol)[0]

    def subset_of(self, other: "Annulus") -> bool:
        return self.empty or (other.r_lo <= self.r_lo and self.r_hi <= other.r_hi)


def _lengths(l, X: HopfManifold) -> Tuple[int, ...]:
    if X.kind is Kind.CLASSICAL:
        if isinstance(l, (tuple, list)):
            l = sum(l)
        l = (int(l),)
    else:
        l = tuple(int(x) for x in l)
        if len(l) != 2:
            raise DomainError("a generic surface needs l = (l1, l2)")
    if any(x < 0 for x in l):
        raise DomainError("jump lengths must be non-negative")
    return l


def _det_shift(l: Tuple[int, ...], X: HopfManifold, convention: str) -> float:
    """``ln|delta'| - ln|delta|`` after removing all jumps."""
    if X.kind is Kind.CLASSICAL:
        return -l[0] * X.log_moduli[0]
    total = 0.0
    for curve, count in zip((1, 2), l):
        total -= count * modification_factor(X, curve, convention).log_modulus(X)
    return total


def d_domain(delta: Factor, l, X: HopfManifold, convention: str = THEOREM) -> Annulus:
    """Moduli of sub line bundles giving stable filtrable extensions.

    ``l`` is ``(l1, l2)`` on a generic surface and the total length on a
    classical one.  The outer radius is ``|delta'| / |delta|^{1/2}`` where
    delta' is the determinant once every jump is removed.
    """
    if X.n != 2:
        raise DomainError("stability domains are defined on Hopf surfaces")
    l = _lengths(l, X)
    half = 0.5 * delta.log_modulus(X)
    return Annulus(math.exp(half), math.exp(half + _det_shift(l, X, convention)))


class Status(str, Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"
    INDETERMINATE = "indeterminate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    branch: Optional[str] = None
    witness: Dict = field(default_factory=dict)
    boundary: bool = False

    @property
    def stable(self) -> Optional[bool]:
        if self.status is Status.INDETERMINATE:
            return None
        return self.status is Status.STABLE


def _surface_lengths(E: FiltrableRank2) -> Tuple[int, ...]:
    if E.X.kind is Kind.CLASSICAL:
        return (E.total_length,)
    return (E.length_on(1), E.length_on(2))


def reduced_det(E: FiltrableRank2, convention: str = THEOREM) -> Factor:
    """Determinant after all allowable modifications."""
    X = E.X
    out = E.det
    if X.kind is Kind.CLASSICAL:
        return out / Factor((E.total_length, 0))
    for curve in (1, 2):
        out = out / modification_factor(X, curve, convention) ** E.length_on(curve)
    return out


def is_stable_filtrable_surface(
    E: FiltrableRank2,
    convention: str = THEOREM,
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
    audit: bool = False,
) -> StabilityVerdict:
    """Closed-form stability of E, assuming ``E.sub`` has maximal degree.

    Generic surfaces: stable iff ``a^2 = delta' mu^-k`` with k >= 0 not zero,
    or ``|a|`` in the domain.  Classical surfaces: the domain test alone.
    """
    X = E.X
    if X.kind not in (Kind.GENERIC, Kind.CLASSICAL):
        raise UnsupportedKindError(f"no stability criterion for {X.kind} surfaces")
    a = E.sub
    if X.kind is Kind.GENERIC:
        target = a * a / reduced_det(E, convention)
        k = detect_monomial(target, X, ALL_NONPOS, exp_bound, tol, exclude_zero=True)
        if k is not None:
            v = StabilityVerdict(Status.STABLE, "condition-a", {"k": [-x for x in k]})
            return audit_maximal_sub(E, v, convention, tol) if audit else v
    D = d_domain(E.det, _surface_lengths(E), X, convention)
    r = math.exp(a.log_modulus(X))
    inside, edge = D.locate(r, tol)
    witness = {"modulus": r, "annulus": [D.r_lo, D.r_hi]}
    if inside:
        v = StabilityVerdict(Status.STABLE, "annulus", witness)
    else:
        # the destabiliser is L_a below the annulus and L_b above it
        if r <= D.r_lo + tol:
            witness["destabilizer"] = {"line_bundle": "sub", "modulus": r}
        else:
            b = math.exp(reduced_det(E, convention).log_modulus(X)) / r
            witness["destabilizer"] = {"line_bundle": "quotient", "modulus": b}
        v = StabilityVerdict(Status.UNSTABLE, "annulus", witness, boundary=edge)
    return audit_maximal_sub(E, v, convention, tol) if audit else v


def audit_maximal_sub(
    E: FiltrableRank2,
    verdict: StabilityVerdict,
    convention: str = THEOREM,
    tol: float = DEFAULT_TOL,
) -> StabilityVerdict:
    """Demote ``verdict`` when a line bundle of larger degree than L_a maps into E.

    Besides ``L_a`` only ``L_{b mu^-k}`` (k >= 0) can map in, and for k != 0
    such a bundle equals ``L_a``; so ``L_b`` is the one candidate to check.
    Under condition (a) ``L_b`` does not map in at all.
    """
    if verdict.branch == "condition-a":
        return verdict
    X = E.X
    la = E.sub.log_modulus(X)
    lb = reduced_det(E, convention).log_modulus(X) - la
    if lb < la - tol:
        w = dict(verdict.witness)
        w["larger_sub"] = {"line_bundle": "quotient", "modulus": math.exp(lb)}
        return StabilityVerdict(Status.INDETERMINATE, verdict.branch, w, verdict.boundary)
    return verdict


# -- generic manifolds of dimension >= 3 -----------------------------------

def is_stable_higher(
    t: HigherExtensionType, X: HopfManifold, tol: float = DEFAULT_TOL
) -> StabilityVerdict:
    if X.n < 3 or X.kind is not Kind.GENERIC:
        raise DomainError("is_stable_higher needs a generic manifold with n >= 3")
    if t.variant is not HigherVariant.IDEAL_EXTENSION:
        return StabilityVerdict(Status.UNSTABLE, "extension-of-line-bundles", {"variant": str(t.variant)})
    c = t.ideal
    logs = X.log_moduli
    lhs = sum(m * logs[x] for x, m in enumerate(t.m) if x not in (c.i - 1, c.j - 1))
    rhs = c.ki * logs[c.i - 1] + c.kj * logs[c.j - 1]
    witness = {"lhs": math.exp(lhs), "rhs": math.exp(rhs)}
    edge = abs(lhs - rhs) <= tol
    if lhs > rhs and not edge:
        return StabilityVerdict(Status.STABLE, "inequality", witness)
    return StabilityVerdict(Status.UNSTABLE, "inequality", witness, boundary=edge)


def find_stable_higher(
    X: HopfManifold, max_total: int = 8, max_k: int = 2, tol: float = DEFAULT_TOL
) -> Optional[HigherExtensionType]:
    """First ideal-extension type that is stable, searching sum(m) <= max_total."""
    n = X.n
    one = Factor.identity(n)
    for i, j in combinations(range(1, n + 1), 2):
        rest = [x for x in range(n) if x not in (i - 1, j - 1)]
        for ki, kj in product(range(1, max_k + 1), repeat=2):
            for total in range(1, max_total + 1):
                for m in _compositions(total, len(rest)):
                    mv = [0] * n
                    for x, v in zip(rest, m):
                        mv[x] = v
                    t = HigherExtensionType(
                        HigherVariant.IDEAL_EXTENSION, one, tuple(mv), IdealComponent(i, j, ki, kj)
                    )
                    if is_stable_higher(t, X, tol).status is Status.STABLE:
                        return t
    return None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in _compositions(total - first, parts - 1):
            yield (first,) + tail


# -- moduli ----------------------------------------------------------------

@dataclass(frozen=True)
class ModuliDescriptor:
    delta: Optional[Factor]
    c2: int
    dim: int
    nonempty: bool
    parametrization: Dict = field(default_factory=dict)


def moduli_dimension(delta: Optional[Factor], c2: int) -> ModuliDescriptor:
    if c2 < 0:
        raise DomainError("c2 must be non-negative")
    return ModuliDescriptor(
        delta, c2, 4 * c2, c2 > 0, {"kind": "stable rank-2 bundles with fixed determinant"}
    )


def c2one_parameters(
    a: Factor,
    delta: Factor,
    X: HopfManifold,
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
) -> Dict:
    """Parameters ``(a, lambda, p)`` of a stable bundle with one jump on T_1.

    The projection p is unique except when ``Hom(L_{a^-1 delta}, L_{a mu_1})``
    is non-zero through a section vanishing on T_1, i.e.
    ``a^2 delta^-1 = mu_1^e1 mu_2^e2`` with ``e1 >= -1`` and ``e2 >= 1``; then
    p runs over a projective line.
    """
    if X.n != 2 or X.kind is not Kind.GENERIC:
        raise DomainError("c2one_parameters needs a generic Hopf surface")
    D = d_domain(delta, (1, 0), X)
    r = math.exp(a.log_modulus(X))
    if not D.contains(r, tol):
        raise PreconditionError(f"|a| = {r!r} is not in D_(1,0) = ({D.r_lo!r}, {D.r_hi!r})")
    base = {"base": ["D_(1,0)", "Pic^1(T_1)"], "annulus": [D.r_lo, D.r_hi]}
    if abs(X.log_moduli[0] - X.log_moduli[1]) <= tol:
        return {**base, "projection_space_dim": 0, "relation": None}
    # shift by mu_1 mu_2^-1 so both exponents of the relation become >= 0
    shifted = a * a / delta * Factor((1, -1))
    e = detect_monomial(shifted, X, ALL_NONNEG, exp_bound, tol)
    if e is None:
        return {**base, "projection_space_dim": 0, "relation": None}
    return {**base, "projection_space_dim": 1, "relation": [e[0] - 1, e[1] + 1]}


def monopole_parameters(m: int, k: int) -> ModuliDescriptor:
    """Moduli of charge-k monopoles of mass m on a classical Hopf surface."""
    if m < 1 or k < 1:
        raise DomainError("mass and charge must be >= 1")
    proj = 2 * k - 2
    param = {
        "base": [f"D_{m}", f"Pic^{k}(T_1)"],
        "annulus_dim": 1,
        "picard_dim": 1,
        "projection_space_dim": proj,
    }
    return ModuliDescriptor(None, k, 1 + 1 + proj, True, param)
