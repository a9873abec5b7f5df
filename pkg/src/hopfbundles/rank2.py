"""Filtrable rank-2 bundles and their classification.

A filtrable bundle on a Hopf surface is recorded by the data of an
extension ``0 -> L_a -> E -> L_b (x) I_Z -> 0``: the determinant ``ab``, the
sub line bundle ``a``, ``c2 = l(Z)``, and the jumps of E over elliptic curves
(the points of Z lying on T_1, T_2, or, on classical surfaces, on any fibre).
Positions of points off the curves are never needed, only their number.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL, LEMMA, THEOREM
from .elliptic import EllipticPic
from .errors import ClassificationError, DomainError, PreconditionError
from .factors import ALL_NONNEG, ANY, Factor, detect_monomial
from .manifold import HopfManifold, Kind, curve_divisor, divisor_to_line_bundle
from .projective import P1Point

OTHER_FIBRE = 0


@dataclass(frozen=True)
class JumpRecord:
    """Jump over T_curve (curve 1 or 2), or over the fibre ``point`` (curve 0).

    ``heights[k]`` is the height of the k-th allowable modification, so the
    length is ``len(heights)`` and the multiplicity is their sum.
    """

    curve: int
    heights: Tuple[int, ...]
    point: Optional[P1Point] = None

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        if not self.heights:
            raise DomainError("a jump needs at least one height")
        if any(h < 1 for h in self.heights):
            raise DomainError("jump heights must be positive")
        if self.curve not in (OTHER_FIBRE, 1, 2):
            raise DomainError(f"jump curve must be 0, 1 or 2, got {self.curve}")
        if self.curve == OTHER_FIBRE and self.point is None:
            raise DomainError("a jump on a general fibre needs its point of P^1")

    @property
    def height(self) -> int:
        return self.heights[0]

    @property
    def length(self) -> int:
        return len(self.heights)

    @property
    def multiplicity(self) -> int:
        return sum(self.heights)

    def fibre(self, X: HopfManifold) -> P1Point:
        if self.curve == OTHER_FIBRE:
            return self.point
        return X.curve_fibre_point(self.curve)


@dataclass(frozen=True)
class ZPoint:
    """A point of Z with multiplicity.

    ``curve`` is 1 or 2 for points on T_1/T_2 and 0 otherwise; on a classical
    surface a point off T_1, T_2 must give the fibre ``point`` it lies on.
    ``heights`` optionally fixes the jump profile (default: all heights 1).
    """

    multiplicity: int = 1
    curve: int = OTHER_FIBRE
    point: Optional[P1Point] = None
    heights: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class FiltrableRank2:
    X: HopfManifold
    det: Factor
    c2: int
    sub: Factor
    jumps: Tuple[JumpRecord, ...] = ()
    z_off: int = 0
    split: Optional[bool] = None

    def __post_init__(self):
        X = self.X
        if X.n != 2:
            raise DomainError("filtrable rank-2 descriptors live on Hopf surfaces")
        self.det._check_manifold(X)
        self.sub._check_manifold(X)
        object.__setattr__(self, "jumps", tuple(self.jumps))
        if self.c2 < 0 or self.z_off < 0:
            raise DomainError("c2 and the off-curve point count must be non-negative")
        classical = X.kind is Kind.CLASSICAL
        seen: List[P1Point] = []
        for j in self.jumps:
            if j.curve == OTHER_FIBRE and not classical:
                raise DomainError("only classical surfaces have jumps off T_1, T_2")
            f = j.fibre(X)
            if any(f.close(s) for s in seen):
                raise DomainError("two jump records on the same fibre")
            seen.append(f)
        if classical and self.z_off:
            raise DomainError("on a classical surface every point of Z lies on a fibre")
        total = sum(j.multiplicity for j in self.jumps) + self.z_off
        if total != self.c2:
            raise DomainError(
                f"jump multiplicities ({total - self.z_off}) plus off-curve points "
                f"({self.z_off}) must equal c2 = {self.c2}"
            )

    @property
    def quotient(self) -> Factor:
        return self.det / self.sub

    def length_on(self, curve: int) -> int:
        return sum(j.length for j in self.jumps if j.curve == curve)

    @property
    def total_length(self) -> int:
        return sum(j.length for j in self.jumps)

    @property
    def z_on_curve(self) -> Tuple[int, int]:
        return tuple(
            sum(j.multiplicity for j in self.jumps if j.curve == c) for c in (1, 2)
        )

    def jump_at(self, curve: int, point: Optional[P1Point] = None) -> Optional[int]:
        for k, j in enumerate(self.jumps):
            if curve != OTHER_FIBRE and j.curve == curve:
                return k
            if curve == OTHER_FIBRE and j.curve == OTHER_FIBRE and j.point.close(point):
                return k
        return None


def serre_extension(
    X: HopfManifold, L: Factor, Lp: Factor, Z: Sequence[ZPoint] = ()
) -> FiltrableRank2:
    """Descriptor of ``0 -> L -> E -> L' (x) I_Z -> 0``; ``c2 = l(Z)``."""
    heights: Dict[Tuple, List[int]] = {}
    where: Dict[Tuple, Tuple[int, Optional[P1Point]]] = {}
    z_off = 0
    for z in Z:
        if z.multiplicity < 1:
            raise DomainError("point multiplicities must be positive")
        if z.curve == OTHER_FIBRE and z.point is None:
            z_off += z.multiplicity
            continue
        hs = tuple(z.heights) if z.heights is not None else (1,) * z.multiplicity
        if sum(hs) != z.multiplicity:
            raise DomainError("jump heights must add up to the point multiplicity")
        key = ("curve", z.curve) if z.curve != OTHER_FIBRE else ("pt", _point_key(z.point))
        heights.setdefault(key, []).extend(hs)
        where[key] = (z.curve, z.point)
    jumps = tuple(
        JumpRecord(where[k][0], tuple(hs), where[k][1] if where[k][0] == OTHER_FIBRE else None)
        for k, hs in heights.items()
    )
    c2 = sum(j.multiplicity for j in jumps) + z_off
    return FiltrableRank2(X, L * Lp, c2, L, jumps, z_off)


def _point_key(p: P1Point):
    return (round(p.u.real, 9), round(p.u.imag, 9), round(p.v.real, 9), round(p.v.imag, 9))


# -- c2 = 0: extensions of line bundles ------------------------------------

class ExtensionVerdict(str, Enum):
    SPLIT_ONLY = "split_only"
    SPLIT_OR_UNIQUE_NONSPLIT = "split_or_unique_nonsplit"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExtensionClass:
    verdict: ExtensionVerdict
    m: Optional[Tuple[int, ...]]


def classify_extension_c2zero(
    a: Factor,
    b: Factor,
    X: HopfManifold,
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
) -> ExtensionClass:
    """Extensions of L_b by L_a on a generic surface.

    A non-split extension exists (and is unique) exactly when
    ``a/b = mu_1^m1 mu_2^m2`` with ``m1, m2 >= 0``.
    """
    if X.n != 2 or X.kind is not Kind.GENERIC:
        raise DomainError("classify_extension_c2zero needs a generic Hopf surface")
    m = detect_monomial(a / b, X, ALL_NONNEG, exp_bound, tol)
    if m is None:
        return ExtensionClass(ExtensionVerdict.SPLIT_ONLY, None)
    return ExtensionClass(ExtensionVerdict.SPLIT_OR_UNIQUE_NONSPLIT, m)


@dataclass(frozen=True)
class AutomorphyFactor2:
    """Upper-triangular factor ``[[a, eps z^m], [0, b]]``."""

    a: Factor
    b: Factor
    m: Tuple[int, ...]
    eps: int

    def matrix(self, X: HopfManifold, z: Sequence[complex]):
        off = 0j
        if self.eps:
            off = 1 + 0j
            for zi, mi in zip(z, self.m):
                off *= complex(zi) ** mi
        return [[self.a.value(X), off], [0j, self.b.value(X)]]


def automorphy_factor(
    cls: ExtensionClass, a: Factor, b: Factor, X: HopfManifold, eps: int, tol: float = DEFAULT_TOL
) -> AutomorphyFactor2:
    if eps not in (0, 1):
        raise DomainError("eps must be 0 or 1")
    if eps == 0:
        return AutomorphyFactor2(a, b, (0,) * X.n, 0)
    if cls.verdict is not ExtensionVerdict.SPLIT_OR_UNIQUE_NONSPLIT:
        raise ClassificationError("a non-split factor needs a/b to be a non-negative monomial")
    ratio = a / b / Factor(cls.m)
    if abs(ratio.value(X) - 1) > 10 * tol:
        raise ClassificationError("a != b * mu^m for the recorded exponents")
    return AutomorphyFactor2(a, b, cls.m, 1)


# -- elementary modifications ----------------------------------------------

def modification_factor(X: HopfManifold, curve: int, convention: str = THEOREM) -> Factor:
    """``O_X(T)`` for the curve along which a modification is performed.

    ``theorem``: modifying along T_i multiplies the determinant by mu_i^{-1}.
    ``lemma``: uses ``O_X(T_1) = L_{mu_2}``, ``O_X(T_2) = L_{mu_1}``.
    On a classical surface every fibre is ``pi^* O(1) = L_mu``.
    """
    if X.n != 2:
        raise DomainError("elementary modifications are defined on surfaces")
    if curve == OTHER_FIBRE:
        if X.kind is not Kind.CLASSICAL:
            raise DomainError("general fibres exist only on classical surfaces")
        return Factor((1, 0))
    if curve not in (1, 2):
        raise DomainError(f"no curve T_{curve}")
    if convention == THEOREM:
        return Factor(tuple(1 if k == curve - 1 else 0 for k in range(2)))
    if convention == LEMMA:
        return divisor_to_line_bundle(X, curve_divisor(X, curve))
    raise DomainError(f"unknown det convention {convention!r}")


def _check_curve_class(X: HopfManifold, curve: int, lam: EllipticPic, tol: float):
    if curve in (1, 2) and abs(lam.q - X.mu[curve - 1]) > tol:
        raise PreconditionError(f"lambda does not live on T_{curve}")


def elementary_modification(
    E: FiltrableRank2,
    curve: int,
    lam: EllipticPic,
    convention: str = THEOREM,
    point: Optional[P1Point] = None,
    tol: float = DEFAULT_TOL,
) -> FiltrableRank2:
    """Allowable modification of E along the jump on ``curve``.

    ``lam`` is the destabilising quotient, of degree ``-h`` for the current
    height h.  The determinant loses one copy of ``O_X(T)``, c2 drops by h
    and the first height is consumed.
    """
    k = E.jump_at(curve, point)
    if k is None:
        raise PreconditionError(f"E has no jump on curve {curve}")
    jump = E.jumps[k]
    if lam.d != -jump.height:
        raise PreconditionError(
            f"lambda has degree {lam.d} but the jump has height {jump.height}"
        )
    _check_curve_class(E.X, curve, lam, tol)
    rest = jump.heights[1:]
    jumps = list(E.jumps)
    if rest:
        jumps[k] = replace(jump, heights=rest)
    else:
        del jumps[k]
    return replace(
        E,
        det=E.det / modification_factor(E.X, curve, convention),
        c2=E.c2 - jump.height,
        jumps=tuple(jumps),
    )


def add_jump(
    E: FiltrableRank2,
    curve: int,
    lam: EllipticPic,
    convention: str = THEOREM,
    point: Optional[P1Point] = None,
    tol: float = DEFAULT_TOL,
) -> FiltrableRank2:
    """Inverse of :func:`elementary_modification`: ``lam`` has degree h > 0."""
    if lam.d < 1:
        raise PreconditionError("adding a jump needs lambda of positive degree")
    _check_curve_class(E.X, curve, lam, tol)
    h = lam.d
    k = E.jump_at(curve, point)
    jumps = list(E.jumps)
    if k is None:
        jumps.append(JumpRecord(curve, (h,), point if curve == OTHER_FIBRE else None))
    else:
        jumps[k] = replace(jumps[k], heights=(h,) + jumps[k].heights)
    return replace(
        E,
        det=E.det * modification_factor(E.X, curve, convention),
        c2=E.c2 + h,
        jumps=tuple(jumps),
    )


def remove_all_jumps(
    E: FiltrableRank2, convention: str = THEOREM
) -> Tuple[FiltrableRank2, Factor]:
    """Run every allowable modification; returns the result and the det ratio."""
    cur = E
    while cur.jumps:
        j = cur.jumps[0]
        q = cur.X.mu[j.curve - 1] if j.curve in (1, 2) else cur.X.mu[0]
        lam = EllipticPic(-j.height, 1, q)
        cur = elementary_modification(cur, j.curve, lam, convention, j.point)
    return cur, cur.det / E.det


# -- topology ---------------------------------------------------------------

class Filtrability(str, Enum):
    FILTRABLE = "filtrable"
    GENERICALLY_NON_FILTRABLE = "generically_non_filtrable"
    ALWAYS_FILTRABLE = "always_filtrable"

    def __str__(self):
        return self.value


def filtrability_verdict(n: int, c1_torsion: bool = True, c2: int = 0) -> Filtrability:
    if n < 2:
        raise DomainError("Hopf manifolds have n >= 2")
    if n >= 3:
        return Filtrability.ALWAYS_FILTRABLE
    if c2 < 0:
        raise DomainError("c2 must be non-negative")
    if not c1_torsion:
        raise DomainError("H^2(X, Z) = 0 on a diagonal Hopf surface, so c1 is always torsion")
    if c2 == 0:
        return Filtrability.FILTRABLE
    return Filtrability.GENERICALLY_NON_FILTRABLE


# -- generic manifolds of dimension n >= 3 ---------------------------------

@dataclass(frozen=True)
class IdealComponent:
    """``H_{k_i k_j} = p({z_i^{k_i} = z_j^{k_j} = 0})`` (indices 1-based)."""

    i: int
    j: int
    ki: int
    kj: int


class HigherVariant(str, Enum):
    DECOMPOSABLE = "decomposable"
    LINE_EXTENSION = "line_extension"
    IDEAL_EXTENSION = "ideal_extension"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class HigherExtensionType:
    """``E = L_twist (x) E'`` with E' normalised.

    decomposable: ``E' = L_s1 + L_s2`` (``summands``);
    line_extension: ``0 -> L_{mu^m} -> E' -> O -> 0`` non-split;
    ideal_extension: ``0 -> L_{mu^m mu_i^-ki mu_j^-kj} -> E' -> I_H -> 0``.
    """

    variant: HigherVariant
    twist: Factor
    m: Tuple[int, ...] = ()
    ideal: Optional[IdealComponent] = None
    summands: Tuple[Factor, ...] = field(default=())

    def normalized(self):
        return (self.variant, self.m, self.ideal, self.summands)


def _unit(n: int, i: int, k: int) -> Tuple[int, ...]:
    return tuple(k if x == i - 1 else 0 for x in range(n))


def classify_rank2_higher(
    X: HopfManifold,
    sub: Factor,
    quot: Factor,
    split: bool = False,
    ideal: Sequence[IdealComponent] = (),
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
) -> HigherExtensionType:
    """Type of ``0 -> L_sub -> E -> L_quot (x) I_Z -> 0`` on a generic X, n >= 3.

    The bundle is normalised by twisting with ``L_quot^{-1}``; what remains
    depends only on ``sub/quot``, which must be a monomial in the multipliers
    for a non-split locally free extension to exist.
    """
    n = X.n
    if n < 3 or X.kind is not Kind.GENERIC:
        raise DomainError("classify_rank2_higher needs a generic manifold with n >= 3")
    ideal = tuple(ideal)
    ratio = sub / quot
    e = detect_monomial(ratio, X, ANY, exp_bound, tol)
    one = Factor.identity(n)
    if not ideal:
        if split:
            return HigherExtensionType(
                HigherVariant.DECOMPOSABLE, quot, summands=(ratio.normalized(X, exp_bound, tol), one)
            )
        if e is None or any(x < 0 for x in e):
            raise ClassificationError(
                "H^1(L_sub/quot) = 0 unless sub/quot = mu^m with m >= 0: only the split extension exists"
            )
        return HigherExtensionType(HigherVariant.LINE_EXTENSION, quot, m=e)
    for c in ideal:
        if not (1 <= c.i <= n and 1 <= c.j <= n and c.i != c.j):
            raise ClassificationError(f"bad indices in {c}")
        if c.ki < 1 or c.kj < 1:
            raise ClassificationError("H_{k_i k_j} needs k_i, k_j >= 1")
    if split:
        raise ClassificationError("I_Z with Z non-empty is not a line bundle; E cannot split this way")
    if len(ideal) == 2:
        return _two_components(X, quot, ideal)
    if len(ideal) > 2:
        raise ClassificationError(
            "only H_{k_i k_j} (and, for n = 3, H_{k_i k_j} + H_{k_i k_l}) have "
            "length-2 locally free resolutions"
        )
    c = ideal[0]
    if e is None:
        raise ClassificationError("no locally free extension: sub/quot is not a monomial")
    if e[c.i - 1] != -c.ki or e[c.j - 1] != -c.kj:
        raise ClassificationError(
            "no locally free extension: the sub line bundle must carry mu_i^-k_i mu_j^-k_j"
        )
    m = tuple(0 if x in (c.i - 1, c.j - 1) else e[x] for x in range(n))
    if any(x < 0 for x in m):
        raise ClassificationError("no locally free extension with negative m_l")
    if not any(m):
        return HigherExtensionType(
            HigherVariant.DECOMPOSABLE,
            quot,
            ideal=c,
            summands=(Factor(_unit(n, c.j, -c.kj)), Factor(_unit(n, c.i, -c.ki))),
        )
    return HigherExtensionType(HigherVariant.IDEAL_EXTENSION, quot, m=m, ideal=c)


def _two_components(X: HopfManifold, quot: Factor, ideal) -> HigherExtensionType:
    n = X.n
    if n != 3:
        raise ClassificationError("two-component Z only occurs for n = 3")
    c1, c2 = ideal
    shared = {(c1.i, c1.ki), (c1.j, c1.kj)} & {(c2.i, c2.ki), (c2.j, c2.kj)}
    if len(shared) != 1:
        raise ClassificationError("Z = H_{k_i k_j} + H_{k_i k_l} must share exactly one (index, k)")
    (i, ki), = shared
    others = [(c.j, c.kj) if c.i == i else (c.i, c.ki) for c in (c1, c2)]
    if others[0][0] == others[1][0]:
        raise ClassificationError("the two components must meet different axes")
    # the extension is forced to split as L_{mu_i^k_i} + L_{mu_j^k_j mu_l^k_l}
    rest = Factor(tuple(sum(k for idx, k in others if idx == x + 1) for x in range(n)))
    return HigherExtensionType(
        HigherVariant.DECOMPOSABLE, quot, summands=(Factor(_unit(n, i, ki)), rest)
    )
