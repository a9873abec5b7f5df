"""Line bundles on elliptic curves ``T = C*/<q>`` and rank-2 restrictions.

A line bundle of degree ``d`` is stored as ``(d, cls)`` where ``cls`` is its
translation class in ``Pic^0(T) = C*/<q>``, reduced to the fundamental
annulus ``|q| < |cls| <= 1``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .config import DEFAULT_TOL
from .errors import DomainError
from .projective import P1Point


def reduce_log(log_modulus: float, argument: float, q: complex) -> complex:
    """Representative of ``exp(log_modulus + i*argument)`` in the annulus."""
    lq = math.log(abs(q))
    k = math.floor(log_modulus / lq)
    # log_modulus / lq can land a hair below an integer; renormalise once
    r = log_modulus - k * lq
    if r > 0:
        k -= 1
        r -= lq
    elif r <= lq:
        k += 1
        r += lq
    return cmath.rect(math.exp(r), argument - k * cmath.phase(q))


def reduce_annulus(x: complex, q: complex) -> complex:
    x = complex(x)
    if x == 0:
        raise DomainError("0 is not in C*")
    return reduce_log(math.log(abs(x)), cmath.phase(x), q)


def same_class(x: complex, y: complex, q: complex, tol: float = DEFAULT_TOL) -> bool:
    """True when ``x / y`` lies in the subgroup generated by ``q``."""
    r = complex(x) / complex(y)
    k = round(math.log(abs(r)) / math.log(abs(q)))
    return abs(r / q**k - 1) < tol


@dataclass(frozen=True)
class EllipticPic:
    d: int
    cls: complex
    q: complex

    def __post_init__(self):
        q = complex(self.q)
        if not 0 < abs(q) < 1:
            raise DomainError("curve modulus must satisfy 0 < |q| < 1")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "cls", reduce_annulus(self.cls, q))

    @classmethod
    def trivial(cls, q: complex) -> "EllipticPic":
        return cls(0, 1, q)

    def _check(self, other: "EllipticPic"):
        if abs(self.q - other.q) > DEFAULT_TOL:
            raise DomainError("line bundles live on different curves")

    def __mul__(self, other: "EllipticPic") -> "EllipticPic":
        self._check(other)
        return EllipticPic(self.d + other.d, self.cls * other.cls, self.q)

    def __truediv__(self, other: "EllipticPic") -> "EllipticPic":
        self._check(other)
        return EllipticPic(self.d - other.d, self.cls / other.cls, self.q)

    def inverse(self) -> "EllipticPic":
        return EllipticPic(-self.d, 1 / self.cls, self.q)

    def is_trivial(self, tol: float = DEFAULT_TOL) -> bool:
        return self.d == 0 and same_class(self.cls, 1, self.q, tol)

    def equals(self, other: "EllipticPic", tol: float = DEFAULT_TOL) -> bool:
        self._check(other)
        return self.d == other.d and same_class(self.cls, other.cls, self.q, tol)


def h0_line(L: EllipticPic, tol: float = DEFAULT_TOL) -> int:
    """``dim H^0(T, L)`` by Riemann-Roch on a genus-one curve."""
    if L.d > 0:
        return L.d
    if L.d < 0:
        return 0
    return 1 if L.is_trivial(tol) else 0


class SplitKind(str, Enum):
    REGULAR_DISTINCT = "regular"
    NONREGULAR_SPLIT = "nonregular"
    ATIYAH_NONSPLIT = "atiyah"
    UNSTABLE_JUMP = "jump"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SplittingType:
    """Isomorphism type of a rank-2 bundle restricted to an elliptic curve.

    ``lam1``/``lam2`` are the two line bundles of the associated graded:
    distinct degree-0 bundles, a repeated one, the one under an Atiyah
    extension, or ``lam1`` of degree ``-h`` and ``lam2 = lam1^{-1} delta``.
    """

    kind: SplitKind
    lam1: EllipticPic
    lam2: EllipticPic

    def __post_init__(self):
        kind = SplitKind(self.kind)
        object.__setattr__(self, "kind", kind)
        l1, l2 = self.lam1, self.lam2
        if kind is SplitKind.UNSTABLE_JUMP:
            if l1.d >= 0:
                raise DomainError("a jump needs lam1 of negative degree -h")
            if l1.d + l2.d != 0:
                raise DomainError("degrees of a jump must sum to zero")
            return
        if l1.d != 0 or l2.d != 0:
            raise DomainError("semistable splitting types have degree-0 summands")
        same = l1.equals(l2)
        if kind is SplitKind.REGULAR_DISTINCT and same:
            raise DomainError("RegularDistinct needs lam1 != lam2")
        if kind is not SplitKind.REGULAR_DISTINCT and not same:
            raise DomainError(f"{kind.name} needs lam1 == lam2")

    @property
    def height(self) -> int:
        return -self.lam1.d if self.kind is SplitKind.UNSTABLE_JUMP else 0

    @classmethod
    def regular(cls, lam1: EllipticPic, lam2: EllipticPic) -> "SplittingType":
        return cls(SplitKind.REGULAR_DISTINCT, lam1, lam2)

    @classmethod
    def nonregular(cls, lam: EllipticPic) -> "SplittingType":
        return cls(SplitKind.NONREGULAR_SPLIT, lam, lam)

    @classmethod
    def atiyah(cls, lam: EllipticPic) -> "SplittingType":
        return cls(SplitKind.ATIYAH_NONSPLIT, lam, lam)

    @classmethod
    def jump(cls, lam: EllipticPic, delta: Optional[EllipticPic] = None) -> "SplittingType":
        if delta is None:
            delta = EllipticPic.trivial(lam.q)
        return cls(SplitKind.UNSTABLE_JUMP, lam, lam.inverse() * delta)

    @classmethod
    def sample(cls, kind, h: int = 1, q: complex = 0.5) -> "SplittingType":
        """A representative of ``kind`` with fixed, non-special classes."""
        kind = SplitKind(kind)
        lam = EllipticPic(0, 0.7 * cmath.exp(0.3j), q)
        if kind is SplitKind.REGULAR_DISTINCT:
            return cls.regular(lam, lam.inverse())
        if kind is SplitKind.NONREGULAR_SPLIT:
            return cls.nonregular(lam)
        if kind is SplitKind.ATIYAH_NONSPLIT:
            return cls.atiyah(lam)
        if h < 1:
            raise DomainError("jump height must be positive")
        return cls.jump(EllipticPic(-h, lam.cls, q))


# Atiyah's indecomposable F_r has h^0 = 1, and F_2 (x) F_2 = F_1 + F_3.
_ATIYAH_END_SUMMANDS = (1, 3)


def _h0_atiyah(rank: int) -> int:
    return 1


def h0_end(st: SplittingType, tol: float = DEFAULT_TOL) -> int:
    """``dim H^0(T, End(V))`` for the restricted bundle V."""
    if st.kind is SplitKind.ATIYAH_NONSPLIT:
        # End(lam (x) F_2) = F_2 (x) F_2
        return sum(_h0_atiyah(r) for r in _ATIYAH_END_SUMMANDS)
    l1, l2 = st.lam1, st.lam2
    one = EllipticPic.trivial(l1.q)
    return sum(h0_line(L, tol) for L in (one, l1 / l2, l2 / l1, one))


def h0_ad(st: SplittingType, tol: float = DEFAULT_TOL) -> int:
    """Trace-free endomorphisms: ``h0_end - 1``."""
    return h0_end(st, tol) - 1


REGULAR_KINDS = frozenset({SplitKind.REGULAR_DISTINCT, SplitKind.ATIYAH_NONSPLIT})


def is_regular(st: SplittingType, regular_kinds=REGULAR_KINDS) -> bool:
    """Regularity predicate; the set of kinds counted as regular is configurable."""
    return st.kind in regular_kinds


# -- quotient of T by the involution lam -> delta / lam ---------------------

def _p_series(w: complex, q: complex) -> complex:
    """``sum_n q^n w / (1 - q^n w)^2``: even, q-periodic, double pole at w = 1."""
    lq = -math.log(abs(q))
    N = int(math.ceil(45.0 / lq)) + 2
    total = 0j
    for k in range(-N, N + 1):
        qk = q**k
        total += qk * w / (1 - qk * w) ** 2
    return total


def eta(lam_cls: complex, delta_cls: complex, q: complex, tol: float = DEFAULT_TOL) -> P1Point:
    """Image of ``lam`` under ``T -> T / (lam ~ delta/lam) = P^1``.

    With ``s`` the principal square root of the reduced class of delta, the
    substitution ``w = lam / s`` turns the involution into ``w -> 1/w`` and
    the quotient map is the even elliptic function ``_p_series``.
    """
    s = cmath.sqrt(reduce_annulus(delta_cls, q))
    w = reduce_annulus(complex(lam_cls) / s, q)
    if same_class(w, 1, q, tol):
        return P1Point.infinity()
    return P1Point.affine(_p_series(w, q))


def involution(lam_cls: complex, delta_cls: complex, q: complex) -> complex:
    return reduce_annulus(complex(delta_cls) / complex(lam_cls), q)
