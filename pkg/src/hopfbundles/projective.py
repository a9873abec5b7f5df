"""Points of the projective line and rational self-maps of it."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .config import DEFAULT_TOL
from .errors import DomainError


@dataclass(frozen=True)
class P1Point:
    """Homogeneous point [u : v]; the larger-modulus coordinate is scaled to 1."""

    u: complex
    v: complex

    def __post_init__(self):
        u, v = complex(self.u), complex(self.v)
        if u == 0 and v == 0:
            raise DomainError("[0 : 0] is not a point of P^1")
        s = u if abs(u) >= abs(v) else v
        object.__setattr__(self, "u", u / s)
        object.__setattr__(self, "v", v / s)

    @classmethod
    def affine(cls, t: complex) -> "P1Point":
        return cls(t, 1)

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(1, 0)

    @property
    def is_infinity(self) -> bool:
        return self.v == 0

    def close(self, other: "P1Point", tol: float = DEFAULT_TOL) -> bool:
        return abs(self.u * other.v - self.v * other.u) <= tol

    def to_affine(self) -> complex:
        if self.v == 0:
            return complex("inf")
        return self.u / self.v


@dataclass(frozen=True)
class RationalMap:
    """``F(t) = P(t) / Q(t)`` with coefficient lists in increasing degree.

    Both lists are padded to a common length ``d + 1``; the map is evaluated
    projectively so that poles give the point at infinity.  The scaling is
    canonical: the highest-degree non-zero coefficient of ``Q`` is 1 (or of
    ``P`` when ``Q`` vanishes identically).
    """

    num: Tuple[complex, ...]
    den: Tuple[complex, ...]

    def __post_init__(self):
        num = [complex(c) for c in self.num]
        den = [complex(c) for c in self.den]
        d = max(len(num), len(den))
        num += [0j] * (d - len(num))
        den += [0j] * (d - len(den))
        while d > 1 and num[-1] == 0 and den[-1] == 0:
            num.pop()
            den.pop()
            d -= 1
        ref = next((c for c in reversed(den) if c != 0), None)
        if ref is None:
            ref = next((c for c in reversed(num) if c != 0), None)
        if ref is None:
            raise DomainError("numerator and denominator both vanish")
        object.__setattr__(self, "num", tuple(c / ref for c in num))
        object.__setattr__(self, "den", tuple(c / ref for c in den))

    @classmethod
    def constant(cls, value: P1Point) -> "RationalMap":
        return cls((value.u,), (value.v,))

    @property
    def degree(self) -> int:
        """Formal degree max(deg P, deg Q); common factors are not cancelled."""
        deg = 0
        for k in range(len(self.num)):
            if self.num[k] != 0 or self.den[k] != 0:
                deg = k
        return deg

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    def __call__(self, x: P1Point) -> P1Point:
        d = len(self.num) - 1
        p = sum(c * x.u**k * x.v ** (d - k) for k, c in enumerate(self.num))
        q = sum(c * x.u**k * x.v ** (d - k) for k, c in enumerate(self.den))
        if p == 0 and q == 0:
            raise DomainError("rational map has a base point here")
        return P1Point(p, q)


def coefficients(values: Sequence) -> Tuple[complex, ...]:
    return tuple(complex(v) for v in values)
