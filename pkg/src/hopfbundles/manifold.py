"""Diagonal Hopf manifolds ``C^n - {0} / (z -> mu z)`` and their divisors."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL
from .errors import DomainError
from .factors import Factor, detect_resonance, search_monomial
from .projective import P1Point


class Kind(str, Enum):
    CLASSICAL = "classical"
    GENERIC = "generic"
    RESONANT = "resonant"
    HYPERRESONANT = "hyperresonant"
    OTHER = "other"

    def __str__(self):
        return self.value


def _validate(mu: Sequence[complex], tol: float) -> Tuple[complex, ...]:
    mu = tuple(complex(m) for m in mu)
    if len(mu) < 2:
        raise DomainError("a Hopf manifold needs n >= 2 multipliers")
    for i, m in enumerate(mu):
        if not 0 < abs(m) < 1:
            raise DomainError(f"|mu_{i + 1}| = {abs(m)!r} is not in (0, 1)")
    for i in range(len(mu) - 1):
        if abs(mu[i]) - abs(mu[i + 1]) > tol:
            raise DomainError(
                f"multipliers must satisfy |mu_1| <= ... <= |mu_n| (fails at index {i + 1})"
            )
    return mu


def classify_manifold(
    mu: Sequence[complex], exp_bound: int = DEFAULT_EXP_BOUND, tol: float = DEFAULT_TOL
) -> Tuple[Kind, Optional[Tuple[int, ...]]]:
    """Kind of the diagonal Hopf manifold with multipliers ``mu``.

    Returns the kind together with the relation that witnessed it: ``(p, q)``
    for (hyper)resonant surfaces, the exponent vector of a relation
    ``prod(mu**m) == 1`` for ``Kind.OTHER``, ``None`` otherwise.  Genericity
    is only certified up to ``exp_bound``.
    """
    mu = _validate(mu, tol)
    n = len(mu)
    if all(abs(m - mu[0]) <= tol for m in mu):
        return Kind.CLASSICAL, None
    probe = HopfManifold(mu, Kind.OTHER)
    if n == 2:
        pq = detect_resonance(probe, exp_bound, tol)
        if pq is None:
            return Kind.GENERIC, None
        return (Kind.RESONANT if pq[0] == 1 else Kind.HYPERRESONANT), pq
    rel = search_monomial(
        probe, 0.0, 0.0, [-exp_bound] * n, [exp_bound] * n, tol, exclude_zero=True
    )
    if rel is None:
        return Kind.GENERIC, None
    return Kind.OTHER, rel


@dataclass(frozen=True)
class HopfManifold:
    """Diagonal Hopf manifold; ``kind`` is computed when not supplied."""

    mu: Tuple[complex, ...]
    kind: Optional[Kind] = None
    relation: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    exp_bound: int = field(default=DEFAULT_EXP_BOUND, compare=False, repr=False)
    tol: float = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        mu = _validate(self.mu, self.tol)
        object.__setattr__(self, "mu", mu)
        if self.kind is None:
            kind, rel = classify_manifold(mu, self.exp_bound, self.tol)
            object.__setattr__(self, "kind", kind)
            object.__setattr__(self, "relation", rel)
        else:
            object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "_logs", tuple(math.log(abs(m)) for m in mu))
        object.__setattr__(self, "_args", tuple(cmath.phase(m) for m in mu))

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def log_moduli(self) -> Tuple[float, ...]:
        return self._logs

    @property
    def arguments(self) -> Tuple[float, ...]:
        return self._args

    @property
    def is_surface(self) -> bool:
        return self.n == 2

    def curve_fibre_point(self, i: int) -> P1Point:
        """Image of the elliptic curve T_i under ``[z_1 : ... : z_n]``.

        Only meaningful for surfaces, where T_1 sits over [1 : 0] and T_2
        over [0 : 1].
        """
        if self.n != 2 or i not in (1, 2):
            raise DomainError("fibre points are defined for T_1, T_2 on surfaces")
        return P1Point(1, 0) if i == 1 else P1Point(0, 1)


@dataclass(frozen=True)
class Divisor:
    """``sum m_i H_i``; all intersections ``H_i . H_j`` vanish."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def hypersurface(cls, n: int, i: int) -> "Divisor":
        if not 1 <= i <= n:
            raise DomainError(f"hypersurface index {i} out of range 1..{n}")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(n)))

    def __add__(self, other: "Divisor") -> "Divisor":
        if len(self.coeffs) != len(other.coeffs):
            raise DomainError("divisor length mismatch")
        return Divisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Divisor":
        return Divisor(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def intersect(self, other: "Divisor") -> int:
        return 0


def canonical_divisor(X: HopfManifold) -> Divisor:
    """``K_X = -H_1 - ... - H_n`` (returned in this form for every kind)."""
    return Divisor((-1,) * X.n)


def divisor_to_line_bundle(X: HopfManifold, D: Divisor) -> Factor:
    """``O_X(sum m_i H_i) = L_{prod mu_i^m_i}``."""
    if len(D.coeffs) != X.n:
        raise DomainError("divisor and manifold dimensions differ")
    return Factor(D.coeffs)


def curve_divisor(X: HopfManifold, i: int) -> Divisor:
    """The divisor T_i on a Hopf surface: T_1 = {z_2 = 0} = H_2, T_2 = H_1."""
    if X.n != 2 or i not in (1, 2):
        raise DomainError("T_i is a divisor only on Hopf surfaces")
    return Divisor.hypersurface(2, 3 - i)
