"""Elements of C* written as ``scalar * prod(mu_i ** e_i)``.

Line bundles on a diagonal Hopf manifold are classified by constant factors
of automorphy, so a :class:`Factor` is both an element of ``Pic(X) = C*`` and
the basic currency of every other module.  The exponent part is exact; the
scalar part is a floating point complex number.  Questions of the form
"is ``a`` a monomial in the multipliers?" are answered exactly when the
scalar is 1 and by bounded search otherwise.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd
from typing import TYPE_CHECKING, Optional, Sequence, Tuple

from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL
from .errors import DomainError
from .kernels import find_relations

if TYPE_CHECKING:
    from .manifold import HopfManifold

ANY = "any"
ALL_NONNEG = "all_nonneg"
ALL_NEG = "all_neg"
ALL_NONPOS = "all_nonpos"
SIGNS = (ANY, ALL_NONNEG, ALL_NEG, ALL_NONPOS)


@dataclass(frozen=True)
class Factor:
    exponents: Tuple[int, ...]
    scalar: complex = 1 + 0j

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        object.__setattr__(self, "scalar", complex(self.scalar))
        if self.scalar == 0:
            raise DomainError("factor scalar must be non-zero")
        if not all(math.isfinite(v) for v in (self.scalar.real, self.scalar.imag)):
            raise DomainError("factor scalar must be finite")

    @classmethod
    def identity(cls, n: int) -> "Factor":
        return cls((0,) * n)

    @classmethod
    def monomial(cls, exponents: Sequence[int]) -> "Factor":
        return cls(tuple(exponents))

    @classmethod
    def constant(cls, n: int, value: complex) -> "Factor":
        return cls((0,) * n, value)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def is_pure(self) -> bool:
        """True for pure monomials (scalar exactly 1)."""
        return self.scalar == 1

    def _check(self, other: "Factor"):
        if self.n != other.n:
            raise DomainError(f"factor length mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "Factor") -> "Factor":
        self._check(other)
        return Factor(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
            self.scalar * other.scalar,
        )

    def __truediv__(self, other: "Factor") -> "Factor":
        self._check(other)
        return Factor(
            tuple(a - b for a, b in zip(self.exponents, other.exponents)),
            self.scalar / other.scalar,
        )

    def __pow__(self, k: int) -> "Factor":
        k = int(k)
        return Factor(tuple(k * e for e in self.exponents), self.scalar**k)

    def inverse(self) -> "Factor":
        return self**-1

    def log_modulus(self, X: "HopfManifold") -> float:
        self._check_manifold(X)
        return math.log(abs(self.scalar)) + sum(
            e * lm for e, lm in zip(self.exponents, X.log_moduli)
        )

    def argument(self, X: "HopfManifold") -> float:
        """Argument of the value, not reduced modulo 2*pi."""
        self._check_manifold(X)
        return cmath.phase(self.scalar) + sum(e * a for e, a in zip(self.exponents, X.arguments))

    def value(self, X: "HopfManifold") -> complex:
        return cmath.rect(math.exp(self.log_modulus(X)), self.argument(X))

    def _check_manifold(self, X: "HopfManifold"):
        if X.n != self.n:
            raise DomainError(f"factor has {self.n} exponents but X has n={X.n}")

    def normalized(
        self, X: "HopfManifold", exp_bound: int = DEFAULT_EXP_BOUND, tol: float = DEFAULT_TOL
    ) -> "Factor":
        """Fold the scalar into the exponents when it is a detectable monomial."""
        if self.is_pure:
            return self
        d = detect_monomial(Factor.constant(self.n, self.scalar), X, ANY, exp_bound, tol)
        if d is None:
            return self
        return Factor(tuple(e + x for e, x in zip(self.exponents, d)))


def combine(f: Factor, g: Optional[Factor], op: str, k: int = 1) -> Factor:
    """Group law of Pic(X): ``op`` is ``mul``, ``div`` or ``pow`` (``g`` unused)."""
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    if op == "pow":
        return f**k
    raise DomainError(f"unknown operation {op!r}")


def _sign_box(sign: str, n: int, bound: int):
    if sign == ANY:
        return [-bound] * n, [bound] * n
    if sign == ALL_NONNEG:
        return [0] * n, [bound] * n
    if sign == ALL_NEG:
        return [-bound] * n, [-1] * n
    if sign == ALL_NONPOS:
        return [-bound] * n, [0] * n
    raise DomainError(f"unknown sign constraint {sign!r}")


def _sign_ok(m: Sequence[int], sign: str) -> bool:
    if sign == ANY:
        return True
    if sign == ALL_NONNEG:
        return all(x >= 0 for x in m)
    if sign == ALL_NEG:
        return all(x < 0 for x in m)
    return all(x <= 0 for x in m)


def _best(cands):
    # minimal infinity norm, then lexicographic
    return min(cands, key=lambda m: (max((abs(x) for x in m), default=0), m))


def search_monomial(
    X: "HopfManifold",
    log_modulus: float,
    argument: float,
    lo: Sequence[int],
    hi: Sequence[int],
    tol: float = DEFAULT_TOL,
    exclude_zero: bool = False,
) -> Optional[Tuple[int, ...]]:
    """Smallest m in the box [lo, hi] with prod(mu**m) equal to the target."""
    hits = find_relations(X.log_moduli, X.arguments, log_modulus, argument, lo, hi, tol)
    if exclude_zero:
        hits = [m for m in hits if any(m)]
    if not hits:
        return None
    return _best(hits)


def detect_monomial(
    a: Factor,
    X: "HopfManifold",
    sign: str = ANY,
    exp_bound: int = DEFAULT_EXP_BOUND,
    tol: float = DEFAULT_TOL,
    exclude_zero: bool = False,
) -> Optional[Tuple[int, ...]]:
    """Exponents m with ``a == prod(mu_i ** m_i)``, or None.

    On a generic manifold a pure monomial has a unique representation, so
    the answer is read off the exponents without any search and without the
    ``exp_bound`` limit.  Everything else goes through the bounded search,
    which reports the solution of smallest infinity norm (ties broken
    lexicographically).
    """
    a._check_manifold(X)
    lo, hi = _sign_box(sign, X.n, exp_bound)
    if a.is_pure and X.kind == "generic":
        m = a.exponents
        if not _sign_ok(m, sign) or (exclude_zero and not any(m)):
            return None
        return m
    return search_monomial(X, a.log_modulus(X), a.argument(X), lo, hi, tol, exclude_zero)


def detect_resonance(
    X: "HopfManifold", exp_bound: int = DEFAULT_EXP_BOUND, tol: float = DEFAULT_TOL
) -> Optional[Tuple[int, int]]:
    """Smallest (p, q) with ``mu_1**p == mu_2**q`` on a Hopf surface.

    Coprime pairs are preferred.  When the only relations have a common
    divisor (possible when mu_1/mu_2 is a root of unity) the smallest of
    those is returned, since a reduced relation does not exist.
    """
    if X.n != 2:
        raise DomainError("resonance is only defined for Hopf surfaces (n = 2)")
    hits = find_relations(
        X.log_moduli, X.arguments, 0.0, 0.0, [1, -exp_bound], [exp_bound, -1], tol
    )
    if not hits:
        return None
    pairs = [(p, -mq) for p, mq in hits]
    coprime = [pq for pq in pairs if gcd(*pq) == 1]
    return min(coprime or pairs, key=lambda pq: (max(pq), pq))
