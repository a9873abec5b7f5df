"""Brute-force reference computations, independent of the closed forms.

These are deliberately naive: full enumeration instead of the relation
kernel, degree comparisons instead of annuli, root counting instead of the
genus formula.
"""
from __future__ import annotations

import cmath
import math
from itertools import product
from typing import Sequence, Tuple

import numpy as np

from .elliptic import eta
from .factors import Factor
from .manifold import HopfManifold


def naive_monomial(
    value_log: float,
    value_arg: float,
    X: HopfManifold,
    box: Sequence[range],
    tol: float,
) -> list:
    """All exponent vectors in ``box`` with ``mu^m`` equal to the given value."""
    hits = []
    for m in product(*box):
        lm = sum(k * math.log(abs(x)) for k, x in zip(m, X.mu))
        am = sum(k * cmath.phase(x) for k, x in zip(m, X.mu))
        d = (am - value_arg + math.pi) % (2 * math.pi) - math.pi
        if abs(lm - value_log) < tol and abs(d) < tol:
            hits.append(m)
    return hits


def degree_generic(c: Factor, X: HopfManifold) -> float:
    return -c.log_modulus(X)


def brute_force_stable(
    a: Factor,
    delta: Factor,
    l: Tuple[int, int],
    X: HopfManifold,
    bound: int = 8,
    tol: float = 1e-9,
) -> bool:
    """Stability by enumerating destabilising line bundles of a filtrable E.

    Candidates ``L_c`` with ``c = a mu^-k`` or ``c = b mu^-k``, k in
    ``[0, bound]^2``, ``b = a^-1 delta mu_1^-l1 mu_2^-l2``.  Only subsheaves
    with torsion-free quotient count: ``a`` itself, ``b`` (k = 0) unless some
    ``b mu^-k`` with k != 0 equals ``a``, in which case ``b`` does not map in.
    E is stable iff every counted candidate has degree < deg(delta) / 2.
    """
    mu1, mu2 = X.mu
    a_val = a.value(X)
    b_val = delta.value(X) / (a_val * mu1 ** l[0] * mu2 ** l[1])
    counted = [a_val]
    b_equals_a = False
    for k1, k2 in product(range(bound + 1), repeat=2):
        if k1 == k2 == 0:
            continue
        c = b_val * mu1 ** (-k1) * mu2 ** (-k2)
        if abs(c / a_val - 1) < 1e-7:
            b_equals_a = True
    if not b_equals_a:
        counted.append(b_val)
    half = -math.log(abs(delta.value(X))) / 2
    return all(-math.log(abs(c)) < half - tol for c in counted)


def eta_branch_values(q: complex) -> list:
    """Values of the quotient map ``T -> P^1`` at the four fixed points of ``w -> 1/w``."""
    s = cmath.sqrt(q)
    return [eta(w, 1, q) for w in (1, -1, s, -s)]


def riemann_hurwitz_genus(d: int, q: complex, seed: int = 0) -> int:
    """Genus of ``{(x, w) : F(x) = eta(w)}`` for a random degree-d map F.

    The projection to x is a double cover branched where F(x) hits one of
    the four branch values of eta; the genus follows from counting those
    points with odd ramification.
    """
    rng = np.random.default_rng(seed)
    P = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    Q = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    branch = 0
    for e in eta_branch_values(q):
        if e.is_infinity:
            poly = Q
        else:
            poly = P - e.to_affine() * Q
        roots = np.roots(poly[::-1])
        branch += _odd_roots(roots)
        # a drop in degree means a root at x = infinity
        branch += (d - len(roots)) % 2
    return branch // 2 - 1


def _odd_roots(roots, tol: float = 1e-6) -> int:
    left = list(roots)
    odd = 0
    while left:
        r = left.pop()
        mult = 1 + sum(1 for s in left if abs(s - r) < tol)
        left = [s for s in left if abs(s - r) >= tol]
        odd += mult % 2
    return odd


def bidegree_sections(c2: int, e: int = 1) -> int:
    """``h^0(P^1 x P^1, O(c2, e))`` by counting bihomogeneous monomials."""
    return sum(1 for _ in product(range(c2 + 1), range(e + 1)))
