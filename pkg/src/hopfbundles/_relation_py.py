"""Pure-Python multiplicative relation search (fallback backend).

Mirrors ``_relation.pyx`` line for line; both must return identical lists.
"""
from __future__ import annotations

import math

TWO_PI = 2.0 * math.pi


def _wrap(x: float) -> float:
    x = math.fmod(x, TWO_PI)
    if x > math.pi:
        x -= TWO_PI
    elif x <= -math.pi:
        x += TWO_PI
    return x


def find_relations(logs, args, tlog, targ, lo, hi, tol):
    """All integer vectors m with lo <= m <= hi and prod(mu_i**m_i) ~ target.

    ``logs``/``args`` are log-moduli and arguments of the generators; the
    target is given the same way.  A vector matches when the log-modulus
    residual and the argument residual (mod 2*pi) are both below ``tol``.
    The last coordinate is solved for instead of enumerated, so the cost
    is the size of the box in the first n-1 coordinates.
    """
    n = len(logs)
    last = n - 1
    lz = logs[last]
    az = args[last]
    out = []
    m = [lo[i] for i in range(last)]
    if any(lo[i] > hi[i] for i in range(n)):
        return out
    while True:
        plog = 0.0
        parg = 0.0
        for i in range(last):
            plog += m[i] * logs[i]
            parg += m[i] * args[i]
        x = (tlog - plog) / lz
        r = int(math.floor(x + 0.5))
        for c in (r - 1, r, r + 1):
            if c < lo[last] or c > hi[last]:
                continue
            if abs(plog + c * lz - tlog) >= tol:
                continue
            if abs(_wrap(parg + c * az - targ)) >= tol:
                continue
            out.append(tuple(m) + (c,))
        # odometer over the first n-1 coordinates
        i = last - 1
        while i >= 0:
            if m[i] < hi[i]:
                m[i] += 1
                break
            m[i] = lo[i]
            i -= 1
        if i < 0:
            return out
