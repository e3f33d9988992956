"""Exact Ehrhart data for slices of the cube ``[0,r]^n`` by ``sum x = s``.

Hypersimplices are the slices with ``r = 1`` and dilated simplices the slices
with ``s = r``.  Everything is plain Python integers, so there is no overflow.
"""

from __future__ import annotations

import math
from functools import lru_cache


class InvalidParams(ValueError):
    pass


class NegativeCoefficient(ArithmeticError):
    pass


class LengthMismatch(ValueError):
    pass


def binomial(m: int, k: int) -> int:
    """Exact ``C(m, k)``; zero when ``k > m``."""
    if m < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return math.comb(m, k)


def lattice_count_slice(r: int, s: int, n: int, t: int) -> int:
    """Number of ``x in Z^n`` with ``0 <= x_i <= t*r`` and ``sum x = t*s``.

    Coefficient of ``x^(ts)`` in ``(1 + x + ... + x^(tr))^n``, by truncated
    convolution with running prefix sums.
    """
    if r < 1 or n < 1 or not 0 <= s <= r * n or t < 0:
        raise InvalidParams(f"bad slice parameters r={r}, s={s}, n={n}, t={t}")
    top, target = t * r, t * s
    poly = [1] + [0] * target
    for _ in range(n):
        prefix = 0
        new = [0] * (target + 1)
        for d in range(target + 1):
            prefix += poly[d]
            if d - top - 1 >= 0:
                prefix -= poly[d - top - 1]
            new[d] = prefix
        poly = new
    return poly[target]


def hstar_from_counts(counts, n: int) -> tuple[int, ...]:
    """h*-vector of an ``(n-1)``-dimensional polytope from ``L(0..n-1)``.

    Multiplies the Ehrhart series by ``(1-x)^n`` and keeps the first ``n``
    coefficients.
    """
    counts = list(counts)
    if len(counts) != n or n < 1:
        raise LengthMismatch(f"need exactly {n} counts, got {len(counts)}")
    h = tuple(
        sum((-1) ** i * binomial(n, i) * counts[j - i] for i in range(j + 1))
        for j in range(n)
    )
    if h[0] != 1 or any(c < 0 for c in h):
        raise NegativeCoefficient(f"inconsistent counts {counts}: h* = {h}")
    return h


def ehrhart_counts(r: int, s: int, n: int) -> tuple[int, ...]:
    return tuple(lattice_count_slice(r, s, n, t) for t in range(n))


def hstar_slice(r: int, s: int, n: int) -> tuple[int, ...]:
    """h*-vector (length ``n``, untrimmed) of ``{x in [0,r]^n : sum x = s}``."""
    if r < 1 or n < 1 or not 1 <= s <= r * n - 1:
        raise InvalidParams(f"slice needs 1 <= s <= rn-1, got r={r}, s={s}, n={n}")
    return hstar_from_counts(ehrhart_counts(r, s, n), n)


def hstar_simplex(r: int, n: int) -> tuple[int, ...]:
    """h*-vector of the ``r``-th dilate of the standard ``(n-1)``-simplex.

    Uses the closed form ``L(t) = C(n-1+rt, n-1)`` for the lattice counts.
    """
    if r < 1 or n < 2:
        raise InvalidParams(f"simplex needs r >= 1, n >= 2, got r={r}, n={n}")
    return tuple(
        sum((-1) ** i * binomial(n, i) * binomial(n - 1 + r * (j - i), n - 1) for i in range(j + 1))
        for j in range(n)
    )


@lru_cache(maxsize=None)
def eulerian(m: int, k: int) -> int:
    """Number of permutations of ``{1..m}`` with exactly ``k`` descents."""
    if m < 0:
        return 0
    if m == 0:
        return 1 if k == 0 else 0
    if not 0 <= k <= m - 1:
        return 0
    return (k + 1) * eulerian(m - 1, k) + (m - k) * eulerian(m - 1, k - 1)


def worpitzky_check(m: int, p: int) -> bool:
    """Check ``m^p == sum_k A(p, k) * C(m + k, p)``."""
    return m**p == sum(eulerian(p, k) * binomial(m + k, p) for k in range(p))
