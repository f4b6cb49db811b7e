"""Exact counts of weighted (colored) compositions.

Four independent routes are provided for ``c_{nu,k}`` and ``W_nu``:

* the closed binomial sum for the law ``w_n = a*n + b``,
* the second-order linear recurrence satisfied by ``W_nu``,
* the invert transform of an arbitrary weight prefix,
* the sum over partition profiles (a partial Bell polynomial evaluation).

All arithmetic is on Python ints.  ``b`` may be negative throughout, in
which case the numbers are signed and no longer cardinalities.
"""
from __future__ import annotations

from math import comb, factorial, prod
from typing import Iterator, NamedTuple

from .core import ColorLaw, as_weights


class PartitionProfile(NamedTuple):
    """Multiplicities ``(k_1, ..., k_n)`` of a partition of ``n``."""

    multiplicities: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(i * m for i, m in enumerate(self.multiplicities, start=1))

    @property
    def k(self) -> int:
        return sum(self.multiplicities)

    def multinomial(self) -> int:
        """Number of distinct orderings of the parts, ``k!/(k_1!...k_n!)``."""
        return factorial(self.k) // prod(factorial(m) for m in self.multiplicities)


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` for ``n >= 0``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs a nonnegative upper index, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def count_parts_closed(law: ColorLaw, nu: int, k: int) -> int:
    """Closed form for the number of ``(an+b)``-color compositions of ``nu``
    with ``k`` parts::

        sum_{j=0..k} a^j b^(k-j) C(k, j) C(nu+j-1, nu-k)

    ``0**0 == 1`` in Python, which is the convention the sum needs when
    ``a`` or ``b`` vanishes.
    """
    _check_positive(nu=nu, k=k)
    a, b = law.a, law.b
    return sum(a**j * b ** (k - j) * comb(k, j) * binomial(nu + j - 1, nu - k) for j in range(k + 1))


def count_total_closed(law: ColorLaw, nu: int) -> int:
    _check_positive(nu=nu)
    return sum(count_parts_closed(law, nu, k) for k in range(1, nu + 1))


def count_total_recurrence(law: ColorLaw, nu: int) -> int:
    """``W_nu`` from ``W_nu = (a+b+2) W_{nu-1} - (b+1) W_{nu-2}``."""
    _check_positive(nu=nu)
    a, b = law.a, law.b
    w1 = a + b
    w2 = (a + b) ** 2 + (2 * a + b)
    if nu == 1:
        return w1
    prev, cur = w1, w2
    for _ in range(nu - 2):
        prev, cur = cur, (a + b + 2) * cur - (b + 1) * prev
    return cur


def total_sequence_recurrence(law: ColorLaw, length: int) -> list[int]:
    """``[W_1, ..., W_length]`` in one pass of the recurrence."""
    if length < 1:
        return []
    a, b = law.a, law.b
    out = [a + b, (a + b) ** 2 + (2 * a + b)][:length]
    while len(out) < length:
        out.append((a + b + 2) * out[-1] - (b + 1) * out[-2])
    return out


def invert_transform(w, N: int) -> list[int]:
    """``(W_1, ..., W_N)`` where ``W(t) = w(t) / (1 - w(t))``.

    Uses ``W_n = w_n + sum_{m=1}^{n-1} w_m W_{n-m}``, i.e. a first part of
    size ``m`` followed by any composition of the remainder.
    """
    w = as_weights(w)
    if N < 0:
        raise ValueError("N must be nonnegative")
    w.require(N)
    ws = w.weights
    out: list[int] = []
    for n in range(1, N + 1):
        total = ws[n - 1]
        for m in range(1, n):
            total += ws[m - 1] * out[n - m - 1]
        out.append(total)
    return out


def partition_profiles(n: int, k: int) -> Iterator[PartitionProfile]:
    """Partitions of ``n`` into exactly ``k`` positive parts."""

    def parts(remaining: int, count: int, largest: int) -> Iterator[tuple[int, ...]]:
        if count == 0:
            if remaining == 0:
                yield ()
            return
        # the remaining count-1 parts need at least 1 each
        for p in range(min(largest, remaining - count + 1), 0, -1):
            if p * count < remaining:
                break
            for rest in parts(remaining - p, count - 1, p):
                yield (p,) + rest

    for partition in parts(n, k, n):
        mult = [0] * n
        for p in partition:
            mult[p - 1] += 1
        yield PartitionProfile(tuple(mult))


def _c_partition(ws: tuple[int, ...], n: int, k: int) -> int:
    # boundary conventions: c_{0,0} = 1, c_{m,j} = 0 for m < j, c_{m,0} = 0 for m > 0
    if n == 0 and k == 0:
        return 1
    if k == 0 or n < k:
        return 0
    total = 0
    for profile in partition_profiles(n, k):
        term = profile.multinomial()
        for i, m in enumerate(profile.multiplicities):
            if m:
                term *= ws[i] ** m
        total += term
    return total


def count_parts_partition(w, n: int, k: int) -> int:
    """``c_{n,k}(w)`` as a sum over ``k``-part partitions of ``n``.

    Each partition with multiplicities ``k_i`` contributes
    ``k!/(k_1!...k_n!) * prod w_i^{k_i}``; equivalently
    ``k!/n! * B_{n,k}(1! w_1, 2! w_2, ...)``.  Weights may be negative.
    """
    w = as_weights(w)
    _check_positive(n=n, k=k)
    w.require(n)
    return _c_partition(w.weights, n, k)


def check_convolution(x, y, a: int, b: int, n: int, k: int) -> tuple[int, int]:
    """Both sides of the convolution identity for ``c_{n,k}(a*x + b*y)``.

    ``lhs`` evaluates the combined sequence directly, ``rhs`` is
    ``sum_{m,j} C(k,j) a^j b^(k-j) c_{m,j}(x) c_{n-m,k-j}(y)``.
    ``n = k = 0`` is allowed and gives ``(1, 1)``.
    """
    x, y = as_weights(x), as_weights(y)
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    x.require(n)
    y.require(n)
    xs, ys = x.weights, y.weights
    combined = tuple(a * xi + b * yi for xi, yi in zip(xs[:n], ys[:n]))
    lhs = _c_partition(combined, n, k)
    rhs = 0
    for m in range(n + 1):
        for j in range(k + 1):
            cx = _c_partition(xs, m, j)
            if cx == 0:
                continue
            rhs += comb(k, j) * a**j * b ** (k - j) * cx * _c_partition(ys, n - m, k - j)
    return lhs, rhs


def count_domino_stratum(law: ColorLaw, n: int, k: int, j: int) -> int:
    """``|T^{a,b}_j(n, k)|``: ``a^j b^(k-j) C(k, j) C(n+j-1, n-k)``."""
    _check_positive(n=n, k=k)
    law.require_enumerable()
    if j < 0 or j > k:
        raise ValueError(f"stratum index j={j} must satisfy 0 <= j <= k={k}")
    a, b = law.a, law.b
    return a**j * b ** (k - j) * comb(k, j) * binomial(n + j - 1, n - k)


def count_parts_n_minus_1(nu: int, k: int) -> int:
    """``(n-1)``-color compositions of ``nu`` with ``k`` parts.

    Nonnegative: these are compositions with no part 1 where part ``i``
    takes ``i - 1`` colors.
    """
    _check_positive(nu=nu, k=k)
    return sum((-1) ** (k - j) * comb(k, j) * binomial(nu + j - 1, nu - k) for j in range(k + 1))


def count_parts_n_minus_2(nu: int, k: int) -> int:
    """Signed count for the weight law ``n - 2``.

    ``(-1)^nu`` on the diagonal ``k == nu``, otherwise
    ``sum_{j=1..k} (-1)^(k-j) C(k, j) C(nu-k-1, 2j-1)``.
    """
    _check_positive(nu=nu, k=k)
    if k > nu:
        raise ValueError(f"k={k} exceeds nu={nu}")
    if k == nu:
        return (-1) ** nu
    return sum((-1) ** (k - j) * comb(k, j) * binomial(nu - k - 1, 2 * j - 1) for j in range(1, k + 1))


def fibonacci(n: int) -> int:
    """``F_n`` for any integer ``n`` (``F_1 = F_2 = 1``, ``F_0 = 0``)."""
    lo, hi = 0, 1  # F_i, F_{i+1} starting at i = 0
    if n >= 0:
        for _ in range(n):
            lo, hi = hi, lo + hi
    else:
        for _ in range(-n):
            lo, hi = hi - lo, lo
    return lo


def fibonacci_identity_check(nu: int) -> tuple[int, int]:
    """``(F_{nu-3}, sum_k c_{nu,k}(n-2))``; the two agree for every ``nu >= 1``."""
    _check_positive(nu=nu)
    return fibonacci(nu - 3), sum(count_parts_n_minus_2(nu, k) for k in range(1, nu + 1))
