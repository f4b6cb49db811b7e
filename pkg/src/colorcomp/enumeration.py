"""Exhaustive generators for colored and domino compositions.

Every generator is lazy and emits objects in lexicographic order of the
flattened part (or tile) tuples.  Because all objects in one stream have
the same number of parts, lexicographic order splits cleanly at any fixed
position: the generators walk a short prefix recursively and splice on
precomputed two-element suffix lists, which keeps the per-object cost low
enough for streams of tens of millions.
"""
from __future__ import annotations

from typing import Iterator, Optional

from .core import ColorLaw, ColoredComposition, ColoredPart, DominoComposition, DominoTile, as_weights

_TAIL = 2


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def iter_colored_parts(w, nu: int, k: int) -> Iterator[tuple[ColoredPart, ...]]:
    """Raw part tuples behind :func:`enumerate_colored`, same order."""
    w = as_weights(w)
    _check_positive(nu=nu, k=k)
    w.require(nu)
    w.require_nonnegative()
    return _colored_parts(w.weights, nu, k)


def _colored_parts(ws: tuple[int, ...], nu: int, k: int) -> Iterator[tuple[ColoredPart, ...]]:
    if k > nu:
        return
    tokens = [None] + [[ColoredPart(s, c) for c in range(1, ws[s - 1] + 1)] for s in range(1, nu + 1)]
    cache: dict[tuple[int, int], list] = {}

    def tails(s: int, r: int) -> list:
        key = (s, r)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if r == 1:
            out = [(t,) for t in tokens[s]] if s >= 1 else []
        else:
            out = []
            for size in range(1, s - r + 2):
                rest = tails(s - size, r - 1)
                if rest:
                    for t in tokens[size]:
                        head = (t,)
                        out.extend([head + x for x in rest])
        cache[key] = out
        return out

    tail_len = min(k, _TAIL)

    def heads(s: int, r: int, prefix: tuple) -> Iterator[tuple[tuple, int]]:
        if r == 0:
            yield prefix, s
            return
        # leave at least one unit for each of the r - 1 + tail_len later parts
        for size in range(1, s - (r - 1 + tail_len) + 1):
            for t in tokens[size]:
                yield from heads(s - size, r - 1, prefix + (t,))

    for prefix, rem in heads(nu, k - tail_len, ()):
        for suffix in tails(rem, tail_len):
            yield prefix + suffix


def enumerate_colored(w, nu: int, k: int) -> Iterator[ColoredComposition]:
    """All ``w``-color compositions of ``nu`` with ``k`` parts, each once.

    Part ``i`` may take colors ``1..w_i``; a zero weight bans the part.
    """
    return map(ColoredComposition, iter_colored_parts(w, nu, k))


def enumerate_colored_law(law: ColorLaw, nu: int, k: int) -> Iterator[ColoredComposition]:
    law.require_enumerable()
    _check_positive(nu=nu)
    return enumerate_colored(law.weights(nu), nu, k)


def iter_domino_tiles(law: ColorLaw, n: int, k: int, j: int) -> Iterator[tuple[DominoTile, ...]]:
    """Raw tile tuples of the stratum ``T^{a,b}_j(n, k)`` in canonical order."""
    law.require_enumerable()
    _check_positive(n=n, k=k)
    if j < 0 or j > k:
        raise ValueError(f"stratum index j={j} must satisfy 0 <= j <= k={k}")
    return _domino_tiles(law.a, law.b, n, k, j)


def _domino_tiles(a: int, b: int, n: int, k: int, j: int) -> Iterator[tuple[DominoTile, ...]]:
    if (j and not a) or (j < k and not b):
        return
    target = n + j
    # every tile sum alpha+beta lies in [2, 2n] for nonzero tiles, [1, n] for zero tiles
    cache: dict[tuple[int, int, int], list] = {}

    def feasible(s: int, nz: int, z: int) -> bool:
        return 2 * nz + z <= s <= 2 * n * nz + n * z

    def choices(s: int, nz: int, z: int) -> Iterator[tuple[DominoTile, int, int, int]]:
        """First tiles in lex order, with the state left for the rest."""
        for alpha in range(1, n + 1):
            if alpha > s:
                break
            if z and feasible(s - alpha, nz, z - 1):
                for color in range(1, b + 1):
                    yield DominoTile(alpha, 0, color), s - alpha, nz, z - 1
            if nz:
                for beta in range(1, min(n, s - alpha) + 1):
                    if feasible(s - alpha - beta, nz - 1, z):
                        for color in range(1, a + 1):
                            yield DominoTile(alpha, beta, color), s - alpha - beta, nz - 1, z

    def tails(s: int, nz: int, z: int) -> list:
        key = (s, nz, z)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if nz + z == 0:
            out = [()] if s == 0 else []
        else:
            out = []
            for tile, s2, nz2, z2 in choices(s, nz, z):
                head = (tile,)
                out.extend([head + x for x in tails(s2, nz2, z2)])
        cache[key] = out
        return out

    def heads(s: int, nz: int, z: int, depth: int, prefix: tuple):
        if depth == 0:
            yield prefix, s, nz, z
            return
        for tile, s2, nz2, z2 in choices(s, nz, z):
            yield from heads(s2, nz2, z2, depth - 1, prefix + (tile,))

    if not feasible(target, j, k - j):
        return
    tail_len = min(k, _TAIL)
    for prefix, s, nz, z in heads(target, j, k - j, k - tail_len, ()):
        for suffix in tails(s, nz, z):
            yield prefix + suffix


def enumerate_domino(law: ColorLaw, n: int, k: int, j: Optional[int] = None) -> Iterator[DominoComposition]:
    """Domino compositions in ``T^{a,b}_j(n, k)``.

    Without ``j`` the strata ``j = 0 .. min(n, k)`` are concatenated in
    increasing ``j``.
    """
    law.require_enumerable()
    _check_positive(n=n, k=k)
    if j is not None and (j < 0 or j > k):
        raise ValueError(f"stratum index j={j} must satisfy 0 <= j <= k={k}")
    strata = [j] if j is not None else range(min(n, k) + 1)
    return _wrap_dominoes(law, n, k, strata)


def _wrap_dominoes(law, n, k, strata) -> Iterator[DominoComposition]:
    for jj in strata:
        for tiles in iter_domino_tiles(law, n, k, jj):
            yield DominoComposition(n, tiles)


def enumerate_restricted_signed(nu: int, k: int) -> Iterator[tuple[ColoredComposition, int]]:
    """Compositions for the signed ``n - 2`` count, with their signs.

    Parts of size 1 take a single color, size 2 is banned, size ``i > 2``
    takes ``i - 2`` colors.  The sign is ``(-1)**(number of 1's)``.
    """
    _check_positive(nu=nu, k=k)
    if k > nu:
        raise ValueError(f"k={k} exceeds nu={nu}")
    weights = [1, 0] + [i - 2 for i in range(3, nu + 1)]
    return _signed(iter_colored_parts(weights[:nu], nu, k))


def _signed(stream) -> Iterator[tuple[ColoredComposition, int]]:
    for parts in stream:
        ones = sum(1 for p in parts if p.size == 1)
        yield ColoredComposition(parts), -1 if ones % 2 else 1
