"""Bijection between domino compositions and ``(an+b)``-color compositions.

A nonzero tile ``(alpha, beta)`` in color ``g`` becomes the part
``i = alpha + beta - 1`` in color ``i*(g-1) + beta``; a zero tile
``(alpha, 0)`` in color ``d`` becomes part ``alpha`` in color
``a*alpha + d``.  So colors ``1..a*i`` of a part come from nonzero tiles
and the top ``b`` colors from zero tiles.

``a = 0`` has no nonzero tiles and is handled by the ``*_zero_a`` pair.
"""
from __future__ import annotations

from .core import (
    T_MEMBERSHIP,
    ColorLaw,
    ColoredComposition,
    ColoredPart,
    DominoComposition,
    DominoTile,
    ValidationError,
    validate_colored,
    validate_domino,
)


def _require_positive_a(law: ColorLaw, name: str) -> None:
    if law.a < 1:
        raise ValueError(f"{name} needs a >= 1; use {name}_zero_a for a = 0")
    law.require_enumerable()


# phi and psi inline these two for speed; keep them in sync.
def tile_to_part(tile: DominoTile, a: int) -> ColoredPart:
    alpha, beta, color = tile
    if beta:
        size = alpha + beta - 1
        return ColoredPart(size, size * (color - 1) + beta)
    return ColoredPart(alpha, a * alpha + color)


def part_to_tile(part: ColoredPart, a: int) -> DominoTile:
    size, color = part
    if color <= a * size:
        # color = q*size + r with 0 < r <= size
        r = (color - 1) % size + 1
        q = (color - r) // size
        return DominoTile(size - r + 1, r, q + 1)
    return DominoTile(size, 0, color - a * size)


def phi(dc: DominoComposition, law: ColorLaw) -> ColoredComposition:
    """Map a member of ``T^{a,b}(n, k)`` to a colored composition of ``n``."""
    _require_positive_a(law, "phi")
    if not validate_domino(dc, law, len(dc.tiles), T_MEMBERSHIP):
        raise ValidationError(f"{dc!r} is not in T^{{{law.a},{law.b}}}(n, k)")
    a = law.a
    parts = []
    for alpha, beta, color in dc.tiles:
        if beta:
            size = alpha + beta - 1
            parts.append(ColoredPart(size, size * (color - 1) + beta))
        else:
            parts.append(ColoredPart(alpha, a * alpha + color))
    out = ColoredComposition(tuple(parts))
    if not validate_colored(out, law, dc.n):
        raise AssertionError(f"phi produced an invalid composition {out!r} from {dc!r}")
    return out


def psi(comp: ColoredComposition, law: ColorLaw) -> DominoComposition:
    """Inverse of :func:`phi`."""
    _require_positive_a(law, "psi")
    nu = comp.nu
    if not validate_colored(comp, law, nu):
        raise ValidationError(f"{comp!r} has a color outside 1..{law.a}i+{law.b}")
    a = law.a
    tiles = []
    for size, color in comp.parts:
        if color <= a * size:
            r = (color - 1) % size + 1
            tiles.append(DominoTile(size - r + 1, r, (color - r) // size + 1))
        else:
            tiles.append(DominoTile(size, 0, color - a * size))
    return DominoComposition(nu, tuple(tiles))


def phi_zero_a(dc: DominoComposition, law: ColorLaw) -> ColoredComposition:
    """``a = 0``: every tile is a zero tile and ``(alpha, 0)_d`` is ``alpha_d``."""
    if law.a != 0 or law.b < 1:
        raise ValueError("phi_zero_a needs a = 0 and b >= 1")
    if any(t.beta for t in dc.tiles):
        raise ValidationError("nonzero tiles do not exist when a = 0")
    if not validate_domino(dc, law, len(dc.tiles), T_MEMBERSHIP):
        raise ValidationError(f"{dc!r} is not in T^{{0,{law.b}}}(n, k)")
    return ColoredComposition(tuple([ColoredPart(t.alpha, t.color) for t in dc.tiles]))


def psi_zero_a(comp: ColoredComposition, law: ColorLaw) -> DominoComposition:
    if law.a != 0 or law.b < 1:
        raise ValueError("psi_zero_a needs a = 0 and b >= 1")
    nu = comp.nu
    if not validate_colored(comp, law, nu):
        raise ValidationError(f"{comp!r} has a color outside 1..{law.b}")
    return DominoComposition(nu, tuple([DominoTile(p.size, 0, p.color) for p in comp.parts]))


def to_colored(dc: DominoComposition, law: ColorLaw) -> ColoredComposition:
    """:func:`phi` or :func:`phi_zero_a` depending on ``law.a``."""
    return phi_zero_a(dc, law) if law.a == 0 else phi(dc, law)


def to_domino(comp: ColoredComposition, law: ColorLaw) -> DominoComposition:
    return psi_zero_a(comp, law) if law.a == 0 else psi(comp, law)
