"""Value types shared by the counting, enumeration and bijection modules.

Colors are 1-indexed throughout, so part ``3`` in its fifth color is
``ColoredPart(3, 5)``.  Everything here is immutable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

TILE_BOUNDS_ONLY = "tile_bounds_only"
T_MEMBERSHIP = "t_membership"


class ValidationError(ValueError):
    """Raised when an object violates the constraints of its color law."""


@dataclass(frozen=True)
class ColorLaw:
    """Weight law ``w_n = a*n + b``.

    ``b`` may be negative for the signed counting formulas; anything that
    builds concrete objects calls :meth:`require_enumerable` first.
    """

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("ColorLaw coefficients must be integers")
        if self.a < 0:
            raise ValueError(f"ColorLaw needs a >= 0, got a={self.a}")

    def weight(self, n: int) -> int:
        return self.a * n + self.b

    def weights(self, length: int) -> "WeightSequence":
        return WeightSequence(tuple(self.weight(i) for i in range(1, length + 1)))

    def require_enumerable(self) -> None:
        if self.b < 0:
            raise ValueError(f"b={self.b} < 0 has no enumeration semantics")


@dataclass(frozen=True)
class WeightSequence:
    """Finite prefix ``(w_1, ..., w_N)`` stored 0-indexed."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(x) for x in self.weights))
        if not self.weights:
            raise ValueError("a weight sequence needs at least one entry")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, n: int) -> int:
        """Return ``w_n`` using the 1-based index."""
        if not 1 <= n <= len(self.weights):
            raise IndexError(f"w_{n} is outside the supplied prefix of length {len(self.weights)}")
        return self.weights[n - 1]

    def require(self, n: int) -> None:
        if n > len(self.weights):
            raise ValueError(f"need w_1..w_{n} but only {len(self.weights)} weights were supplied")

    def require_nonnegative(self) -> None:
        if any(x < 0 for x in self.weights):
            raise ValueError("enumeration requires nonnegative weights")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def as_weights(w) -> WeightSequence:
    if isinstance(w, WeightSequence):
        return w
    return WeightSequence(tuple(w))


class ColoredPart(NamedTuple):
    size: int
    color: int


class DominoTile(NamedTuple):
    alpha: int
    beta: int
    color: int

    @property
    def is_zero(self) -> bool:
        return self.beta == 0


@dataclass(frozen=True, order=True)
class ColoredComposition:
    """Ordered parts; ordering between instances is the canonical one."""

    parts: tuple[ColoredPart, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a composition needs at least one part")

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "ColoredComposition":
        return cls(tuple(ColoredPart(int(s), int(c)) for s, c in pairs))

    @property
    def nu(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def to_json(self) -> dict:
        return {"nu": self.nu, "parts": [[p.size, p.color] for p in self.parts]}

    @classmethod
    def from_json(cls, obj: dict) -> "ColoredComposition":
        try:
            nu = obj["nu"]
            pairs = [tuple(p) for p in obj["parts"]]
            if not all(len(p) == 2 and all(map(_is_int, p)) for p in pairs):
                raise TypeError("parts must be [size, color] integer pairs")
            comp = cls.of(pairs)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"not a colored composition: {obj!r}") from exc
        if not _is_int(nu) or comp.nu != nu:
            raise ValidationError(f"declared nu={nu!r} but parts sum to {comp.nu}")
        return comp


@dataclass(frozen=True, order=True)
class DominoComposition:
    """Tiles ``(alpha, beta, color)`` placed under the ambient bound ``n``."""

    n: int
    tiles: tuple[DominoTile, ...]

    @classmethod
    def of(cls, n: int, triples: Iterable[Sequence[int]]) -> "DominoComposition":
        return cls(int(n), tuple(DominoTile(int(a), int(b), int(c)) for a, b, c in triples))

    @property
    def nonzero_count(self) -> int:
        return sum(1 for t in self.tiles if t.beta > 0)

    @property
    def total(self) -> int:
        return sum(t.alpha + t.beta for t in self.tiles)

    def __len__(self) -> int:
        return len(self.tiles)

    def to_json(self) -> dict:
        return {"n": self.n, "tiles": [list(t) for t in self.tiles]}

    @classmethod
    def from_json(cls, obj: dict) -> "DominoComposition":
        try:
            n = obj["n"]
            triples = [tuple(t) for t in obj["tiles"]]
            if not _is_int(n) or not all(len(t) == 3 and all(map(_is_int, t)) for t in triples):
                raise TypeError("n and tile entries must be integers")
            return cls.of(n, triples)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"not a domino composition: {obj!r}") from exc


def validate_colored(comp: ColoredComposition, law: ColorLaw, nu: int) -> bool:
    """True iff ``comp`` is an ``(an+b)``-color composition of ``nu``."""
    a, b = law.a, law.b
    total = 0
    for size, color in comp.parts:
        if size < 1 or not 1 <= color <= a * size + b:
            return False
        total += size
    return total == nu


def validate_domino(dc: DominoComposition, law: ColorLaw, k: int, level: str = T_MEMBERSHIP) -> bool:
    """Check ``dc`` against the tile constraints, and at the default level
    also against membership in ``T^{a,b}_j(n, k)``, i.e. the tile sum
    ``n + j`` where ``j`` counts nonzero tiles.
    """
    if level not in (TILE_BOUNDS_ONLY, T_MEMBERSHIP):
        raise ValueError(f"unknown validation level {level!r}")
    n = dc.n
    if n < 1 or len(dc.tiles) != k:
        return False
    total = 0
    nonzero = 0
    for alpha, beta, color in dc.tiles:
        if not (0 < alpha <= n and 0 <= beta <= n):
            return False
        limit = law.a if beta > 0 else law.b
        if not 1 <= color <= limit:
            return False
        total += alpha + beta
        nonzero += beta > 0
    if level == TILE_BOUNDS_ONLY:
        return True
    return total == n + nonzero


def dumps(obj) -> str:
    """Canonical single-line JSON for a composition of either kind."""
    return json.dumps(obj.to_json(), separators=(",", ":"))


def loads(text: str):
    """Decode either JSON schema, dispatching on the ``nu``/``n`` key."""
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    if "parts" in obj:
        return ColoredComposition.from_json(obj)
    if "tiles" in obj:
        return DominoComposition.from_json(obj)
    raise ValueError("JSON object has neither 'parts' nor 'tiles'")
