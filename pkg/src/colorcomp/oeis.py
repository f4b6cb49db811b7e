"""Reading OEIS b-files and checking them against the recurrence.

A b-file is plain text with one ``index value`` pair per line; blank lines
and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .core import ColorLaw
from .counting import total_sequence_recurrence


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class BFile:
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        indices = [i for i, _ in self.entries]
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise BFileError("b-file indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(text: str) -> BFile:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            entries.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
    if not entries:
        raise BFileError("b-file has no entries")
    return BFile(tuple(entries))


def read_bfile(path: Union[str, Path]) -> BFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BFileError(f"cannot read b-file {path}: {exc}") from exc
    return parse_bfile(text)


@dataclass(frozen=True)
class TermCheck:
    nu: int
    index: int
    expected: Optional[int]  # None when the b-file stops short
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        expected = "missing" if self.expected is None else self.expected
        return f"{status} nu={self.nu} index={self.index} expected={expected} got={self.actual}"


def verify_bfile(bfile: BFile, law: ColorLaw, offset: int, terms: Optional[int] = None) -> list[TermCheck]:
    """Compare ``W_nu`` with the b-file entry at index ``nu + offset - 1``.

    ``offset`` is the b-file index holding ``W_1``; earlier entries are
    skipped.  With ``terms`` the first ``terms`` values of ``nu`` are
    checked and any the file lacks count as failures.
    """
    table = bfile.as_dict()
    if terms is None:
        last = max(table) - offset + 1
        if last < 1:
            return []
        wanted = [nu for nu in range(1, last + 1) if nu + offset - 1 in table]
    else:
        wanted = list(range(1, terms + 1))
    if not wanted:
        return []
    values = total_sequence_recurrence(law, wanted[-1])
    return [TermCheck(nu, nu + offset - 1, table.get(nu + offset - 1), values[nu - 1]) for nu in wanted]


@dataclass(frozen=True)
class Fixture:
    """One row of a fixture manifest: which law a b-file should match."""

    sequence: str
    path: Path
    a: int
    b: int
    offset: int
    terms: int
    label: str = ""

    @property
    def law(self) -> ColorLaw:
        return ColorLaw(self.a, self.b)


def load_manifest(path: Union[str, Path]) -> list[Fixture]:
    path = Path(path)
    data = json.loads(path.read_text())
    out = []
    for row in data["fixtures"]:
        out.append(
            Fixture(
                sequence=row["sequence"],
                path=path.parent / row["file"],
                a=int(row["a"]),
                b=int(row["b"]),
                offset=int(row["offset"]),
                terms=int(row.get("terms", 20)),
                label=row.get("label", ""),
            )
        )
    return out
