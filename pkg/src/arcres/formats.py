"""Plain-text design, resolution and arc files.

Design file: header ``v b k`` then ``b`` lines of ``k`` ascending 0-based
point indices, lines sorted lexicographically.  Resolution file: header
``r n`` then ``r`` lines of ``n`` ascending block indices, ordered by the
smallest block index.  Arc file: one point index per line, ascending.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .design import Resolution, SteinerDesign, canonical_blocks, canonical_classes


class FormatError(ValueError):
    pass


def _rows(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None
    return rows


def format_blocks(v: int, blocks: Iterable[Iterable[int]]) -> str:
    blks = canonical_blocks(blocks)
    k = len(blks[0]) if blks else 0
    out = [f"{v} {len(blks)} {k}"]
    out += [" ".join(map(str, b)) for b in blks]
    return "\n".join(out) + "\n"


def format_design(D: SteinerDesign) -> str:
    return format_blocks(D.v, D.blocks)


def parse_blocks(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Return ``(v, blocks)`` in file order after checking the header counts."""
    rows = _rows(text)
    if not rows or len(rows[0]) != 3:
        raise FormatError("missing 'v b k' header")
    v, b, k = rows[0]
    body = rows[1:]
    if len(body) != b:
        raise FormatError(f"header says {b} blocks, found {len(body)}")
    for i, row in enumerate(body):
        if len(row) != k:
            raise FormatError(f"block {i} has {len(row)} entries, header says {k}")
        if any(x < 0 or x >= v for x in row):
            raise FormatError(f"block {i} has points outside 0..{v - 1}")
    return v, [tuple(row) for row in body]


def format_resolution(R: Resolution) -> str:
    n = len(R.classes[0]) if R.classes else 0
    out = [f"{len(R.classes)} {n}"]
    out += [" ".join(map(str, c)) for c in canonical_classes(R.classes)]
    return "\n".join(out) + "\n"


def parse_resolution(text: str) -> list[tuple[int, ...]]:
    rows = _rows(text)
    if not rows or len(rows[0]) != 2:
        raise FormatError("missing 'r n' header")
    r, n = rows[0]
    body = rows[1:]
    if len(body) != r:
        raise FormatError(f"header says {r} classes, found {len(body)}")
    for i, row in enumerate(body):
        if len(row) != n:
            raise FormatError(f"class {i} has {len(row)} entries, header says {n}")
    return [tuple(row) for row in body]


def format_indices(indices: Sequence[int]) -> str:
    return "".join(f"{i}\n" for i in sorted(indices))


def parse_indices(text: str) -> list[int]:
    rows = _rows(text)
    if any(len(r) != 1 for r in rows):
        raise FormatError("expected one index per line")
    return [r[0] for r in rows]


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, newline="\n")
