"""Sparse column-major parity-check matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .gf2 import Gf2Matrix


@dataclass(frozen=True)
class SparseParityCheck:
    """A 0/1 matrix stored as the sorted row support of each column.

    ``n`` is the construction parameter when the matrix came from the block
    design, ``None`` for arbitrary matrices.
    """

    rows: int
    col_support: tuple[tuple[int, ...], ...]
    n: Optional[int] = None
    row_support: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = tuple(tuple(sorted(int(r) for r in s)) for s in self.col_support)
        by_row: list[list[int]] = [[] for _ in range(self.rows)]
        for c, support in enumerate(cols):
            if len(set(support)) != len(support):
                raise ValueError(f"column {c} lists a row twice")
            for r in support:
                if not 0 <= r < self.rows:
                    raise ValueError(f"row index {r} out of range in column {c}")
                by_row[r].append(c)
        object.__setattr__(self, "col_support", cols)
        object.__setattr__(self, "row_support", tuple(tuple(r) for r in by_row))

    @classmethod
    def from_dense(cls, array, n: Optional[int] = None) -> "SparseParityCheck":
        a = np.asarray(array)
        return cls(a.shape[0], tuple(tuple(np.nonzero(a[:, c])[0].tolist()) for c in range(a.shape[1])), n)

    @property
    def cols(self) -> int:
        return len(self.col_support)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column_weights(self) -> list[int]:
        return [len(s) for s in self.col_support]

    def row_weights(self) -> list[int]:
        return [len(s) for s in self.row_support]

    @cached_property
    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """(check index, bit index) of every nonzero entry, column-major."""
        chk = np.fromiter((r for s in self.col_support for r in s), dtype=np.int64)
        var = np.fromiter((c for c, s in enumerate(self.col_support) for _ in s), dtype=np.int64)
        return chk, var

    def to_dense(self) -> np.ndarray:
        h = np.zeros(self.shape, dtype=np.uint8)
        chk, var = self.edges
        h[chk, var] = 1
        return h

    def to_gf2(self) -> Gf2Matrix:
        return Gf2Matrix.from_dense(self.to_dense())

    def syndrome(self, word) -> np.ndarray:
        w = np.asarray(word)
        if w.shape != (self.cols,):
            raise ValueError(f"word length {w.shape} != ({self.cols},)")
        chk, var = self.edges
        s = np.bincount(chk, weights=(w[var] & 1), minlength=self.rows)
        return (s.astype(np.int64) & 1).astype(np.uint8)

    def with_columns(self, extra: Sequence[Sequence[int]]) -> "SparseParityCheck":
        return SparseParityCheck(self.rows, self.col_support + tuple(tuple(c) for c in extra), self.n)


def write_alist(h: SparseParityCheck) -> str:
    """Render ``h`` in alist format, variable nodes first.

    Line 1 is ``N M`` (columns, rows); line 2 the maximum column and row
    weights; then the column weights, the row weights, one line of 1-based
    row indices per column and one line of 1-based column indices per row.
    Short lists are padded with zeros to the maximum weight.
    """
    cw, rw = h.column_weights(), h.row_weights()
    max_c, max_r = max(cw, default=0), max(rw, default=0)

    def line(items, width):
        padded = [i + 1 for i in items] + [0] * (width - len(items))
        return " ".join(map(str, padded))

    out = [
        f"{h.cols} {h.rows}",
        f"{max_c} {max_r}",
        " ".join(map(str, cw)),
        " ".join(map(str, rw)),
    ]
    out += [line(s, max_c) for s in h.col_support]
    out += [line(s, max_r) for s in h.row_support]
    return "\n".join(out) + "\n"


def read_alist(text: str, n: Optional[int] = None) -> SparseParityCheck:
    tokens = iter(int(t) for t in text.split())
    try:
        cols, rows = next(tokens), next(tokens)
        max_c, max_r = next(tokens), next(tokens)
        cw = [next(tokens) for _ in range(cols)]
        rw = [next(tokens) for _ in range(rows)]
        col_lists = [[next(tokens) for _ in range(max_c)] for _ in range(cols)]
        row_lists = [[next(tokens) for _ in range(max_r)] for _ in range(rows)]
    except StopIteration:
        raise ValueError("truncated alist data") from None
    support = []
    for c, (entries, w) in enumerate(zip(col_lists, cw)):
        nz = [e - 1 for e in entries if e]
        if len(nz) != w:
            raise ValueError(f"column {c} weight {w} disagrees with its index list")
        support.append(nz)
    h = SparseParityCheck(rows, tuple(tuple(s) for s in support), n)
    for r, (entries, w) in enumerate(zip(row_lists, rw)):
        if sorted(e - 1 for e in entries if e) != list(h.row_support[r]) or len(h.row_support[r]) != w:
            raise ValueError(f"row {r} disagrees with the column lists")
    return h
