"""Latin squares built from DCA columns and their (pseudo-)orthogonality."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dca import CyclicDca, canonical_dca


@dataclass(frozen=True)
class LatinSquare:
    cells: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.cells, dtype=np.int64)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("a Latin square must be square")
        c.setflags(write=False)
        object.__setattr__(self, "cells", c)

    @property
    def order(self) -> int:
        return self.cells.shape[0]

    def is_latin(self) -> bool:
        full = np.arange(self.order)
        return all(
            np.array_equal(np.sort(self.cells[i]), full) and np.array_equal(np.sort(self.cells[:, i]), full)
            for i in range(self.order)
        )

    def format(self) -> str:
        return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in self.cells)


def latin_from_dca_column(q: CyclicDca, col: int) -> LatinSquare:
    """Square whose first column is column ``col`` of ``q``, each later column shifted by +1."""
    if col == 0:
        raise ValueError("column 0 is constant and does not give a Latin square")
    if not 0 < col < q.k:
        raise IndexError(f"column {col} out of range for k={q.k}")
    first = q.entries[:, col]
    return LatinSquare((first[:, None] + np.arange(q.order)[None, :]) % q.order)


def canonical_pair(n: int) -> tuple[LatinSquare, LatinSquare]:
    q = canonical_dca(n)
    return latin_from_dca_column(q, 1), latin_from_dca_column(q, 2)


def _same_order(a: LatinSquare, b: LatinSquare) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def pair_profile(a: LatinSquare, b: LatinSquare) -> np.ndarray:
    """counts[s, t] = number of cells holding s in ``a`` and t in ``b``."""
    _same_order(a, b)
    counts = np.zeros((a.order, a.order), dtype=np.int64)
    np.add.at(counts, (a.cells.ravel(), b.cells.ravel()), 1)
    return counts


def are_pseudo_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    counts = pair_profile(a, b)
    m = a.order
    for row in counts:
        if np.count_nonzero(row == 0) != 1 or np.count_nonzero(row == 2) != 1:
            return False
        if np.count_nonzero(row == 1) != m - 2:
            return False
    return True


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    return bool(np.all(pair_profile(a, b) == 1))
