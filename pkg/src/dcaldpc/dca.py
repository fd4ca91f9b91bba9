"""Reduced cyclic difference covering arrays over Z_2n."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations
from pathlib import Path

import numpy as np


def second_column_entry(n: int, j: int) -> int:
    """Entry of column 2 of the canonical array at row ``j``."""
    return 2 * j + 1 if j < n else 2 * (j - n)


@dataclass(frozen=True)
class CyclicDca:
    n: int
    entries: np.ndarray = field(repr=False)  # shape (2n, k)

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} rows, got shape {e.shape}")
        if e.size and (e.min() < 0 or e.max() >= 2 * self.n):
            raise ValueError(f"entries must lie in Z_{2 * self.n}")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def k(self) -> int:
        return self.entries.shape[1]

    @property
    def order(self) -> int:
        return 2 * self.n

    def column(self, j: int) -> list[int]:
        return [int(x) for x in self.entries[:, j]]

    def __getitem__(self, idx):
        return int(self.entries[idx])


def canonical_dca(n: int) -> CyclicDca:
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = [(0, j, second_column_entry(n, j)) for j in range(2 * n)]
    return CyclicDca(n, np.array(rows))


def load_dca(path: str | Path) -> CyclicDca:
    """Read a DCA stored one row per line as space-separated residues."""
    text = Path(path).read_text()
    return parse_dca(text)


def parse_dca(text: str) -> CyclicDca:
    rows = [[int(t) for t in line.split()] for line in text.splitlines() if line.strip()]
    if len(rows) % 2:
        raise ValueError("a reduced cyclic DCA has an even number of rows")
    return CyclicDca(len(rows) // 2, np.array(rows))


def format_dca(q: CyclicDca) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in q.entries)


def example_dca_4_6_6() -> CyclicDca:
    """The bundled DCA*(4,6;6) example."""
    text = resources.files("dcaldpc.data").joinpath("dca_4_6_6.txt").read_text()
    return parse_dca(text)


def verify_p1(q: CyclicDca) -> bool:
    if q.k == 0 or np.any(q.entries[:, 0] != 0):
        return False
    full = set(range(q.order))
    return all(set(q.column(j)) == full and len(q.column(j)) == q.order for j in range(1, q.k))


@dataclass(frozen=True)
class DifferenceProfile:
    column_pair: tuple[int, int]
    counts: dict[int, int]

    def covers_nonzero(self, order: int) -> bool:
        return all(self.counts.get(d, 0) >= 1 for d in range(1, order))

    def is_canonical(self, n: int) -> bool:
        """Each of 1..2n-1 once, except n which appears twice."""
        expected = {d: 1 for d in range(1, 2 * n)}
        expected[n] = 2
        return self.counts == expected


def difference_profile(q: CyclicDca, j: int, j2: int) -> DifferenceProfile:
    if j == j2:
        raise ValueError("column indices must differ")
    for c in (j, j2):
        if not 0 <= c < q.k:
            raise IndexError(f"column {c} out of range for k={q.k}")
    diffs = (q.entries[:, j] - q.entries[:, j2]) % q.order
    counts = Counter(int(d) for d in diffs)
    return DifferenceProfile((j, j2), dict(sorted(counts.items())))


@dataclass(frozen=True)
class P2Report:
    covered: dict[tuple[int, int], bool]
    canonical: dict[tuple[int, int], bool]

    @property
    def ok(self) -> bool:
        return all(self.covered.values())

    @property
    def all_canonical(self) -> bool:
        return all(self.canonical.values())


def p2_report(q: CyclicDca) -> P2Report:
    covered, canonical = {}, {}
    for j, j2 in permutations(range(1, q.k), 2):
        prof = difference_profile(q, j, j2)
        covered[(j, j2)] = prof.covers_nonzero(q.order)
        canonical[(j, j2)] = prof.is_canonical(q.n)
    return P2Report(covered, canonical)


def verify_p2(q: CyclicDca) -> bool:
    # differences run over all 2n rows
    return p2_report(q).ok


@dataclass(frozen=True)
class DcaReport:
    modulus: int
    pairs: dict[tuple[int, int], bool]

    @property
    def ok(self) -> bool:
        return all(self.pairs.values())


def verify_general_dca(entries, m: int) -> DcaReport:
    """Check that every column-pair difference multiset covers Z_m."""
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2-D array")
    pairs = {}
    for j, j2 in permutations(range(a.shape[1]), 2):
        seen = set(((a[:, j] - a[:, j2]) % m).tolist())
        pairs[(j, j2)] = len(seen) == m
    return DcaReport(m, pairs)
