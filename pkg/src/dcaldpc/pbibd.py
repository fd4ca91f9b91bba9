"""Resolvable PBIBD(6n, 3) developed from the canonical DCA, and its incidence matrix.

Points are the integers ``0..6n-1`` split into three groups of size ``2n``.
Block ``(j, a)`` is ``{a, 2n + (j + a mod 2n), 4n + (x_j + a mod 2n)}``
where ``x_j`` is column 2 of the canonical DCA; orbit ``j = n`` is left out.
Columns of H follow orbit-major order: ``j`` ascending with ``n`` skipped,
then ``a`` ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .dca import second_column_entry
from .sparse import SparseParityCheck


@dataclass(frozen=True)
class Block:
    points: tuple[int, int, int]
    j: int
    a: int

    def __contains__(self, p: int) -> bool:
        return p in self.points


@dataclass(frozen=True)
class BlockDesign:
    n: int
    blocks: tuple[Block, ...]

    @property
    def points(self) -> int:
        return 6 * self.n

    @property
    def classes(self) -> list[range]:
        """Index ranges of the parallel classes, one per orbit."""
        m = 2 * self.n
        return [range(i * m, (i + 1) * m) for i in range(len(self.blocks) // m)]


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("n must be at least 2")


def starter_blocks(n: int) -> list[tuple[int, int, int]]:
    _check_n(n)
    return [(0, j, second_column_entry(n, j)) for j in range(2 * n) if j != n]


def make_block(n: int, j: int, a: int) -> Block:
    m = 2 * n
    return Block((a % m, m + (j + a) % m, 2 * m + (second_column_entry(n, j) + a) % m), j, a % m)


def develop_orbit(n: int, j: int) -> list[Block]:
    _check_n(n)
    if not 0 <= j < 2 * n:
        raise ValueError(f"orbit index {j} outside Z_{2 * n}")
    if j == n:
        raise ValueError("orbit j = n is not part of the design")
    return [make_block(n, j, a) for a in range(2 * n)]


def build_design(n: int) -> BlockDesign:
    _check_n(n)
    blocks = [b for j in range(2 * n) if j != n for b in develop_orbit(n, j)]
    return BlockDesign(n, tuple(blocks))


def column_index(n: int, j: int, a: int) -> int:
    """Column of block (j, a) in the orbit-major ordering."""
    if j == n or not 0 <= j < 2 * n or not 0 <= a < 2 * n:
        raise ValueError(f"no block with orbit coordinates ({j}, {a})")
    return (j if j < n else j - 1) * 2 * n + a


def locate_block(n: int, points) -> tuple[int, int] | None:
    """Orbit coordinates of the block with the given points, or None if absent."""
    m = 2 * n
    p = sorted(points)
    if len(p) != 3 or not (0 <= p[0] < m <= p[1] < 2 * m <= p[2] < 3 * m):
        return None
    a = p[0]
    j = (p[1] - m - a) % m
    if j == n or (second_column_entry(n, j) + a) % m != p[2] - 2 * m:
        return None
    return j, a


def pair_counts(d: BlockDesign) -> np.ndarray:
    """Symmetric matrix of pair concurrences; the diagonal holds replications."""
    h = incidence_matrix(d).to_dense().astype(np.int64)
    return h @ h.T


def lambda_of(d: BlockDesign, y: int, z: int) -> int:
    if y == z:
        raise ValueError("points must differ")
    for p in (y, z):
        if not 0 <= p < d.points:
            raise ValueError(f"point {p} outside Z_{d.points}")
    return sum(1 for b in d.blocks if y in b and z in b)


class LambdaTable(str, Enum):
    NOMINAL = "nominal"
    DERIVED = "derived"


def expected_lambda(n: int, y: int, z: int, table: LambdaTable | str = LambdaTable.NOMINAL) -> int:
    """Concurrence predicted by the piecewise table.

    ``NOMINAL`` leaves uncovered ``z in {y + 3n, y + 4n}`` for ``y < 2n``,
    ``z = y + 3n`` for ``2n <= y < 3n`` and ``z = y + n`` for ``3n <= y < 4n``.
    ``DERIVED`` is what the construction actually gives.  They differ in two
    places:

    * groups 1 and 2: the uncovered partner of ``y`` is ``2n + (y + n mod 2n)``;
      the nominal ``z = y + 3n`` leaves group 2 once ``y >= n``.
    * groups 2 and 3: the uncovered pairs are ``z = y + 2n``.  No starter
      block has equal second and third coordinates, while difference ``n``
      is still produced by orbit ``n - 1``.
    """
    table = LambdaTable(table)
    y, z = min(y, z), max(y, z)
    m = 2 * n
    if y // m == z // m:
        return 0
    if table is LambdaTable.NOMINAL:
        if y < m and z in (y + 3 * n, y + 4 * n):
            return 0
        if m <= y < 3 * n and z == y + 3 * n:
            return 0
        if 3 * n <= y < 2 * m and z == y + n:
            return 0
        return 1
    if y < m and z in (m + (y + n) % m, y + 2 * m):
        return 0
    if m <= y < 2 * m and z == y + m:
        return 0
    return 1


def lambda_mismatches(d: BlockDesign, table: LambdaTable | str = LambdaTable.NOMINAL) -> list[tuple[int, int, int, int]]:
    """Pairs whose concurrence disagrees with the table, as (y, z, actual, expected)."""
    counts = pair_counts(d)
    bad = []
    for y in range(d.points):
        for z in range(y + 1, d.points):
            want = expected_lambda(d.n, y, z, table)
            if counts[y, z] != want:
                bad.append((y, z, int(counts[y, z]), want))
    return bad


def verify_lambda_table(d: BlockDesign, table: LambdaTable | str = LambdaTable.NOMINAL) -> bool:
    return not lambda_mismatches(d, table)


def is_resolvable(d: BlockDesign) -> bool:
    """Each parallel class partitions the point set and the classes cover all blocks."""
    classes = d.classes
    if sum(len(c) for c in classes) != len(d.blocks):
        return False
    full = list(range(d.points))
    return all(sorted(p for i in cls for p in d.blocks[i].points) == full for cls in classes)


def incidence_matrix(d: BlockDesign) -> SparseParityCheck:
    return SparseParityCheck(d.points, tuple(b.points for b in d.blocks), d.n)


def parity_check(n: int) -> SparseParityCheck:
    return incidence_matrix(build_design(n))


def format_design(d: BlockDesign) -> str:
    return "".join(f"{b.j} {b.a} : {b.points[0]} {b.points[1]} {b.points[2]}\n" for b in d.blocks)
