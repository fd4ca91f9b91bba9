"""Code parameters of the DCA parity-check matrices.

Everything here is computed from the matrix itself; closed forms such as
``rank = 6n - 2`` are checked against, never substituted for, elimination.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Optional

import numpy as np

from . import gf2
from .pbibd import column_index, locate_block, parity_check
from .sparse import SparseParityCheck

# codes of at most this dimension are searched by listing every codeword
EXHAUSTIVE_DIMENSION = 16


def check_rc_constraint(h: SparseParityCheck) -> bool:
    """True iff distinct rows, and distinct columns, share at most one position."""
    d = h.to_dense().astype(np.int64)
    rows = d @ d.T
    cols = d.T @ d
    np.fill_diagonal(rows, 0)
    np.fill_diagonal(cols, 0)
    return bool(rows.max(initial=0) <= 1 and cols.max(initial=0) <= 1)


def girth(h: SparseParityCheck) -> float:
    """Shortest cycle length of the Tanner graph, ``math.inf`` if it is a forest.

    Bit vertices are ``0..cols-1`` and check vertices follow them.  A BFS is
    run from every vertex; the shortest closed walk seen through a non-tree
    edge, minimised over all roots, is the girth.
    """
    nb = h.cols
    adj: list[list[int]] = [[nb + r for r in s] for s in h.col_support]
    adj += [list(s) for s in h.row_support]
    best = math.inf
    nv = len(adj)
    for root in range(nv):
        dist = [-1] * nv
        parent = [-1] * nv
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def rate_decimal(rate: Fraction, places: int = 3) -> str:
    """Decimal rendering of an exact rate, rounding half up."""
    with localcontext() as ctx:
        ctx.prec = 50
        value = Decimal(rate.numerator) / Decimal(rate.denominator)
        return str(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


@dataclass
class CodeReport:
    n: Optional[int]
    length: int
    rank: int
    dimension: int
    rate: Fraction
    girth: Optional[float] = None
    min_distance: Optional[int] = None
    distance_witness: list[int] = field(default_factory=list)
    rc_ok: Optional[bool] = None

    @property
    def rate_decimal(self) -> str:
        return rate_decimal(self.rate)

    def to_json(self) -> dict:
        g = self.girth
        return {
            "n": self.n,
            "length": self.length,
            "rank": self.rank,
            "dimension": self.dimension,
            "rate_num": self.rate.numerator,
            "rate_den": self.rate.denominator,
            "rate_decimal": self.rate_decimal,
            "girth": None if g is None or math.isinf(g) else int(g),
            "min_distance": self.min_distance,
            "witness": list(self.distance_witness),
            "rc_ok": self.rc_ok,
        }


def code_params(h: SparseParityCheck) -> CodeReport:
    rk = gf2.rank(h.to_gf2())
    dim = h.cols - rk
    return CodeReport(h.n, h.cols, rk, dim, Fraction(dim, h.cols))


def formula_params(n: int) -> tuple[int, int, Fraction]:
    """Closed-form (length, dimension, rate) for the construction at ``n``."""
    length = 4 * n * n - 2 * n
    dim = 4 * n * n - 8 * n + 2
    return length, dim, Fraction(dim, length)


@dataclass(frozen=True)
class IndependentSet:
    n: int
    column_indices: tuple[int, ...]
    block_descriptions: tuple[str, ...]  # "C1".."C4" per column


def independent_blocks(n: int) -> list[tuple[str, tuple[int, int, int]]]:
    m = 2 * n
    out = [("C1", (a, m + a, 2 * m + (1 + a) % m)) for a in range(m)]
    out += [("C2", (b, m + 1 + b, 2 * m + (3 + b) % m)) for b in range(m - 1)]
    out += [("C3", (c, m + 2 + c, 2 * m + (5 + c) % m)) for c in range(m - 3)]
    out += [("C4", (0, 3 * n + 1, 4 * n + 2)), ("C4", (1, 3 * n + 2, 4 * n + 3))]
    return out


def independent_column_set(n: int) -> IndependentSet:
    if n < 3:
        raise ValueError("the independent set is defined for n >= 3")
    cols, labels = [], []
    for label, pts in independent_blocks(n):
        coords = locate_block(n, pts)
        if coords is None:
            raise LookupError(f"block {pts} is not in the design for n={n}")
        cols.append(column_index(n, *coords))
        labels.append(label)
    if len(set(cols)) != len(cols):
        raise LookupError("independent set repeats a column")
    return IndependentSet(n, tuple(cols), tuple(labels))


def dependent_row_sets(n: int) -> dict[str, list[int]]:
    m = 2 * n
    return {
        "R12": list(range(0, 2 * m)),
        "R23": list(range(m, 3 * m)),
        "R13": list(range(0, m)) + list(range(2 * m, 3 * m)),
    }


def row_set_sums_zero(h: SparseParityCheck, n: int) -> dict[str, bool]:
    d = h.to_dense()
    return {name: not (d[rows].sum(axis=0) % 2).any() for name, rows in dependent_row_sets(n).items()}


def rank_bounds_check(h: SparseParityCheck) -> bool:
    """The three two-group row sets are dependent and the rank is exactly 6n - 2."""
    if h.n is None:
        raise ValueError("matrix does not carry its construction parameter n")
    return all(row_set_sums_zero(h, h.n).values()) and gf2.rank(h.to_gf2()) == 6 * h.n - 2


def _columns_from_blocks(n: int, blocks) -> list[int]:
    cols = []
    for pts in blocks:
        coords = locate_block(n, pts)
        if coords is None:
            raise ValueError(f"block {tuple(pts)} is not in the design for n={n}")
        cols.append(column_index(n, *coords))
    return sorted(cols)


def weight6_witness(n: int) -> list[int]:
    if n < 4:
        raise ValueError("the six-block witness needs n >= 4")
    blocks = [
        (0, 2 * n + 1, 4 * n + 3), (0, 2 * n + 2, 4 * n + 5),
        (1, 2 * n + 2, 4 * n + 4), (1, 3 * n + 2, 4 * n + 3),
        (2 * n - 1, 2 * n + 1, 4 * n + 4), (2 * n - 1, 3 * n + 2, 4 * n + 5),
    ]
    return _columns_from_blocks(n, blocks)


def weight4_witness(n: int) -> list[int]:
    if n % 2 or n < 4:
        # at n = 2 the block {n-1, 2n+n/2, 4n+1} does not exist
        raise ValueError("the four-block witness needs even n >= 4")
    h = n // 2
    blocks = [
        (0, 2 * n, 4 * n + 1), (0, 2 * n + h, 5 * n + 1),
        (n - 1, 2 * n, 5 * n + 1), (n - 1, 2 * n + h, 4 * n + 1),
    ]
    return _columns_from_blocks(n, blocks)


def _column_words(h: SparseParityCheck) -> np.ndarray:
    return gf2.Gf2Matrix.from_dense(h.to_dense().T).words


def _is_codeword(words: np.ndarray, cols) -> bool:
    return not np.bitwise_xor.reduce(words[list(cols)], axis=0).any()


def all_codewords_even(h: SparseParityCheck) -> bool:
    """True iff the all-ones vector lies in the row space of ``h``."""
    g = h.to_gf2()
    ones = np.ones((1, h.cols), dtype=np.uint8)
    return gf2.rank(gf2.Gf2Matrix.from_dense(np.vstack([h.to_dense(), ones]))) == gf2.rank(g)


def _exhaustive_min_distance(h: SparseParityCheck) -> tuple[float, list[int]]:
    basis = gf2.null_space_basis(h.to_gf2())
    if not basis:
        return math.inf, []
    packed = np.array([gf2.pack_vector(v) for v in basis])
    words = np.zeros((1, packed.shape[1]), dtype=np.uint64)
    for b in packed:
        words = np.vstack([words, words ^ b])
    weights = np.bitwise_count(words).sum(axis=1)
    weights[0] = np.iinfo(weights.dtype).max
    d = int(weights.min())
    supports = [
        tuple(np.nonzero(gf2.unpack_vector(words[i], h.cols))[0].tolist())
        for i in np.nonzero(weights == d)[0]
    ]
    return d, list(min(supports))


def weight4_search(h: SparseParityCheck) -> list[int] | None:
    """Smallest (lexicographic) set of four columns summing to zero, if any.

    All column pairs are keyed by their XOR; two pairs with the same key and
    no shared column form a weight-4 codeword.
    """
    words = _column_words(h)
    i, j = np.triu_indices(h.cols, k=1)
    keys = words[i] ^ words[j]
    order = np.lexsort(keys.T[::-1])
    keys, i, j = keys[order], i[order], j[order]
    same = np.all(keys[1:] == keys[:-1], axis=1)
    if not same.any():
        return None
    best = None
    start = 0
    for pos in range(1, len(keys) + 1):
        if pos < len(keys) and same[pos - 1]:
            continue
        group = list(zip(i[start:pos].tolist(), j[start:pos].tolist()))
        for x in range(len(group)):
            for y in range(x + 1, len(group)):
                cand = set(group[x]) | set(group[y])
                if len(cand) == 4:
                    w = sorted(cand)
                    best = w if best is None or w < best else best
        start = pos
    return best


def min_distance(h: SparseParityCheck) -> tuple[float, list[int]]:
    """Exact minimum distance with a certifying list of columns.

    Small codes are searched exhaustively.  Otherwise the argument is: every
    codeword has even weight (all-ones is a sum of rows), no two columns are
    equal, so d >= 4; the pair-collision search settles weight 4; failing
    that the explicit six-column witness gives d = 6.
    """
    words = _column_words(h)
    zero = [c for c in range(h.cols) if not words[c].any()]
    if zero:
        return 1, [zero[0]]
    _, first = np.unique(words, axis=0, return_index=True)
    if len(first) < h.cols:
        seen: dict[bytes, int] = {}
        pairs = []
        for c in range(h.cols):
            key = words[c].tobytes()
            if key in seen:
                pairs.append([seen[key], c])
            else:
                seen[key] = c
        return 2, min(pairs)
    report = code_params(h)
    if report.dimension <= EXHAUSTIVE_DIMENSION:
        return _exhaustive_min_distance(h)
    if not all_codewords_even(h):
        raise ValueError("odd-weight codewords possible; only even-weight codes are supported")
    w4 = weight4_search(h)
    if w4 is not None:
        return 4, w4
    if h.n is not None and h.n >= 4:
        w6 = weight6_witness(h.n)
        if _is_codeword(words, w6):
            return 6, w6
    raise ValueError("no weight-4 codeword and no weight-6 witness available")


def analyze(n: int) -> CodeReport:
    h = parity_check(n)
    report = code_params(h)
    d, witness = min_distance(h)
    return replace(
        report,
        girth=girth(h),
        min_distance=int(d) if not math.isinf(d) else None,
        distance_witness=list(witness),
        rc_ok=check_rc_constraint(h),
    )
