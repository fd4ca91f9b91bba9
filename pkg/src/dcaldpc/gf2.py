"""Dense bit-packed linear algebra over GF(2).

Matrices are stored row-major, 64 columns per ``uint64`` word, least
significant bit first.  Vectors are plain ``uint8`` numpy arrays of 0/1.

Elimination routines work on a copy unless their name ends in ``_inplace``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD = 64


class TrivialCodeError(ValueError):
    """Raised when a parity-check matrix has full column rank."""


def _nwords(cols: int) -> int:
    return (cols + WORD - 1) // WORD


@dataclass
class Gf2Matrix:
    rows: int
    cols: int
    words: np.ndarray  # shape (rows, nwords), dtype uint64

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        expected = (self.rows, _nwords(self.cols))
        if self.words.shape != expected or self.words.dtype != np.uint64:
            raise ValueError(f"words must be uint64 of shape {expected}")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, np.zeros((rows, _nwords(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, size: int) -> "Gf2Matrix":
        return cls.from_dense(np.eye(size, dtype=np.uint8))

    @classmethod
    def from_dense(cls, array) -> "Gf2Matrix":
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        a = (a.astype(np.int64) & 1).astype(np.uint8)
        rows, cols = a.shape
        nw = _nwords(cols)
        padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
        padded[:, :cols] = a
        packed = np.packbits(padded, axis=1, bitorder="little")
        words = packed.view("<u8").astype(np.uint64).reshape(rows, nw)
        return cls(rows, cols, words)

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        raw = np.ascontiguousarray(self.words.astype("<u8")).view(np.uint8)
        bits = np.unpackbits(raw.reshape(self.rows, -1), axis=1, bitorder="little")
        return bits[:, : self.cols].copy()

    def copy(self) -> "Gf2Matrix":
        return Gf2Matrix(self.rows, self.cols, self.words.copy())

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_dense(self.to_dense().T)

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1))

    def row(self, i: int) -> np.ndarray:
        return self.to_dense()[i] if self.rows else np.zeros(self.cols, np.uint8)

    def __eq__(self, other):
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.words, other.words)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols


def pack_vector(v, cols: int | None = None) -> np.ndarray:
    """Pack a 0/1 vector into uint64 words."""
    v = np.asarray(v)
    cols = v.shape[0] if cols is None else cols
    return Gf2Matrix.from_dense(v.reshape(1, cols)).words[0]


def unpack_vector(words: np.ndarray, cols: int) -> np.ndarray:
    return Gf2Matrix(1, cols, words.reshape(1, -1).astype(np.uint64)).to_dense()[0]


def rref_inplace(m: Gf2Matrix) -> list[int]:
    """Reduce ``m`` to reduced row-echelon form in place; return pivot columns."""
    words = m.words
    pivots: list[int] = []
    prow = 0
    for col in range(m.cols):
        if prow == m.rows:
            break
        w, b = divmod(col, WORD)
        bit = np.uint64(1) << np.uint64(b)
        hits = np.nonzero(words[prow:, w] & bit)[0]
        if hits.size == 0:
            continue
        p = prow + int(hits[0])
        if p != prow:
            words[[prow, p]] = words[[p, prow]]
        others = np.nonzero(words[:, w] & bit)[0]
        others = others[others != prow]
        if others.size:
            words[others] ^= words[prow]
        pivots.append(col)
        prow += 1
    return pivots


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    r = m.copy()
    pivots = rref_inplace(r)
    return r, pivots


def rank(m: Gf2Matrix) -> int:
    return len(rref_inplace(m.copy()))


def null_space_basis(m: Gf2Matrix) -> list[np.ndarray]:
    """Basis of {v : m v = 0}, one vector per non-pivot column."""
    r, pivots = rref(m)
    dense = r.to_dense()
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = dense[i, f]
        basis.append(v)
    return basis


def systematic_generator(h: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Generator matrix in systematic form for the code with parity checks ``h``.

    Returns ``(g, col_perm)``.  ``g`` is written in permuted coordinates as
    ``[P | I_k]``: position ``t`` of a row of ``g`` is original column
    ``col_perm[t]``.  ``col_perm`` lists the pivot columns of ``rref(h)``
    followed by the free columns, so the message occupies the free columns.
    """
    r, pivots = rref(h)
    if not pivots:
        raise ValueError("parity-check matrix is zero")
    pivot_set = set(pivots)
    free = [c for c in range(h.cols) if c not in pivot_set]
    if not free:
        raise TrivialCodeError("parity-check matrix has full column rank")
    dense = r.to_dense()
    rk = len(pivots)
    g = np.zeros((len(free), h.cols), dtype=np.uint8)
    g[:, :rk] = dense[:rk, free].T
    g[np.arange(len(free)), rk + np.arange(len(free))] = 1
    return Gf2Matrix.from_dense(g), pivots + free


def mat_vec(m: Gf2Matrix, v) -> np.ndarray:
    v = np.asarray(v)
    if v.ndim != 1 or v.shape[0] != m.cols:
        raise ValueError(f"vector length {v.shape[0] if v.ndim else 0} != {m.cols} columns")
    packed = pack_vector(v, m.cols)
    counts = np.bitwise_count(m.words & packed).sum(axis=1)
    return (counts & 1).astype(np.uint8)


def vec_mat(v, m: Gf2Matrix) -> np.ndarray:
    """Row-vector product ``v m``: XOR of the rows selected by ``v``."""
    v = np.asarray(v)
    if v.ndim != 1 or v.shape[0] != m.rows:
        raise ValueError(f"vector length {v.shape[0] if v.ndim else 0} != {m.rows} rows")
    sel = m.words[v.astype(bool)]
    acc = np.bitwise_xor.reduce(sel, axis=0) if sel.shape[0] else np.zeros(m.words.shape[1], np.uint64)
    return unpack_vector(acc, m.cols)
