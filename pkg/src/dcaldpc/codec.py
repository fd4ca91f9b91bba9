"""Systematic encoding, bit-flipping and sum-product decoding.

LLR convention: positive means bit 0 is more likely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import gf2
from .sparse import SparseParityCheck

DEFAULT_MAX_ITERS = 50
LLR_CLAMP = 30.0


@dataclass(frozen=True)
class Encoder:
    generator: gf2.Gf2Matrix  # k x length, permuted coordinates
    col_perm: tuple[int, ...]
    h: SparseParityCheck

    @classmethod
    def from_parity_check(cls, h: SparseParityCheck) -> "Encoder":
        g, perm = gf2.systematic_generator(h.to_gf2())
        return cls(g, tuple(perm), h)

    @property
    def dimension(self) -> int:
        return self.generator.rows

    @property
    def length(self) -> int:
        return self.generator.cols

    @cached_property
    def _perm(self) -> np.ndarray:
        return np.asarray(self.col_perm, dtype=np.int64)

    def generator_rows(self) -> np.ndarray:
        """Generator rows mapped back to the original column order."""
        out = np.zeros((self.dimension, self.length), dtype=np.uint8)
        out[:, self._perm] = self.generator.to_dense()
        return out

    def encode(self, message) -> np.ndarray:
        msg = np.asarray(message)
        if msg.shape != (self.dimension,):
            raise ValueError(f"message length {msg.shape} != ({self.dimension},)")
        permuted = gf2.vec_mat(msg & 1, self.generator)
        word = np.empty(self.length, dtype=np.uint8)
        word[self._perm] = permuted
        return word

    def message_of(self, word) -> np.ndarray:
        """Recover the message from a codeword (it sits in the free columns)."""
        w = np.asarray(word)
        return w[self._perm[self.length - self.dimension:]].astype(np.uint8)


def encode(e: Encoder, message) -> np.ndarray:
    return e.encode(message)


@dataclass(frozen=True)
class DecodeResult:
    word: np.ndarray
    converged: bool
    iterations: int


def _check_length(h: SparseParityCheck, v: np.ndarray) -> None:
    if v.shape != (h.cols,):
        raise ValueError(f"input length {v.shape} != ({h.cols},)")


def decode_bit_flip(h: SparseParityCheck, received, max_iters: int = DEFAULT_MAX_ITERS) -> DecodeResult:
    """Parallel Gallager bit flipping.

    Each iteration flips every bit that attains the maximum number of
    unsatisfied checks.  Flipping several tied bits at once may raise the
    unsatisfied count; a uniquely maximal bit with more than half of its
    checks failing always lowers it.
    """
    word = (np.asarray(received).astype(np.uint8) & 1).copy()
    _check_length(h, word)
    chk, var = h.edges
    for it in range(max_iters + 1):
        s = h.syndrome(word)
        if not s.any():
            return DecodeResult(word, True, it)
        if it == max_iters:
            break
        unsat = np.bincount(var, weights=s[chk], minlength=h.cols)
        word[unsat == unsat.max()] ^= 1
    return DecodeResult(word, False, max_iters)


def _check_rows(h: SparseParityCheck) -> np.ndarray:
    """Edge ids grouped by check, padded with -1 to the largest row weight."""
    chk, _ = h.edges
    width = max(h.row_weights(), default=0)
    table = np.full((h.rows, width), -1, dtype=np.int64)
    fill = np.zeros(h.rows, dtype=np.int64)
    for e, r in enumerate(chk.tolist()):
        table[r, fill[r]] = e
        fill[r] += 1
    return table


def decode_sum_product(h: SparseParityCheck, llrs, max_iters: int = DEFAULT_MAX_ITERS) -> DecodeResult:
    """Flooding sum-product decoding with the tanh check update.

    Message magnitudes are clamped to ``LLR_CLAMP``.  A bit whose posterior
    LLR is exactly zero is undecided, and a word containing one is never
    reported as converged.
    """
    llr = np.asarray(llrs, dtype=np.float64)
    _check_length(h, llr)
    if not np.all(np.isfinite(llr)):
        raise ValueError("LLRs must be finite")
    llr = np.clip(llr, -LLR_CLAMP, LLR_CLAMP)
    chk, var = h.edges
    rows = _check_rows(h)
    pad = rows < 0
    idx = np.where(pad, 0, rows)
    c2v = np.zeros(len(chk), dtype=np.float64)

    def decide(post):
        word = (post < 0).astype(np.uint8)
        ok = not h.syndrome(word).any() and not np.any(post == 0)
        return word, ok

    word, ok = decide(llr)
    if ok:
        return DecodeResult(word, True, 0)
    for it in range(1, max_iters + 1):
        post = llr + np.bincount(var, weights=c2v, minlength=h.cols)
        v2c = np.clip(post[var] - c2v, -LLR_CLAMP, LLR_CLAMP)
        t = np.tanh(0.5 * v2c)[idx]
        t[pad] = 1.0
        # product of all other edges on the check, via prefix and suffix products
        ones = np.ones((h.rows, 1))
        prefix = np.cumprod(np.hstack([ones, t[:, :-1]]), axis=1)
        suffix = np.cumprod(np.hstack([ones, t[:, :0:-1]]), axis=1)[:, ::-1]
        ext = np.clip(prefix * suffix, -0.999999999999, 0.999999999999)
        msg = np.clip(2.0 * np.arctanh(ext), -LLR_CLAMP, LLR_CLAMP)
        c2v[rows[~pad]] = msg[~pad]
        post = llr + np.bincount(var, weights=c2v, minlength=h.cols)
        word, ok = decide(post)
        if ok:
            return DecodeResult(word, True, it)
    return DecodeResult(word, False, max_iters)
