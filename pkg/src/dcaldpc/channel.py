"""Reproducible Monte-Carlo transmission over BSC and BPSK/AWGN channels.

Random streams: frame ``f`` of sweep point ``p`` draws from a Philox4x64
generator keyed by ``numpy.random.SeedSequence(seed, spawn_key=(p, f))``.
Within a frame the message bits are drawn first (``integers(0, 2)``), then
the channel noise (``random()`` for BSC, ``standard_normal()`` for AWGN).
Results therefore depend only on (seed, point index, frame index), so frames
can run in any order or concurrently.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from .codec import LLR_CLAMP, DEFAULT_MAX_ITERS, Encoder, decode_bit_flip, decode_sum_product
from .sparse import SparseParityCheck

CSV_HEADER = ["point", "frames", "bit_errors", "frame_errors", "ber", "fer", "seed"]


@dataclass(frozen=True)
class Bsc:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 0.5 or math.isnan(self.p):
            raise ValueError(f"crossover probability {self.p} outside [0, 0.5]")

    @property
    def label(self) -> str:
        return f"bsc:{self.p:.4f}"


@dataclass(frozen=True)
class BiAwgn:
    eb_n0_db: float
    code_rate: Fraction

    def __post_init__(self):
        if not math.isfinite(self.eb_n0_db):
            raise ValueError("Eb/N0 must be finite")
        if not 0 < self.code_rate <= 1:
            raise ValueError("code rate must lie in (0, 1]")

    @property
    def sigma2(self) -> float:
        return 1.0 / (2.0 * float(self.code_rate) * 10.0 ** (self.eb_n0_db / 10.0))

    @property
    def label(self) -> str:
        return f"awgn:{self.eb_n0_db:.2f}"


ChannelModel = Union[Bsc, BiAwgn]


def frame_rng(seed: int, point: int, frame: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(point, frame))
    return np.random.Generator(np.random.Philox(ss))


def bsc_llr(p: float) -> float:
    if p >= 0.5:
        raise ValueError("a BSC with p = 0.5 carries no information")
    if p == 0:
        return LLR_CLAMP
    return min(math.log((1 - p) / p), LLR_CLAMP)


def transmit(codeword, ch: ChannelModel, rng: np.random.Generator) -> np.ndarray:
    """Send ``codeword`` through ``ch`` and return the channel LLRs."""
    bits = np.asarray(codeword).astype(np.uint8) & 1
    if isinstance(ch, Bsc):
        mag = bsc_llr(ch.p)
        flips = rng.random(bits.shape[0]) < ch.p
        received = bits ^ flips
        return np.where(received == 0, mag, -mag)
    if isinstance(ch, BiAwgn):
        s2 = ch.sigma2
        y = (1.0 - 2.0 * bits) + math.sqrt(s2) * rng.standard_normal(bits.shape[0])
        return 2.0 * y / s2
    raise TypeError(f"unknown channel {ch!r}")


@dataclass(frozen=True)
class BerRecord:
    point: str
    frames: int
    bit_errors: int
    frame_errors: int
    seed: int
    length: int

    @property
    def ber(self) -> float:
        return self.bit_errors / (self.frames * self.length)

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames

    def row(self) -> dict:
        return {
            "point": self.point,
            "frames": self.frames,
            "bit_errors": self.bit_errors,
            "frame_errors": self.frame_errors,
            "ber": repr(self.ber),
            "fer": repr(self.fer),
            "seed": self.seed,
        }


DECODERS: dict[str, Callable] = {
    "sum-product": lambda h, llr, it: decode_sum_product(h, llr, it),
    "bit-flip": lambda h, llr, it: decode_bit_flip(h, (llr < 0).astype(np.uint8), it),
}


def run_frame(enc: Encoder, ch: ChannelModel, decoder: str, seed: int, point: int, frame: int,
              max_iters: int = DEFAULT_MAX_ITERS) -> int:
    """Bit errors left after decoding one frame."""
    rng = frame_rng(seed, point, frame)
    msg = rng.integers(0, 2, size=enc.dimension, dtype=np.uint8)
    cw = enc.encode(msg)
    llr = transmit(cw, ch, rng)
    result = DECODERS[decoder](enc.h, llr, max_iters)
    return int(np.count_nonzero(result.word != cw))


def run_ber(
    h: SparseParityCheck,
    sweep: Sequence[ChannelModel],
    frames_per_point: int,
    decoder: str = "sum-product",
    seed: int = 0,
    threads: int = 1,
    max_iters: int = DEFAULT_MAX_ITERS,
    encoder: Encoder | None = None,
) -> list[BerRecord]:
    if frames_per_point < 1:
        raise ValueError("frames_per_point must be at least 1")
    if not sweep:
        raise ValueError("empty channel sweep")
    if decoder not in DECODERS:
        raise ValueError(f"unknown decoder {decoder!r}; choose from {sorted(DECODERS)}")
    enc = encoder or Encoder.from_parity_check(h)
    records = []
    for p_idx, ch in enumerate(sweep):
        def one(f, ch=ch, p_idx=p_idx):
            return run_frame(enc, ch, decoder, seed, p_idx, f, max_iters)

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                errors = list(pool.map(one, range(frames_per_point)))
        else:
            errors = [one(f) for f in range(frames_per_point)]
        records.append(BerRecord(
            ch.label, frames_per_point, sum(errors), sum(1 for e in errors if e), seed, h.cols))
    return records


def records_to_csv(records: Sequence[BerRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def records_to_json(records: Sequence[BerRecord]) -> str:
    rows = []
    for r in records:
        d = asdict(r)
        d.pop("length")
        d.update(ber=r.ber, fer=r.fer)
        rows.append({k: d[k] for k in CSV_HEADER})
    return json.dumps(rows, indent=2) + "\n"


def parse_point(text: str, code_rate: Fraction | None = None) -> ChannelModel:
    """Parse ``bsc:0.05`` or ``awgn:3.0`` (the latter needs ``code_rate``)."""
    kind, _, value = text.partition(":")
    if kind == "bsc":
        return Bsc(float(value))
    if kind == "awgn":
        if code_rate is None:
            raise ValueError("AWGN points need the code rate")
        return BiAwgn(float(value), code_rate)
    raise ValueError(f"cannot parse channel point {text!r}")
