import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcaldpc.channel import Bsc, frame_rng, transmit
from dcaldpc.codec import Encoder, decode_bit_flip, decode_sum_product
from dcaldpc.pbibd import parity_check


@pytest.fixture(scope="module")
def enc6():
    return Encoder.from_parity_check(parity_check(6))


def test_encoder_dimensions(enc6):
    assert enc6.dimension == 98 and enc6.length == 132


def test_zero_message(enc6):
    assert not enc6.encode(np.zeros(98, dtype=np.uint8)).any()


def test_unit_messages_give_generator_rows(enc6):
    rows = enc6.generator_rows()
    for i in (0, 17, 97):
        e = np.zeros(98, dtype=np.uint8)
        e[i] = 1
        assert enc6.encode(e).tolist() == rows[i].tolist()


def test_random_messages_zero_syndrome(enc6):
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = rng.integers(0, 2, 98, dtype=np.uint8)
        cw = enc6.encode(m)
        assert not (parity_check(6).to_dense().astype(int) @ cw % 2).any()
        assert enc6.message_of(cw).tolist() == m.tolist()


def test_encode_length_mismatch(enc6):
    with pytest.raises(ValueError):
        enc6.encode(np.zeros(97, dtype=np.uint8))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.data())
def test_encode_then_syndrome_is_zero(n, data):
    h = parity_check(n)
    enc = Encoder.from_parity_check(h)
    bits = data.draw(st.lists(st.integers(0, 1), min_size=enc.dimension, max_size=enc.dimension))
    assert not h.syndrome(enc.encode(np.array(bits, dtype=np.uint8))).any()


def test_bit_flip_clean_codeword(enc6):
    cw = enc6.encode(np.random.default_rng(1).integers(0, 2, 98, dtype=np.uint8))
    res = decode_bit_flip(enc6.h, cw)
    assert res.converged and res.iterations == 0 and np.array_equal(res.word, cw)


def test_bit_flip_single_errors_all_positions(enc6):
    cw = enc6.encode(np.random.default_rng(2).integers(0, 2, 98, dtype=np.uint8))
    for pos in range(132):
        r = cw.copy()
        r[pos] ^= 1
        res = decode_bit_flip(enc6.h, r)
        assert res.converged and np.array_equal(res.word, cw), pos


def test_bit_flip_garbage_no_iterations(enc6):
    res = decode_bit_flip(enc6.h, np.ones(132, dtype=np.uint8), max_iters=0)
    assert not res.converged and res.iterations == 0


def test_bit_flip_length_mismatch(enc6):
    with pytest.raises(ValueError):
        decode_bit_flip(enc6.h, np.zeros(5, dtype=np.uint8))


def test_bit_flip_unique_max_lowers_unsatisfied(enc6):
    h = enc6.h
    cw = enc6.encode(np.random.default_rng(3).integers(0, 2, 98, dtype=np.uint8))
    rng = np.random.default_rng(4)
    hits = 0
    for _ in range(200):
        r = cw.copy()
        r[rng.choice(132, size=3, replace=False)] ^= 1
        s = h.syndrome(r)
        chk, var = h.edges
        unsat = np.bincount(var, weights=s[chk], minlength=h.cols)
        top = unsat.max()
        if np.count_nonzero(unsat == top) == 1 and top > 1.5:
            after = decode_bit_flip(h, r, max_iters=1)
            assert h.syndrome(after.word).sum() < s.sum()
            hits += 1
    assert hits > 20


def test_sum_product_saturated(enc6):
    cw = enc6.encode(np.random.default_rng(5).integers(0, 2, 98, dtype=np.uint8))
    llr = np.where(cw == 0, 10.0, -10.0)
    res = decode_sum_product(enc6.h, llr)
    assert res.converged and res.iterations == 0 and np.array_equal(res.word, cw)


def test_sum_product_zero_llr_never_converges(enc6):
    res = decode_sum_product(enc6.h, np.zeros(132), max_iters=10)
    assert not res.converged and res.iterations == 10


def test_sum_product_rejects_bad_input(enc6):
    with pytest.raises(ValueError):
        decode_sum_product(enc6.h, np.zeros(10))
    bad = np.zeros(132)
    bad[3] = np.nan
    with pytest.raises(ValueError):
        decode_sum_product(enc6.h, bad)


def test_sum_product_corrects_errors(enc6):
    cw = enc6.encode(np.random.default_rng(6).integers(0, 2, 98, dtype=np.uint8))
    llr = np.where(cw == 0, 4.0, -4.0)
    llr[[3, 77]] *= -1
    res = decode_sum_product(enc6.h, llr)
    assert res.converged and np.array_equal(res.word, cw)


def test_sum_product_bsc_regression(enc6):
    # 100 frames over BSC(0.01) with the pinned per-frame streams; 98 converge
    converged = 0
    for f in range(100):
        rng = frame_rng(2024, 0, f)
        cw = enc6.encode(rng.integers(0, 2, 98, dtype=np.uint8))
        res = decode_sum_product(enc6.h, transmit(cw, Bsc(0.01), rng))
        converged += res.converged
        if res.converged:
            assert not enc6.h.syndrome(res.word).any()
    assert converged >= 95
    assert converged == 98


def test_decoders_deterministic(enc6):
    rng = np.random.default_rng(8)
    llr = rng.normal(1.0, 2.0, 132)
    a = decode_sum_product(enc6.h, llr)
    b = decode_sum_product(enc6.h, llr.copy())
    assert np.array_equal(a.word, b.word) and a.iterations == b.iterations
    hard = (llr < 0).astype(np.uint8)
    assert np.array_equal(decode_bit_flip(enc6.h, hard).word, decode_bit_flip(enc6.h, hard).word)
