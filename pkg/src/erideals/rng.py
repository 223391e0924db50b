"""Counter-based uniform streams (Philox4x32-10), vectorized over numpy arrays.

Every uniform is a pure function of ``(seed, trial, index)``: the 64-bit seed
is the Philox key, the trial index occupies the two high counter words and the
block index the two low ones.  Trials can therefore be generated in any order,
in any number of processes, and always reproduce the same values.

Philox4x32-10 is the generator of Salmon et al. (Random123); it passes the
TestU01 BigCrush battery.  Known-answer vectors are checked in the test-suite.
"""

from __future__ import annotations

import numpy as np

_MASK32 = np.uint64(0xFFFFFFFF)
_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = 0x9E3779B9
_W1 = 0xBB67AE85
_ROUNDS = 10


def philox4x32(c0, c1, c2, c3, k0: int, k1: int):
    """Apply the 10-round Philox4x32 bijection to arrays of 32-bit counters.

    Counter words are broadcast together; the key is scalar.  Returns four
    ``uint64`` arrays holding 32-bit output words.
    """
    c0, c1, c2, c3 = (np.asarray(c, dtype=np.uint64) & _MASK32 for c in (c0, c1, c2, c3))
    c0, c1, c2, c3 = np.broadcast_arrays(c0, c1, c2, c3)
    k0 &= 0xFFFFFFFF
    k1 &= 0xFFFFFFFF
    for r in range(_ROUNDS):
        if r:
            k0 = (k0 + _W0) & 0xFFFFFFFF
            k1 = (k1 + _W1) & 0xFFFFFFFF
        p0 = c0 * _M0
        p1 = c2 * _M1
        c0, c1, c2, c3 = (
            (p1 >> np.uint64(32)) ^ c1 ^ np.uint64(k0),
            p1 & _MASK32,
            (p0 >> np.uint64(32)) ^ c3 ^ np.uint64(k1),
            p0 & _MASK32,
        )
    return c0, c1, c2, c3


def _to_double(hi, lo):
    # 53 random bits -> [0, 1)
    return ((hi >> np.uint64(5)) * np.uint64(1 << 26) + (lo >> np.uint64(6))).astype(np.float64) * (
        1.0 / 9007199254740992.0
    )


def uniforms(seed: int, trials, count: int) -> np.ndarray:
    """Uniform [0, 1) draws of shape ``(len(trials), count)``.

    Row ``i`` is the stream of trial ``trials[i]``; column ``k`` is its
    ``k``-th draw.  Each Philox block yields two doubles.
    """
    if seed < 0 or seed >= 1 << 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    trials = np.asarray(trials, dtype=np.uint64).reshape(-1, 1)
    nblocks = (count + 1) // 2
    blocks = np.arange(nblocks, dtype=np.uint64).reshape(1, -1)
    o0, o1, o2, o3 = philox4x32(
        blocks & _MASK32,
        blocks >> np.uint64(32),
        trials & _MASK32,
        trials >> np.uint64(32),
        seed & 0xFFFFFFFF,
        seed >> 32,
    )
    out = np.empty((trials.shape[0], 2 * nblocks), dtype=np.float64)
    out[:, 0::2] = _to_double(o0, o1)
    out[:, 1::2] = _to_double(o2, o3)
    return out[:, :count]
