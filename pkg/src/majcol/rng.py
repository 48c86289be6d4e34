"""Counter-based deterministic RNG.

Every random draw is a pure function of (seed, stream, trial, index), so
Monte-Carlo trials can be partitioned across workers in any way and still
reproduce the serial run bit for bit.  The mixer is the splitmix64
finalizer; the scalar and the numpy-vectorized paths compute identical
values.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# stream ids used by the samplers
STREAM_INDICATOR = 0
STREAM_CYCLE = 1
STREAM_GEN = 2


def _mix(x: int) -> int:
    x &= _MASK
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK
    x ^= x >> 31
    return x


def _fold(h: int, part: int) -> int:
    return _mix(h ^ ((part * _GOLDEN) & _MASK))


def key_base(seed: int, stream: int) -> int:
    """Pre-folded (seed, stream) prefix; trial and index get folded on top."""
    return _fold(_fold(_GOLDEN, seed & _MASK), stream & _MASK)


def uniform(seed: int, stream: int, trial: int, index: int) -> float:
    """One deterministic uniform in [0, 1)."""
    h = _fold(_fold(key_base(seed, stream), trial & _MASK), index & _MASK)
    return (h >> 11) * 2.0 ** -53


_NP_GOLDEN = np.uint64(_GOLDEN)
_NP_M1 = np.uint64(0xBF58476D1CE4E5B9)
_NP_M2 = np.uint64(0x94D049BB133111EB)


def _mix_np(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(30))
    x = x * _NP_M1
    x = x ^ (x >> np.uint64(27))
    x = x * _NP_M2
    x = x ^ (x >> np.uint64(31))
    return x


def _fold_np(h: np.ndarray, part: np.ndarray) -> np.ndarray:
    return _mix_np(h ^ (part * _NP_GOLDEN))


def uniform_block(seed: int, stream: int, trial_lo: int, trial_hi: int,
                  n_index: int) -> np.ndarray:
    """Uniforms for trials [trial_lo, trial_hi) x indices [0, n_index).

    Shape (trial_hi - trial_lo, n_index); entry [t, i] equals
    uniform(seed, stream, trial_lo + t, i).
    """
    base = np.uint64(key_base(seed, stream))
    trials = np.arange(trial_lo, trial_hi, dtype=np.uint64)
    ht = _fold_np(base, trials)
    idx = np.arange(n_index, dtype=np.uint64)
    h = _fold_np(ht[:, None], idx[None, :])
    return (h >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
