"""SplitMix64, the only source of randomness in the package.

The generator is counter based: the i-th output (i = 1, 2, ...) for a
seed ``s`` is ``mix64(s + i * GAMMA mod 2**64)``, where ``mix64`` is the
SplitMix64 finalizer (Steele, Lea & Flood 2014).  Because every output is
a pure function of ``(seed, i)`` the stream can be produced in one
vectorized numpy call and is bit-identical on every platform.

A uniform double in [0, 1) is taken from the top 53 bits of an output:
``(x >> 11) * 2**-53``.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def stream(seed: int, count: int) -> np.ndarray:
    """First ``count`` SplitMix64 outputs for ``seed`` as a uint64 array."""
    seed &= MASK64
    idx = np.arange(1, count + 1, dtype=np.uint64)
    # uint64 array arithmetic wraps modulo 2**64, as the algorithm requires
    z = np.uint64(seed) + idx * np.uint64(GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, count: int) -> np.ndarray:
    return (stream(seed, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def derive_seed(seed: int, index: int) -> int:
    """Child seed for task ``index``; injective in ``index`` for a fixed seed."""
    return mix64((seed & MASK64) + (index + 1) * GAMMA)
