"""xorshift64* streams keyed by (seed, index).

Each Monte Carlo trial owns its own stream, seeded by passing
``seed`` and the trial index through the SplitMix64 finalizer, so results do
not depend on the order in which trials are simulated.  ``StreamBank`` runs
many streams at once on numpy uint64 arrays; ``Xorshift64Star`` is the
scalar reference for a single stream.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_STAR = 0x2545F4914F6CDD1D
_TO_UNIT = 2.0 ** -53


def mix64(x: int) -> int:
    """SplitMix64 finalizer on a Python int."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _MUL1) & MASK64
    x = ((x ^ (x >> 27)) * _MUL2) & MASK64
    return x ^ (x >> 31)


def substream_state(seed: int, index: int) -> int:
    state = mix64((mix64(seed) + (index + 1) * GOLDEN) & MASK64)
    return state or GOLDEN


def derive_seed(seed: int, index: int) -> int:
    """Independent child seed, e.g. one per validation point."""
    return mix64(mix64(seed) ^ mix64(index + 0x5851F42D4C957F2D))


class Xorshift64Star:
    def __init__(self, seed: int, index: int = 0):
        self.state = substream_state(seed, index)

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * _STAR) & MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * _TO_UNIT


def _mix64_array(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(30))
    x = x * np.uint64(_MUL1)
    x = x ^ (x >> np.uint64(27))
    x = x * np.uint64(_MUL2)
    return x ^ (x >> np.uint64(31))


class StreamBank:
    """``count`` independent streams, stream k keyed by (seed, k)."""

    def __init__(self, seed: int, count: int):
        key = np.uint64(mix64(seed))
        idx = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            states = _mix64_array(key + idx * np.uint64(GOLDEN))
        states[states == 0] = np.uint64(GOLDEN)
        self.states = states

    def random(self, rows: np.ndarray | None = None) -> np.ndarray:
        """Advance the selected streams (all by default) one step; uniforms in [0, 1)."""
        x = self.states if rows is None else self.states[rows]
        x = x ^ (x >> np.uint64(12))
        x = x ^ (x << np.uint64(25))
        x = x ^ (x >> np.uint64(27))
        if rows is None:
            self.states = x
        else:
            self.states[rows] = x
        out = x * np.uint64(_STAR)
        return (out >> np.uint64(11)).astype(np.float64) * _TO_UNIT

    def keep(self, mask: np.ndarray) -> None:
        self.states = self.states[mask]
