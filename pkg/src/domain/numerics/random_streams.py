"""Deterministic, splittable uniform random streams."""

import numpy as np

from src.domain.shared.exceptions import InvariantViolation

SEED_LIMIT = 2 ** 64


def _check_seed(master_seed: int, run_index: int) -> None:
    if not 0 <= master_seed < SEED_LIMIT:
        raise InvariantViolation(f"master_seed must be a 64-bit unsigned integer, got {master_seed}")
    if run_index < 0:
        raise InvariantViolation(f"run_index must be non-negative, got {run_index}")


def derive_seed(master_seed: int, run_index: int) -> int:
    """Per-run 64-bit seed derived from ``(master_seed, run_index)``."""
    _check_seed(master_seed, run_index)
    sequence = np.random.SeedSequence(master_seed, spawn_key=(run_index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


class UniformStream:
    """Counter-based uniform stream on [-1, 1).

    Stream ``k`` of a master seed is independent of every other stream and
    reproducible on any machine, so Monte Carlo runs can be executed in any
    order or in parallel.
    """

    def __init__(self, master_seed: int, run_index: int = 0):
        _check_seed(master_seed, run_index)
        self.master_seed = master_seed
        self.run_index = run_index
        sequence = np.random.SeedSequence(master_seed, spawn_key=(run_index,))
        self._generator = np.random.Generator(np.random.Philox(sequence))

    @property
    def seed(self) -> int:
        return derive_seed(self.master_seed, self.run_index)

    def uniform(self) -> float:
        """Next draw in [-1, 1)."""
        return float(self._generator.uniform(-1.0, 1.0))

    def uniform_array(self, size: int, amplitude: float = 1.0) -> np.ndarray:
        """``size`` draws scaled to [-amplitude, amplitude)."""
        return amplitude * self._generator.uniform(-1.0, 1.0, size=size)

    def __repr__(self) -> str:
        return f"UniformStream(master_seed={self.master_seed}, run_index={self.run_index})"
