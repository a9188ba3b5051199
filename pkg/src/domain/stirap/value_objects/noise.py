"""Noise configuration, noise tracks and Monte Carlo aggregates."""

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import numpy as np

from src.domain.numerics import UniformStream
from src.domain.numerics.random_streams import SEED_LIMIT
from src.domain.shared.exceptions import InvariantViolation

CHANNELS: Tuple[str, ...] = ("omega0", "theta", "delta")
MODES = ("independent", "shared")
_SEGMENT_SLACK = 1e-9
DEFAULT_SEGMENTS = 512


@dataclass(frozen=True)
class NoiseConfig:
    """Multiplicative fluctuations ``G -> G (1 + w(t))`` with piecewise-constant ``w``.

    ``w`` is redrawn from ``uniform(-amplitude, amplitude)`` every
    ``resample_interval``, which defaults to ``T/512`` of the window it is
    applied to. In ``independent`` mode each channel has its own
    track; in ``shared`` mode one track drives every selected channel.
    """

    amplitude: float = 0.1
    resample_interval: Optional[float] = None
    master_seed: int = 0
    channels: FrozenSet[str] = field(default_factory=lambda: frozenset(CHANNELS))
    mode: str = "independent"

    def __post_init__(self):
        object.__setattr__(self, "channels", frozenset(self.channels))
        if not (math.isfinite(self.amplitude) and 0 <= self.amplitude < 1):
            raise InvariantViolation(f"Noise amplitude must satisfy 0 <= amplitude < 1, got {self.amplitude}")
        if self.resample_interval is not None and not (
            math.isfinite(self.resample_interval) and self.resample_interval > 0
        ):
            raise InvariantViolation(f"resample_interval must be positive, got {self.resample_interval}")
        if int(self.master_seed) != self.master_seed or not 0 <= self.master_seed < SEED_LIMIT:
            raise InvariantViolation(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        unknown = self.channels - set(CHANNELS)
        if unknown:
            raise InvariantViolation(f"Unknown noise channels {sorted(unknown)}, expected a subset of {CHANNELS}")
        if self.mode not in MODES:
            raise InvariantViolation(f"Noise mode must be one of {MODES}, got '{self.mode}'")

    @property
    def is_silent(self) -> bool:
        return self.amplitude == 0 or not self.channels

    def interval_for(self, window: float) -> float:
        """Resample interval for a window of length ``window``."""
        if self.resample_interval is not None:
            return self.resample_interval
        return window / DEFAULT_SEGMENTS


@dataclass(frozen=True, eq=False)
class NoiseTrack:
    """Piecewise-constant offsets ``w`` per channel, rows ordered as :data:`CHANNELS`."""

    offsets: np.ndarray
    t_start: float
    interval: float

    def __post_init__(self):
        offsets = np.asarray(self.offsets, dtype=float)
        object.__setattr__(self, "offsets", offsets)
        if offsets.ndim != 2 or offsets.shape[0] != len(CHANNELS) or offsets.shape[1] < 1:
            raise InvariantViolation(f"Noise offsets must have shape (3, n), got {offsets.shape}")
        if self.interval <= 0:
            raise InvariantViolation("Noise interval must be positive")

    @property
    def n_segments(self) -> int:
        return self.offsets.shape[1]

    def segment(self, times) -> np.ndarray:
        position = (np.asarray(times, dtype=float) - self.t_start) / self.interval
        index = np.floor(position + _SEGMENT_SLACK).astype(int)
        return np.clip(index, 0, self.n_segments - 1)

    def values(self, channel: str, times) -> np.ndarray:
        """Offsets of ``channel`` at ``times``."""
        return self.offsets[CHANNELS.index(channel), self.segment(times)]

    @staticmethod
    def segments_for(t_start: float, t_end: float, interval: float) -> int:
        return max(1, math.ceil((t_end - t_start) / interval - _SEGMENT_SLACK))

    @classmethod
    def draw(cls, cfg: NoiseConfig, run_index: int, t_start: float, t_end: float) -> "NoiseTrack":
        """Track for run ``run_index`` from the stream ``(master_seed, run_index)``.

        Draws for all three channels are taken in a fixed order whatever the
        channel selection, so a run's offsets do not depend on which channels
        are switched on.
        """
        interval = cfg.interval_for(t_end - t_start)
        n = cls.segments_for(t_start, t_end, interval)
        stream = UniformStream(int(cfg.master_seed), run_index)
        if cfg.mode == "shared":
            offsets = np.tile(stream.uniform_array(n, cfg.amplitude), (len(CHANNELS), 1))
        else:
            offsets = stream.uniform_array(len(CHANNELS) * n, cfg.amplitude).reshape(len(CHANNELS), n)
        for row, channel in enumerate(CHANNELS):
            if channel not in cfg.channels:
                offsets[row] = 0.0
        return cls(offsets=offsets, t_start=t_start, interval=interval)

    @classmethod
    def frozen(cls, offsets: Dict[str, float], t_start: float, t_end: float, interval: float) -> "NoiseTrack":
        """Constant offsets, e.g. ``{"omega0": 0.1}``; unspecified channels are zero."""
        unknown = set(offsets) - set(CHANNELS)
        if unknown:
            raise InvariantViolation(f"Unknown noise channels {sorted(unknown)}")
        n = cls.segments_for(t_start, t_end, interval)
        rows = np.array([[offsets.get(channel, 0.0)] * n for channel in CHANNELS], dtype=float)
        return cls(offsets=rows, t_start=t_start, interval=interval)


@dataclass(frozen=True)
class NoisyRunResult:
    """Outcome of one Monte Carlo run; ``p3_final`` is ``None`` when the run failed."""

    run: int
    seed: int
    p3_final: Optional[float] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.p3_final is None


@dataclass(frozen=True)
class MonteCarloStats:
    """Aggregate final target populations over the successful runs."""

    n_runs: int
    mean_p3: float
    std_p3: float
    min_p3: float
    seeds: Tuple[int, ...]
    p3_values: Tuple[float, ...]
    n_failed: int = 0
    failures: Tuple[Tuple[int, str], ...] = ()

    def __post_init__(self):
        if self.std_p3 < 0:
            raise InvariantViolation("std_p3 must be non-negative")
        if self.min_p3 > self.mean_p3:
            raise InvariantViolation(f"min_p3 {self.min_p3!r} exceeds mean_p3 {self.mean_p3!r}")

    @property
    def n_succeeded(self) -> int:
        return self.n_runs - self.n_failed

    @classmethod
    def from_runs(cls, runs: Sequence[NoisyRunResult]) -> "MonteCarloStats":
        """Aggregate runs in run order; failed runs are counted and excluded.

        Raises:
            InvariantViolation: if no run is given or every run failed.
        """
        if not runs:
            raise InvariantViolation("Monte Carlo needs at least one run")
        ordered = sorted(runs, key=lambda r: r.run)
        good = [r for r in ordered if not r.failed]
        failures = tuple((r.run, r.error or "unknown error") for r in ordered if r.failed)
        if not good:
            raise InvariantViolation(f"All {len(ordered)} Monte Carlo runs failed")

        values = np.array([r.p3_final for r in good], dtype=float)
        if np.ptp(values) == 0:
            mean, std = float(values[0]), 0.0
        else:
            mean, std = float(values.mean()), float(values.std())
        return cls(
            n_runs=len(ordered),
            mean_p3=mean,
            std_p3=std,
            min_p3=min(float(values.min()), mean),
            seeds=tuple(r.seed for r in ordered),
            p3_values=tuple(float(v) for v in values),
            n_failed=len(failures),
            failures=failures,
        )
