"""STIRAP domain value objects."""

from .lambda_drive import LambdaDrive, MixingAngles
from .modified_drive import DriveColumns, ModifiedDrive, SmallDetuningApprox
from .noise import CHANNELS, MonteCarloStats, NoiseConfig, NoiseTrack, NoisyRunResult
from .pulse_params import PulseParams
from .run_summary import OmegaMax, PulseArea, RunSummary
from .shortcut_frame import LambdaKappaProducts, ShortcutFrame

__all__ = [
    "CHANNELS",
    "DriveColumns",
    "LambdaDrive",
    "LambdaKappaProducts",
    "MixingAngles",
    "ModifiedDrive",
    "MonteCarloStats",
    "NoiseConfig",
    "NoiseTrack",
    "NoisyRunResult",
    "OmegaMax",
    "PulseArea",
    "PulseParams",
    "RunSummary",
    "ShortcutFrame",
    "SmallDetuningApprox",
]
