"""Experiment command handlers."""

from .figure_handler import FigureHandler
from .noise_monte_carlo_handler import NoiseMonteCarloHandler
from .simulate_handler import SimulateHandler

__all__ = ["FigureHandler", "NoiseMonteCarloHandler", "SimulateHandler"]
