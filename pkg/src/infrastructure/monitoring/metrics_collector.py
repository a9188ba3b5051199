"""In-process metrics for experiment runs."""

import time
from typing import Any, Dict, Optional

from src.infrastructure.monitoring.logging_config import get_logger

logger = get_logger(__name__)


class MetricsCollector:
    """Counters, histograms and gauges kept in memory for the lifetime of a run.

    Metrics are logged at debug level and never written to result files.
    """

    def __init__(self):
        self.metrics: Dict[str, Any] = {}

    def increment_counter(self, name: str, value: int = 1) -> None:
        """Increment a counter metric.

        Args:
            name: The metric name
            value: The value to increment by
        """
        if name not in self.metrics:
            self.metrics[name] = 0
        self.metrics[name] += value
        logger.debug(f"Counter {name} incremented by {value}")

    def observe_histogram(self, name: str, value: float) -> None:
        """Record one observation, e.g. a wall-clock duration in seconds."""
        if name not in self.metrics:
            self.metrics[name] = []
        self.metrics[name].append(value)
        logger.debug(f"Histogram {name} observed value {value:.6g}")

    def set_gauge(self, name: str, value: float) -> None:
        self.metrics[name] = value
        logger.debug(f"Gauge {name} set to {value}")

    def get_metrics(self) -> Dict[str, Any]:
        """Get a shallow copy of all collected metrics."""
        return self.metrics.copy()

    def histogram_summary(self, name: str) -> Optional[Dict[str, float]]:
        """Count, total and mean of a histogram; ``None`` if nothing was observed."""
        values = self.metrics.get(name)
        if not isinstance(values, list) or not values:
            return None
        total = float(sum(values))
        return {"count": len(values), "total": total, "mean": total / len(values)}

    def reset(self) -> None:
        self.metrics.clear()


class Timer:
    """Context manager feeding the elapsed wall-clock time into a histogram."""

    def __init__(self, metrics_collector: MetricsCollector, metric_name: str):
        self.metrics_collector = metrics_collector
        self.metric_name = metric_name
        self.start_time: Optional[float] = None
        self.elapsed: float = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.start_time is not None:
            self.elapsed = time.perf_counter() - self.start_time
            self.metrics_collector.observe_histogram(self.metric_name, self.elapsed)
