"""Domain event base class."""

from abc import ABC
from dataclasses import dataclass, field
from datetime import datetime, timezone
import uuid
from typing import Any, Dict


@dataclass
class DomainEvent(ABC):
    """Base class for all domain events."""

    aggregate_id: str = field(default="")
    event_id: str = field(default_factory=lambda: str(uuid.uuid4()))
    occurred_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    def to_dict(self) -> Dict[str, Any]:
        """Convert event to dictionary representation."""
        payload = {
            key: value for key, value in self.__dict__.items()
            if key not in ("event_id", "occurred_at", "aggregate_id")
        }
        return {
            "event_id": self.event_id,
            "occurred_at": self.occurred_at.isoformat(),
            "aggregate_id": self.aggregate_id,
            "event_type": self.__class__.__name__,
            **payload,
        }
