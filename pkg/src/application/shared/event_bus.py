"""Event bus for experiment events."""

from abc import ABC, abstractmethod
from typing import Generic, Iterable, TypeVar

from src.domain.shared.domain_event import DomainEvent

Event = TypeVar('Event', bound=DomainEvent)


class EventHandler(ABC, Generic[Event]):
    """Base class for event handlers."""

    @abstractmethod
    async def handle(self, event: Event) -> None:
        """Handle an event."""
        pass


class EventBus(ABC):
    """Interface for event bus."""

    @abstractmethod
    async def publish(self, event: DomainEvent) -> None:
        """Publish an event to its subscribers."""
        pass

    async def publish_all(self, events: Iterable[DomainEvent]) -> None:
        """Publish events in order."""
        for event in events:
            await self.publish(event)
