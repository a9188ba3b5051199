"""In-process event bus."""

import logging
from typing import Dict, List, Type

from src.application.shared.event_bus import EventBus, EventHandler
from src.domain.shared.domain_event import DomainEvent

logger = logging.getLogger(__name__)


class SimpleEventBus(EventBus):
    """Fans events out to subscribers; a failing subscriber never stops an experiment."""

    def __init__(self):
        self.handlers: Dict[Type, List[EventHandler]] = {}

    def register_handler(self, event_type: Type, handler: EventHandler) -> None:
        self.handlers.setdefault(event_type, []).append(handler)
        logger.debug(f"Registered {handler.__class__.__name__} for {event_type.__name__}")

    async def publish(self, event: DomainEvent) -> None:
        event_type = type(event)
        handlers = self.handlers.get(event_type, [])

        logger.debug(f"Publishing {event_type.__name__} ({event.aggregate_id}) to {len(handlers)} handlers")

        for handler in handlers:
            try:
                await handler.handle(event)
            except Exception as e:
                logger.error(f"Error in event handler for {event_type.__name__}: {e}")
