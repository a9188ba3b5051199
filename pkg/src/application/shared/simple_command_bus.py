"""In-process command bus."""

import logging
from typing import Any, Dict, Type

from src.application.shared.command_bus import CommandBus, CommandHandler
from src.application.shared.exceptions import HandlerNotRegistered

logger = logging.getLogger(__name__)


class SimpleCommandBus(CommandBus):
    """Dispatches each command to the single handler registered for its type."""

    def __init__(self):
        self.handlers: Dict[Type, CommandHandler] = {}

    def register_handler(self, command_type: Type, handler: CommandHandler) -> None:
        """Register a handler for a command type.

        Args:
            command_type: The command dataclass
            handler: The handler instance; a later registration replaces an earlier one
        """
        self.handlers[command_type] = handler
        logger.debug(f"Registered {handler.__class__.__name__} for {command_type.__name__}")

    async def send(self, command: Any) -> Any:
        """Send a command to its handler.

        Raises:
            HandlerNotRegistered: no handler is registered for the command type
        """
        command_type = type(command)
        handler = self.handlers.get(command_type)

        if handler is None:
            raise HandlerNotRegistered(f"No handler registered for command type: {command_type.__name__}")

        logger.debug(f"Handling command: {command_type.__name__}")
        return await handler.handle(command)
