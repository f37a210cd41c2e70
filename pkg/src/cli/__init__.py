from src.cli.registry import (
    BaseCommand,
    CommandRegistry,
    CommandResult,
    register_command,
    get_registry,
)

__all__ = [
    "BaseCommand",
    "CommandRegistry",
    "CommandResult",
    "register_command",
    "get_registry",
]
