import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CommandResult:
    """Machine-readable outcome of one command: envelope fields plus a record table."""

    command: str
    parameters: Dict[str, Any]
    summary: Dict[str, Any]
    records: List[Dict[str, Any]] = field(default_factory=list)
    columns: Optional[List[str]] = None

    def column_names(self) -> List[str]:
        if self.columns is not None:
            return list(self.columns)
        names: List[str] = []
        for record in self.records:
            names.extend(k for k in record if k not in names)
        return names


class BaseCommand(ABC):
    """Base class for all subcommands."""

    help: str = ""

    def __init__(self, config: Optional[Dict] = None, jobs: int = 1):
        """
        Initialize command with run configuration.

        Args:
            config: Parsed YAML configuration
            jobs: Worker processes available to the computation
        """
        self.config = config or {}
        self.jobs = jobs

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        """Add command-specific flags to its subparser."""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> CommandResult:
        """
        Run the computation.

        Returns:
            CommandResult for the output writers
        """
        pass

    def setting(self, section: str, key: str, default: Any) -> Any:
        """Value from the YAML section, or default when absent."""
        return (self.config.get(section) or {}).get(key, default)

    def pick(self, value: Any, section: str, key: str, default: Any) -> Any:
        """Command-line value when given, else YAML, else default."""
        return value if value is not None else self.setting(section, key, default)


class CommandRegistry:
    """
    Registry of subcommands keyed by their command line, e.g. "markoff verify".

    Supports:
    - Registration of command classes by name
    - Building the nested argparse tree
    - Instantiation with config and worker count
    """

    def __init__(self):
        self._commands: Dict[str, type] = {}

    def register(self, name: str, command_class: type):
        if not issubclass(command_class, BaseCommand):
            raise ValueError("Command class must inherit from BaseCommand")
        if name in self._commands:
            raise ValueError(f"Command already registered: {name}")
        self._commands[name] = command_class

    def create(self, name: str, config: Optional[Dict] = None, jobs: int = 1) -> BaseCommand:
        if name not in self._commands:
            raise ValueError(f"Unknown command: {name}. Available: {self.get_available_commands()}")
        return self._commands[name](config=config, jobs=jobs)

    def get_available_commands(self) -> List[str]:
        return sorted(self._commands)

    def build_parser(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        """
        Attach one subparser per command; multi-word commands nest under their first word.

        Args:
            parser: Top-level parser
            common: Parent parser with the shared output/run flags
        """
        groups: Dict[str, Dict[str, type]] = {}
        for name in self.get_available_commands():
            head, _, tail = name.partition(" ")
            groups.setdefault(head, {})[tail] = self._commands[name]

        top = parser.add_subparsers(dest="group", metavar="command", required=True)
        for head, members in groups.items():
            if list(members) == [""]:
                command_class = members[""]
                leaf = top.add_parser(head, parents=[common], help=command_class.help)
                command_class.add_arguments(leaf)
                leaf.set_defaults(command=head)
                continue
            group = top.add_parser(head, help=f"{head} commands")
            actions = group.add_subparsers(dest="action", metavar="action", required=True)
            for tail, command_class in members.items():
                leaf = actions.add_parser(tail, parents=[common], help=command_class.help)
                command_class.add_arguments(leaf)
                leaf.set_defaults(command=f"{head} {tail}")


# Global registry instance
_global_registry = CommandRegistry()


def register_command(name: str):
    """
    Decorator to register a command class.

    Usage:
        @register_command("markoff verify")
        class MarkoffVerify(BaseCommand):
            ...
    """
    def decorator(cls):
        _global_registry.register(name, cls)
        return cls
    return decorator


def get_registry() -> CommandRegistry:
    """Get the global command registry."""
    return _global_registry
