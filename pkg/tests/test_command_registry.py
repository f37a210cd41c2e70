import argparse
import pytest
from src.cli.registry import (
    BaseCommand,
    CommandRegistry,
    CommandResult,
    get_registry,
    register_command
)
from src.cli.run import build_parser


class EchoCommand(BaseCommand):
    help = "Echo one value"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--value", type=int, default=None)

    def execute(self, args):
        value = self.pick(args.value, "echo", "value", 7)
        return CommandResult("echo", {"value": value}, {"jobs": self.jobs}, [{"value": value}])


def test_registry_singleton():
    """Test that get_registry returns the same instance."""
    assert get_registry() is get_registry()


def test_available_commands():
    """All subcommands are registered."""
    commands = get_registry().get_available_commands()

    for name in [
        "spectrum",
        "locus",
        "markoff verify",
        "markoff list",
        "violations search",
        "twist ratio",
        "twist sequence",
        "order reversal",
        "flat locus",
        "flat reps",
        "flat construct",
        "fhs verify",
        "fhs counterexample",
        "fhs resultant",
        "fhs solve",
        "zeros scan",
    ]:
        assert name in commands


def test_create_unknown_command():
    with pytest.raises(ValueError, match="Unknown command"):
        get_registry().create("nonexistent command")


def test_duplicate_registration():
    registry = CommandRegistry()
    registry.register("echo", EchoCommand)

    with pytest.raises(ValueError, match="already registered"):
        registry.register("echo", EchoCommand)
    with pytest.raises(ValueError, match="inherit from BaseCommand"):
        registry.register("other", object)


def test_register_decorator_uses_global_registry():
    """The decorator adds to the global registry and returns the class."""
    name = "echo test-only"
    if name not in get_registry().get_available_commands():
        decorated = register_command(name)(EchoCommand)
        assert decorated is EchoCommand
    assert name in get_registry().get_available_commands()


def test_pick_prefers_flag_then_config():
    """Command-line value, then YAML section, then default."""
    args = argparse.Namespace(value=None)

    assert EchoCommand().execute(args).parameters["value"] == 7
    assert EchoCommand(config={"echo": {"value": 3}}).execute(args).parameters["value"] == 3
    assert EchoCommand(config={"echo": {"value": 3}}).execute(argparse.Namespace(value=5)).parameters["value"] == 5


def test_nested_parser():
    """Multi-word commands become nested subparsers sharing the common flags."""
    registry = CommandRegistry()
    registry.register("echo", EchoCommand)
    registry.register("group one", EchoCommand)
    registry.register("group two", EchoCommand)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=None)
    parser = argparse.ArgumentParser()
    registry.build_parser(parser, common)

    args = parser.parse_args(["group", "two", "--value", "4", "--format", "csv"])
    assert args.command == "group two"
    assert args.value == 4
    assert args.format == "csv"
    assert parser.parse_args(["echo"]).command == "echo"


def test_real_parser_accepts_subcommands():
    parser = build_parser()

    args = parser.parse_args(["markoff", "verify", "--max", "1000"])
    assert args.command == "markoff verify"
    assert args.max == 1000
    assert args.normalization == "classical"

    args = parser.parse_args(["spectrum", "--point", "3,3,3", "--max-trace", "300", "--jobs", "2"])
    assert args.command == "spectrum"
    assert args.jobs == 2

    with pytest.raises(SystemExit):
        parser.parse_args(["spectrum", "--max-trace", "10", "--max-length", "3"])


def test_column_names():
    """Explicit columns win; otherwise keys are collected in order."""
    result = CommandResult("x", {}, {}, [{"a": 1}, {"b": 2, "a": 3}])
    assert result.column_names() == ["a", "b"]

    result = CommandResult("x", {}, {}, [{"a": 1}], columns=["b", "a"])
    assert result.column_names() == ["b", "a"]
