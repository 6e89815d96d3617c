"""Command-line interface."""

from arcscatter.cli.main import cli

__all__ = ["cli"]
