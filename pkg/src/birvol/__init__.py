"""Exact symbolic toolkit for volume-preserving birational maps."""

__version__ = "0.1.0"
