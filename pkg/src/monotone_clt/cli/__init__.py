"""
Command-line interface for the monotone CLT toolkit.
"""

from .commands import create_parser, main

__all__ = ["create_parser", "main"]
