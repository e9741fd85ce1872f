"""Conversational newscaster engine and its analysis toolchain."""

__version__ = "0.1.0"
