"""Test package for the STIRAP shortcut engine."""

