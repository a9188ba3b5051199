"""Domain layer unit tests."""

