"""Infrastructure layer unit tests."""

