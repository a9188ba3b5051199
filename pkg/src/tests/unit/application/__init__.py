"""Application layer unit tests."""

