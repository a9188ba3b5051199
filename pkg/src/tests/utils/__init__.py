"""Test utilities package."""

