"""STIRAP domain services: pulse shapes, Lambda system, shortcut, metrics, noise."""
