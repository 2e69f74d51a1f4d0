"""Configuration for tests."""

from .units.fixtures import circuit_factory, gea3, gea3_config, hed3, rng

__all__ = ["circuit_factory", "gea3", "gea3_config", "hed3", "rng"]
