"""Shared test configuration; keeps this directory importable for oracles."""
