"""Invariant computation service."""
