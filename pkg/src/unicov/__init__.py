"""Unicov Package."""
