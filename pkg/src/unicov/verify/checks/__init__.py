"""Registered checks, grouped by topic."""
