"""Inequality harness: check registry, campaigns and the table experiment."""
