"""Unicov core."""
