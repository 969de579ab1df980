"""Finite abelian groups package."""
