"""Fourier analysis on finite abelian groups package."""
