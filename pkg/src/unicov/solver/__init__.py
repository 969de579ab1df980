"""Covering and universality solvers package."""
