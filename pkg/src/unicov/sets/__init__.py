"""Group subsets and set operations package."""
