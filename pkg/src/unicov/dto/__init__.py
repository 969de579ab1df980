"""DTO package."""
