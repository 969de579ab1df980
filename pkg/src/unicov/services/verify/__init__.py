"""Campaign, table and replay service."""
