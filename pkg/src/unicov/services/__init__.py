"""Command services behind the CLI."""
