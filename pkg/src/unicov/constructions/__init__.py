"""Named set families package."""
