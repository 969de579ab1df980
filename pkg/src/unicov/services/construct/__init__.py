"""Family construction service."""
