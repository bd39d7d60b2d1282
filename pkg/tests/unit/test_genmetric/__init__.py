"""Unit tests for generalised metrics."""
