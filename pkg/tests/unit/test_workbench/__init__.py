"""Unit tests for documents and commands."""
