"""Unit tests for fiber relations."""
