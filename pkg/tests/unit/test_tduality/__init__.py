"""Unit tests for the T-duality pipeline."""
