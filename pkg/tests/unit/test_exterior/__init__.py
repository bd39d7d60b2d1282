"""Unit tests for the exterior calculus layer."""
