"""Unit tests for the para-Hermitian description."""
