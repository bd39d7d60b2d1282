"""Unit tests for core framework modules."""
