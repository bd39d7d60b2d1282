"""Unit tests for reduction by foliation subbundles."""
