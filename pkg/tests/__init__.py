"""Test suite for courant-tduality."""
