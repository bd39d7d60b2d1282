"""Unit tests for twisted Courant algebroids."""
