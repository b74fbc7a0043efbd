"""Tests for the decomposition subpackage."""
