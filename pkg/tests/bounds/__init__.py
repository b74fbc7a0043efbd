"""Tests for the bounds module."""
