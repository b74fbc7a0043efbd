"""Tests for the permanent module."""
