"""Tests for the extremal module."""
