"""Tests for the io module."""
