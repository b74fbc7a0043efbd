"""Tests for the asymptotics module."""
