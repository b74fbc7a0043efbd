"""exchkit tests."""
