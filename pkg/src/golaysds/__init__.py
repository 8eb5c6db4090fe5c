"""Periodic Golay pairs from supplementary difference sets."""
