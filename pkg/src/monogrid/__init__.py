"""Monotone grid drawings of connected planar graphs."""
