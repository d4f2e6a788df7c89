"""Finite presentations of universal structures."""
