"""Exact spectral graph theory toolkit."""
