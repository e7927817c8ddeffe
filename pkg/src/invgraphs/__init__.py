"""Invertibility of graphs with a unique perfect matching."""
