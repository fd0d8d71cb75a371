"""Algebra, graph, complex and arithmetic primitives."""
