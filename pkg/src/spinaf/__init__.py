"""Exact computation of spin structures on 4-dimensional almost-flat manifolds."""

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "chartables",
    "cli",
    "clifford",
    "cyclotomic",
    "errors",
    "fp",
    "groups",
    "holonomy",
    "linalg",
    "qsqrt2",
    "spin",
]
