"""Exact tropical polyhedral cones: half-space representations and their canonical form."""

__version__ = "0.1.0"
