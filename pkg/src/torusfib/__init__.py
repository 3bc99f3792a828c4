"""Mapping class group relations and singular-fiber bounds for Lefschetz fibrations over the torus."""

__version__ = "0.1.0"
