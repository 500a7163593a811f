"""Shipped surface files for tests, demos, and CLI smoke checks."""

from importlib import resources


def path(name: str):
    """Filesystem path of a shipped fixture, e.g. path("abelian.surface")."""
    return resources.files(__package__).joinpath(name)
