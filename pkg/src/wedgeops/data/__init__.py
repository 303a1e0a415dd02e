"""Bundled edge-list fixtures."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

FIXTURES = ("karate", "florentine", "k3", "p3", "c4")


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture edge list, e.g. fixture_path("karate")."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    with resources.as_file(resources.files(__name__) / f"{name}.edgelist") as p:
        return Path(p)
