"""Enumeration bounds used by the brute-force routines."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class Limits:
    max_vertices: int = 16
    max_matchings: int = 10_000


LIMITS = Limits()


@contextmanager
def override(**kwargs):
    """Temporarily change fields of :data:`LIMITS`."""
    old = {k: getattr(LIMITS, k) for k in kwargs}
    for k, v in kwargs.items():
        setattr(LIMITS, k, v)
    try:
        yield LIMITS
    finally:
        for k, v in old.items():
            setattr(LIMITS, k, v)
