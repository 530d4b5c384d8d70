"""Snort solver and strategy checker on triangular grids."""

import json

from ._core import (
    Graph,
    InvalidArgument,
    NoStrategy,
    Position,
    ResourceExhausted,
    Solver,
    build_family,
    families,
)
from ._core import verify_copycat as _verify_copycat


def verify_copycat(family: str, n: int) -> dict:
    """Verification report for the prescribed strategy, as a dict."""
    return json.loads(_verify_copycat(family, n))


def solve(family: str, n: int) -> str:
    """Outcome class (N, P, L or R) of the empty board."""
    return Solver().outcome(Position.initial(family, n))


__all__ = [
    "Graph",
    "InvalidArgument",
    "NoStrategy",
    "Position",
    "ResourceExhausted",
    "Solver",
    "build_family",
    "families",
    "solve",
    "verify_copycat",
]
