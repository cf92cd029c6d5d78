"""Seeded random voter matrices for property checks."""

from __future__ import annotations

import random

from .core import VoterMatrix, VoterRow, canonicalize


def random_matrix(
    rng: random.Random,
    max_t: int = 10,
    max_rows: int = 6,
    max_weight: int = 3,
    t: int | None = None,
) -> VoterMatrix:
    """Uniform-ish canonical matrix: random rows, weights, and topic count."""
    if t is None:
        t = rng.randint(1, max_t)
    n_rows = rng.randint(1, max_rows)
    rows = tuple(
        VoterRow(rng.randrange(1 << t), t, rng.randint(1, max_weight))
        for _ in range(n_rows)
    )
    canonical, _ = canonicalize(VoterMatrix(t, rows))
    return canonical
