"""Seeded random point configurations with exact acceptance predicates."""

from __future__ import annotations

import math
import random

from .ideal_components import PointConfiguration
from .independence import is_d_independent, is_general_linear_position
from .polynomials import ProjectivePoint


def random_configuration(n: int, size: int, seed: int = 0, glp: bool = False,
                         d_independent: int | None = None, bound: int = 50,
                         max_rejects: int = 1000) -> PointConfiguration:
    """Integer-coordinate points, rejection-resampled until all exact
    predicates hold; deterministic given the seed.

    Generic configurations of size up to binomial(n+d-1, d) - n are
    d-independent, so rejection terminates almost immediately in practice.
    """
    if d_independent is not None:
        limit = math.comb(n + d_independent - 1, d_independent) - n
        if size > limit:
            raise ValueError(
                f"no {d_independent}-independent set of {size} points exists in "
                f"{n} variables (maximum {limit})"
            )
    rng = random.Random(seed)
    for _ in range(max_rejects):
        points = []
        seen = set()
        while len(points) < size:
            coords = tuple(rng.randint(-bound, bound) for _ in range(n))
            if not any(coords):
                continue
            p = ProjectivePoint(coords)
            key = p.canonical()
            if key in seen:
                continue
            seen.add(key)
            points.append(p)
        g = PointConfiguration(n, tuple(points))
        if glp and not is_general_linear_position(g):
            continue
        if d_independent is not None and is_d_independent(g, d_independent).verdict != "yes":
            continue
        return g
    raise ValueError("rejection sampling failed; the requirement may be unattainable")
