"""Closed-form dimension-gap bounds and exact gap predictions.

Pure integer arithmetic: the naive lower bound on the gap between the
symbolic and ordinary square dimensions for a d-independent configuration
of k points, its maximizer, the smallest k with a positive bound, and the
exact ternary prediction, all cross-checkable against the exact rank
computations elsewhere in the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _check_even(two_d: int) -> int:
    if two_d % 2 != 0 or two_d < 2:
        raise ValueError("degree must be a positive even integer")
    return two_d // 2


def max_independent_size(n: int, d: int) -> int:
    """Largest k for which generic k-point sets are d-independent."""
    return math.comb(n + d - 1, d) - n


def ah_count(n: int, two_d: int, k: int) -> int:
    """Generic dimension of the degree-2d symbolic square: each double zero
    imposes at most n linear conditions."""
    return max(0, math.comb(n + two_d - 1, two_d) - n * k)


def naive_gap(n: int, two_d: int, k: int) -> int:
    """Lower bound on dim(symbolic) - dim(ordinary) at degree 2d, k points."""
    d = _check_even(two_d)
    if not 1 <= k <= max_independent_size(n, d):
        raise ValueError(
            f"k must lie in 1..{max_independent_size(n, d)} for (n, 2d) = ({n}, {two_d})"
        )
    return (
        math.comb(n + two_d - 1, two_d)
        - k * n
        - math.comb(math.comb(n + d - 1, d) - k + 1, 2)
    )


def max_gap(n: int, two_d: int):
    """(argmax k, value): the bound is a concave quadratic in k maximized at
    the largest admissible k, where it collapses to a closed form."""
    d = _check_even(two_d)
    k_max = max_independent_size(n, d)
    closed = (
        math.comb(n + two_d - 1, two_d)
        - n * math.comb(n + d - 1, d)
        + math.comb(n, 2)
    )
    value = naive_gap(n, two_d, k_max)
    if value != closed:
        raise AssertionError("closed form disagrees with direct evaluation")
    return k_max, value


def _closed_form_min_k(n: int, two_d: int):
    """Smallest integer strictly above the smaller root of the gap quadratic.

    Exact integer arithmetic: k is above the root iff 2(A - k) + 1 <
    sqrt(disc), with A the largest admissible k.
    """
    d = two_d // 2
    a = max_independent_size(n, d)
    disc = (
        (2 * n - 1) ** 2
        + 8 * math.comb(n + two_d - 1, two_d)
        - 8 * n * math.comb(n + d - 1, d)
    )
    if disc < 0:
        return None

    def above_root(k):
        lhs = 2 * (a - k) + 1
        return lhs < 0 or lhs * lhs < disc

    for k in range(1, a + 1):
        if above_root(k):
            return k
    return None


def min_k_positive(n: int, two_d: int):
    """Smallest k with a strictly positive naive gap, or None.

    Found by integer scan; the closed-form root expression is evaluated in
    exact arithmetic only as a cross-check.
    """
    d = _check_even(two_d)
    found = None
    for k in range(1, max_independent_size(n, d) + 1):
        if naive_gap(n, two_d, k) > 0:
            found = k
            break
    if found is not None:
        candidate = _closed_form_min_k(n, two_d)
        if candidate != found:
            raise AssertionError(
                f"closed-form bound {candidate} disagrees with scan result {found}"
            )
    return found


def ternary_prediction(d: int, k: int) -> dict:
    """Exact equal/strict-gap prediction for d-independent plane sets.

    The strict-gap value reads the leading binomial as the dimension of the
    space of degree-2d ternary forms; the threshold and range come from the
    complete ternary characterization.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    top = math.comb(d + 2, 2) - 3
    if k < 1:
        raise ValueError("k must be positive")
    if k > top:
        return {"relation": "out_of_range", "predicted_gap": None}
    if k <= math.comb(d + 1, 2):
        return {"relation": "equal", "predicted_gap": 0}
    gap = (math.comb(2 * d + 2, 2) - 3 * k) - math.comb(
        math.comb(d + 2, 2) - k + 1, 2
    )
    return {"relation": "strict_gap", "predicted_gap": gap}


@dataclass(frozen=True)
class GapProfile:
    n: int
    two_d: int
    values: tuple  # pairs (k, gap bound)
    k_max: int
    max_gap: int
    k_min_positive: int | None
    max_independent_hint: int

    def to_json(self):
        return {
            "n": self.n,
            "two_d": self.two_d,
            "values": [list(kv) for kv in self.values],
            "k_max": self.k_max,
            "max_gap": self.max_gap,
            "k_min_positive": self.k_min_positive,
            "max_independent_hint": self.max_independent_hint,
        }


def gap_profile(n: int, two_d: int, k_range=None) -> GapProfile:
    d = _check_even(two_d)
    hint = max_independent_size(n, d)
    lo, hi = k_range if k_range is not None else (1, hint)
    if not 1 <= lo <= hi <= hint:
        raise ValueError(f"k range must lie within 1..{hint}")
    values = tuple((k, naive_gap(n, two_d, k)) for k in range(lo, hi + 1))
    k_max, value = max_gap(n, two_d)
    return GapProfile(
        n=n,
        two_d=two_d,
        values=values,
        k_max=k_max,
        max_gap=value,
        k_min_positive=min_k_positive(n, two_d),
        max_independent_hint=hint,
    )
