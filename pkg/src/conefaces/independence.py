"""d-independence and general linear position tests.

The geometric half of d-independence (no forced extra common zeros) is
never decided by root finding.  Instead we use the Hilbert-function
criterion: the configuration is d-independent exactly when the Hilbert
polynomial of the quotient by the ideal generated by I_d equals the number
of points, and the Hilbert function is guaranteed to have stabilized at
degree (n-1)(d-1)+d whenever the set is d-independent.  Because the
converse stabilization bound is not effective, the verdict is tri-state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exact_linalg import Matrix, rank, span
from .ideal_components import (
    PointConfiguration,
    basis_forms,
    evaluation_row,
    gradient_rows,
    vanishing_component,
    vanishing_dim,
)
from .polynomials import monomial_basis, monomial_multiply, space_dim


@dataclass(frozen=True)
class IndependenceReport:
    condition2: bool
    hilbert_values: tuple  # pairs (degree k, HF value)
    verdict: str  # "yes" | "no" | "indeterminate"
    stabilization_degree_used: int

    def to_json(self):
        return {
            "condition2": self.condition2,
            "hilbert_values": [list(kv) for kv in self.hilbert_values],
            "verdict": self.verdict,
            "stabilization_degree_used": self.stabilization_degree_used,
        }


def condition2_holds(g: PointConfiguration, d: int) -> bool:
    """Linear independence of single vanishing plus one double vanishing.

    True iff for every point s the evaluation rows at the other points
    together with the n gradient rows at s have full rank |Gamma| + n - 1.
    """
    target = g.size + g.n - 1
    if space_dim(g.n, d) < target:
        raise ValueError(
            f"H_{{{g.n},{d}}} has dimension {space_dim(g.n, d)} < {target}; "
            "the required codimension is unreachable"
        )
    for s in g.points:
        rows = [evaluation_row(p, g.n, d) for p in g.points if p is not s]
        rows.extend(gradient_rows(s, g.n, d))
        if rank(Matrix.from_rows(rows, cols=space_dim(g.n, d))) != target:
            return False
    return True


def hilbert_function(g: PointConfiguration, d: int, k: int) -> int:
    """Hilbert function at degree k of the quotient by the ideal generated by I_d."""
    if k < d:
        raise ValueError("degree k must be at least d")
    basis = basis_forms(vanishing_component(g, d), g.n, d)
    vectors = [
        monomial_multiply(q, exp).coeffs
        for exp in monomial_basis(g.n, k - d)
        for q in basis
    ]
    # products lie inside I_k(Gamma), whose dimension caps the rank
    bound = vanishing_dim(g, k)
    rk = span(vectors, space_dim(g.n, k), max_dim=bound).dim
    return space_dim(g.n, k) - rk


@lru_cache(maxsize=1024)
def is_d_independent(g: PointConfiguration, d: int) -> IndependenceReport:
    k_star = (g.n - 1) * (d - 1) + d
    try:
        cond2 = condition2_holds(g, d)
    except ValueError:
        # ambient space too small to reach the codimension: condition 2 fails
        cond2 = False

    values = [(k_star, hilbert_function(g, d, k_star))]
    values.append((k_star + 1, hilbert_function(g, d, k_star + 1)))
    used = k_star + 1
    # extend past an unstabilized window, up to k* + n, before giving up
    while values[-1][1] != values[-2][1] and used < k_star + g.n:
        used += 1
        values.append((used, hilbert_function(g, d, used)))

    stabilized = values[-1][1] == values[-2][1]
    if not cond2:
        verdict = "no"
    elif stabilized and values[-1][1] == g.size:
        verdict = "yes"
    elif stabilized and values[-1][1] > g.size:
        verdict = "no"
    else:
        verdict = "indeterminate"
    return IndependenceReport(
        condition2=cond2,
        hilbert_values=tuple(values),
        verdict=verdict,
        stabilization_degree_used=used,
    )


def is_general_linear_position(g: PointConfiguration) -> bool:
    """No n points on a common hyperplane, projectively.

    For |Gamma| <= n this reads as linear independence of the coordinate
    vectors; for larger sets every n-subset must have rank n.
    """
    rows = [p.coords for p in g.points]
    if g.size <= g.n:
        return rank(Matrix.from_rows(rows, cols=g.n)) == g.size
    for subset in combinations(rows, g.n):
        if rank(Matrix.from_rows(subset, cols=g.n)) != g.n:
            return False
    return True
