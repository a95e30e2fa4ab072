"""Degree components of vanishing ideals of point configurations.

Computes I_d(Gamma), the degree-2d parts of the ordinary and symbolic
squares of I(Gamma), the initial degree alpha, and assembles the face
dimension report that the rest of the library revolves around.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact_linalg import Matrix, Subspace, nullspace, rank, span
from .polynomials import (
    Form,
    ProjectivePoint,
    _coord_powers,
    monomial_basis,
    space_dim,
)
from .rational import ZERO, ONE, rat_str


@dataclass(frozen=True)
class PointConfiguration:
    """A finite set of pairwise distinct projective points."""

    n: int
    points: tuple

    def __post_init__(self):
        points = tuple(
            p if isinstance(p, ProjectivePoint) else ProjectivePoint(tuple(p))
            for p in self.points
        )
        object.__setattr__(self, "points", points)
        if not points:
            raise ValueError("configuration must contain at least one point")
        for p in points:
            if p.n != self.n:
                raise ValueError("point dimension disagrees with configuration")
        seen = set()
        for p in points:
            key = p.canonical()
            if key in seen:
                raise ValueError(f"repeated projective point {key}")
            seen.add(key)

    @property
    def size(self) -> int:
        return len(self.points)

    def to_json(self):
        return {"n": self.n, "points": [p.to_json() for p in self.points]}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], tuple(tuple(c) for c in data["points"]))


def evaluation_row(point: ProjectivePoint, n: int, d: int):
    """Row of all degree-d monomials evaluated at the point."""
    powers = _coord_powers(point.coords, d)
    row = []
    for exp in monomial_basis(n, d):
        term = ONE
        for i, e in enumerate(exp):
            if e:
                term *= powers[i][e]
        row.append(term)
    return row


def gradient_rows(point: ProjectivePoint, n: int, d: int):
    """n rows: the j-th lists d(monomial)/dx_j evaluated at the point."""
    powers = _coord_powers(point.coords, d)
    rows = [[] for _ in range(n)]
    for exp in monomial_basis(n, d):
        for j in range(n):
            ej = exp[j]
            if not ej:
                rows[j].append(ZERO)
                continue
            term = ONE * ej
            for i, e in enumerate(exp):
                if i == j:
                    e -= 1
                if e:
                    term *= powers[i][e]
            rows[j].append(term)
    return rows


@lru_cache(maxsize=512)
def vanishing_component(g: PointConfiguration, d: int) -> Subspace:
    """I_d(Gamma): kernel of the point-evaluation matrix on degree-d forms."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    m = Matrix.from_rows(
        [evaluation_row(p, g.n, d) for p in g.points], cols=space_dim(g.n, d)
    )
    return nullspace(m)


@lru_cache(maxsize=512)
def vanishing_dim(g: PointConfiguration, d: int) -> int:
    """dim I_d(Gamma) without materializing a kernel basis.

    Rank of the evaluation matrix is at most |Gamma|, so this is far
    cheaper than vanishing_component when only the dimension is needed.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    m = Matrix.from_rows(
        [evaluation_row(p, g.n, d) for p in g.points], cols=space_dim(g.n, d)
    )
    return space_dim(g.n, d) - rank(m)


@lru_cache(maxsize=512)
def symbolic_square_component(g: PointConfiguration, e: int) -> Subspace:
    """Degree-e part of the second symbolic power: all gradients vanish on Gamma.

    Only gradient rows are used: for a homogeneous form of positive degree,
    vanishing at s follows from the gradient vanishing there by Euler's
    identity, so evaluation rows would be redundant.
    """
    if e < 2:
        raise ValueError("degree must be at least 2")
    rows = []
    for p in g.points:
        rows.extend(gradient_rows(p, g.n, e))
    return nullspace(Matrix.from_rows(rows, cols=space_dim(g.n, e)))


def basis_forms(s: Subspace, n: int, d: int):
    return [Form(n, d, row) for row in s.basis_vectors()]


def _product_vectors(g: PointConfiguration, e: int, a: int):
    """Coefficient vectors of f*h for f in a basis of I_a, h in a basis of I_{e-a}."""
    from .polynomials import multiply

    b = e - a
    fa = basis_forms(vanishing_component(g, a), g.n, a)
    if a == b:
        for i, f in enumerate(fa):
            for h in fa[i:]:
                yield multiply(f, h).coeffs
    else:
        fb = basis_forms(vanishing_component(g, b), g.n, b)
        for f in fa:
            for h in fb:
                yield multiply(f, h).coeffs


def ordinary_square_component(g: PointConfiguration, e: int) -> Subspace:
    """Degree-e part of I(Gamma)^2: span of products over all degree splits.

    Every split a + b = e with a, b >= alpha(Gamma) contributes; assuming a
    single split is only valid when alpha equals e/2, which fails for small
    configurations.
    """
    if e < 2:
        raise ValueError("degree must be at least 2")
    a0 = alpha(g)
    ambient = space_dim(g.n, e)
    vectors = []
    for a in range(a0, e - a0 + 1):
        if a > e - a:
            break
        vectors.extend(_product_vectors(g, e, a))
    # products all lie inside the symbolic square, whose dimension caps the rank
    bound = symbolic_square_component(g, e).dim if e >= 2 else None
    return span(vectors, ambient, max_dim=bound)


def alpha(g: PointConfiguration) -> int:
    """Smallest degree with a nonzero form vanishing on Gamma."""
    d_excess = 1
    while space_dim(g.n, d_excess) <= g.size:
        d_excess += 1
    # at d_excess the kernel is guaranteed nontrivial; the cap only guards the loop
    for d in range(1, 2 * d_excess + 1):
        if vanishing_dim(g, d) > 0:
            return d
    raise RuntimeError("no vanishing form found below the search cap")


@dataclass(frozen=True)
class FaceReport:
    """Exact dimensions of the ideal components behind a pair of cone faces."""

    n: int
    d: int
    gamma_size: int
    dim_Id: int
    dim_I2_2d: int
    dim_Isym2_2d: int
    alpha: int
    d_independent: str
    gap: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "gap", self.dim_Isym2_2d - self.dim_I2_2d)
        if self.gap < 0:
            raise ValueError("ordinary square exceeded symbolic square")

    def to_json(self):
        return {
            "n": self.n,
            "d": self.d,
            "gamma_size": self.gamma_size,
            "dim_Id": self.dim_Id,
            "dim_I2_2d": self.dim_I2_2d,
            "dim_Isym2_2d": self.dim_Isym2_2d,
            "alpha": self.alpha,
            "d_independent": self.d_independent,
            "gap": self.gap,
        }


def face_report(g: PointConfiguration, d: int) -> FaceReport:
    if d < 1:
        raise ValueError("degree must be at least 1")
    from .independence import is_d_independent

    e = 2 * d
    return FaceReport(
        n=g.n,
        d=d,
        gamma_size=g.size,
        dim_Id=vanishing_component(g, d).dim,
        dim_I2_2d=ordinary_square_component(g, e).dim,
        dim_Isym2_2d=symbolic_square_component(g, e).dim,
        alpha=alpha(g),
        d_independent=is_d_independent(g, d).verdict,
    )
