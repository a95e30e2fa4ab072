"""Explicit point configurations and the forms attached to them.

Covers the partition point sets with their factoring bases and
interpolants, the six-point quadruple-hyperplane scheme in four variables,
and the seven-point plane scheme, including the degree-4 and degree-6
candidate forms that separate the symbolic square from the ordinary one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .exact_linalg import Matrix, inverse, nullspace, span
from .ideal_components import (
    PointConfiguration,
    basis_forms,
    evaluation_row,
    gradient_rows,
    vanishing_component,
)
from .independence import is_d_independent, is_general_linear_position
from .polynomials import (
    Form,
    ProjectivePoint,
    evaluate,
    linear_form,
    monomial_basis,
    multiply,
    space_dim,
)
from .rational import ZERO, ONE, rat


class GenericityError(ValueError):
    """A genericity guard failed; the caller should perturb the configuration."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


DEFAULT_TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))


def snd_points(n: int, d: int, include_vertices: bool = False) -> PointConfiguration:
    """Partition points of d in n parts, excluding the coordinate points.

    With include_vertices=True returns the full set of partition points,
    whose vanishing ideal has no degree-d forms at all.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    points = []
    for exp in monomial_basis(n, d):
        if not include_vertices and max(exp) == d:
            continue
        points.append(ProjectivePoint(tuple(rat(e) for e in exp)))
    return PointConfiguration(n, tuple(points))


def _falling_product(n: int, d: int, i: int, count: int) -> Form:
    """Product over k < count of (d*x_i - k*M) with M the all-ones linear form."""
    m_vec = [ONE] * n
    xi = [ZERO] * n
    xi[i] = rat(d)
    result = None
    for k in range(count):
        factor = linear_form([a - k * b for a, b in zip(xi, m_vec)])
        result = factor if result is None else multiply(result, factor)
    if result is None:
        raise ValueError("empty product")
    return result


def snd_basis(n: int, d: int):
    """The factoring basis of the degree-d vanishing forms of snd_points(n, d).

    The i-th form is the full falling product in x_i; it takes the value d!
    at the i-th coordinate point and vanishes at the others.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    return [_falling_product(n, d, i, d) for i in range(n)]


def interpolant_at(s, n: int, d: int) -> Form:
    """Degree-d form nonzero at the partition point s, zero at all others."""
    if isinstance(s, ProjectivePoint):
        coords = s.coords
    else:
        coords = tuple(rat(c) for c in s)
    parts = []
    for c in coords:
        ci = int(c)
        if c != ci or ci < 0:
            raise ValueError(f"{coords} is not a nonnegative integer partition")
        parts.append(ci)
    if len(parts) != n or sum(parts) != d:
        raise ValueError(f"{coords} is not a partition of {d} into {n} parts")
    result = None
    for i, si in enumerate(parts):
        if si == 0:
            continue
        h = _falling_product(n, d, i, si)
        result = h if result is None else multiply(result, h)
    return result


def _kernel_vector(rows, ncols):
    ns = nullspace(Matrix.from_rows(rows, cols=ncols))
    if ns.dim != 1:
        raise GenericityError(
            f"expected a one-dimensional kernel, got dimension {ns.dim}"
        )
    return ns.basis_vectors()[0]


def _dual_columns(vectors):
    """Columns of the inverse of the matrix with the given rows."""
    inv = inverse(Matrix.from_rows(vectors))
    return [tuple(inv.entries[i][j] for i in range(inv.rows)) for j in range(inv.cols)]


def _inner(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _validate_triples(triples):
    triples = tuple(tuple(sorted(t)) for t in triples)
    if len(triples) != 4 or any(len(set(t)) != 3 for t in triples):
        raise ValueError("need 4 triples of 3 distinct indices each")
    flat = [i for t in triples for i in t]
    if set(flat) != set(range(1, 7)):
        raise ValueError("triples must use the indices 1..6")
    for i in range(4):
        for j in range(i + 1, 4):
            if len(set(triples[i]) & set(triples[j])) != 1:
                raise ValueError("any two triples must meet in exactly one index")
    for idx in range(1, 7):
        if flat.count(idx) != 2:
            raise ValueError("each index must lie in exactly two triples")
    return triples


@dataclass(frozen=True)
class SixPointScheme:
    """Six points in R^4 with a quadruple covering by spanned hyperplanes.

    The four quadrics factor through the covering's normal vectors, their
    pairwise products span the degree-4 ordinary square, and the product of
    the four hyperplane forms double-vanishes on the points without lying
    in that span.
    """

    gamma: PointConfiguration
    triples: tuple
    u: tuple
    v: tuple
    u_dual: tuple
    v_dual: tuple
    Q: tuple
    R: Form

    def to_json(self):
        from .rational import rat_str

        return {
            "gamma": self.gamma.to_json(),
            "triples": [list(t) for t in self.triples],
            "u": [[rat_str(c) for c in vec] for vec in self.u],
            "v": [[rat_str(c) for c in vec] for vec in self.v],
            "Q": [q.to_json() for q in self.Q],
            "R": self.R.to_json(),
        }


def six_point_scheme(g: PointConfiguration, triples=None) -> SixPointScheme:
    """Build the scheme; general linear position is sufficient but stronger
    than necessary, so the constructor checks exactly what it uses: every
    covering triple spans a hyperplane, the normals form bases, and the 32
    cross inner products are nonzero."""
    if g.n != 4 or g.size != 6:
        raise ValueError("need exactly 6 points in 4 variables")
    triples = _validate_triples(triples if triples is not None else DEFAULT_TRIPLES)
    complements = tuple(
        tuple(sorted(set(range(1, 7)) - set(t))) for t in triples
    )

    def normal(triple):
        rows = [g.points[i - 1].coords for i in triple]
        return _kernel_vector(rows, 4)

    u = tuple(tuple(normal(t)) for t in triples)
    v = tuple(tuple(normal(t)) for t in complements)
    u_dual = tuple(_dual_columns(u))
    v_dual = tuple(_dual_columns(v))

    # under general linear position these 32 inner products are all nonzero
    for i in range(4):
        for j in range(4):
            if not _inner(u[i], v_dual[j]):
                raise GenericityError(f"<u{i + 1}, v{j + 1}*> = 0", pair=(i, j))
            if not _inner(v[i], u_dual[j]):
                raise GenericityError(f"<v{i + 1}, u{j + 1}*> = 0", pair=(i, j))

    Q = tuple(
        multiply(linear_form(u[i]), linear_form(v[i])).normalized() for i in range(4)
    )
    R = linear_form(u[0])
    for i in range(1, 4):
        R = multiply(R, linear_form(u[i]))
    R = R.normalized()
    return SixPointScheme(
        gamma=g, triples=triples, u=u, v=v, u_dual=u_dual, v_dual=v_dual, Q=Q, R=R
    )


@dataclass(frozen=True)
class SevenPointScheme:
    """Seven plane points with three line normals, three conics, and the
    singular cubic; R is the sextic separating the symbolic square."""

    gamma: PointConfiguration
    u: tuple
    u_dual: tuple
    K_conics: tuple
    K: Form
    Q: tuple
    R: Form

    def to_json(self):
        from .rational import rat_str

        return {
            "gamma": self.gamma.to_json(),
            "u": [[rat_str(c) for c in vec] for vec in self.u],
            "K_conics": [k.to_json() for k in self.K_conics],
            "K": self.K.to_json(),
            "Q": [q.to_json() for q in self.Q],
            "R": self.R.to_json(),
        }


CONIC_POINT_SETS = ((3, 4, 5, 6, 7), (1, 2, 5, 6, 7), (1, 2, 3, 4, 7))


def seven_point_scheme(g: PointConfiguration) -> SevenPointScheme:
    if g.n != 3 or g.size != 7:
        raise ValueError("need exactly 7 points in 3 variables")
    if is_d_independent(g, 3).verdict != "yes":
        raise ValueError("the seven points must be 3-independent")

    def line_normal(i, j):
        return tuple(
            _kernel_vector([g.points[i - 1].coords, g.points[j - 1].coords], 3)
        )

    u = (line_normal(1, 2), line_normal(3, 4), line_normal(5, 6))
    u_dual = tuple(_dual_columns(u))

    conics = []
    for idxs in CONIC_POINT_SETS:
        rows = [evaluation_row(g.points[i - 1], 3, 2) for i in idxs]
        conics.append(Form(3, 2, tuple(_kernel_vector(rows, space_dim(3, 2)))).normalized())
    conics = tuple(conics)

    # the cubic through the first six points with a double point at the seventh
    rows = [evaluation_row(g.points[i], 3, 3) for i in range(6)]
    rows.extend(gradient_rows(g.points[6], 3, 3))
    K = Form(3, 3, tuple(_kernel_vector(rows, space_dim(3, 3)))).normalized()

    # the conic guards are essential: a vanishing value breaks the basis
    # argument, so the failing pair is reported for the caller to perturb.
    # No guard is placed on K itself: when K factors through one of the
    # line forms it vanishes at a dual point by construction, yet the
    # product form below still double-vanishes there through the other
    # two line factors.
    failing = [
        (i, j)
        for i in range(3)
        for j in range(3)
        if i != j and not evaluate(conics[i], ProjectivePoint(u_dual[j]))
    ]
    if failing:
        named = ", ".join(f"K{i + 1}(u{j + 1}*) = 0" for i, j in failing)
        raise GenericityError(named, pair=failing[0])

    i3 = vanishing_component(g, 3)

    def cubic(line_idx, conic_idx):
        return multiply(linear_form(u[line_idx]), conics[conic_idx]).normalized()

    Q = [cubic(0, 0), cubic(1, 1), cubic(2, 2)]
    if span([q.coeffs for q in Q], space_dim(3, 3)) != span(
        [f.coeffs for f in basis_forms(i3, 3, 3)], space_dim(3, 3)
    ):
        # symmetric pairing failed; fall back to pairing the third conic
        # with the first line, which is the only other candidate
        warnings.warn(
            "pairing the third conic with the third line does not give a basis; "
            "falling back to the first line"
        )
        Q[2] = cubic(0, 2)
        if span([q.coeffs for q in Q], space_dim(3, 3)) != span(
            [f.coeffs for f in basis_forms(i3, 3, 3)], space_dim(3, 3)
        ):
            raise GenericityError("no candidate cubic triple spans I_3")

    R = K
    for vec in u:
        R = multiply(R, linear_form(vec))
    R = R.normalized()
    return SevenPointScheme(
        gamma=g, u=u, u_dual=u_dual, K_conics=conics, K=K, Q=tuple(Q), R=R
    )


EXAMPLE_SIX_POINTS = PointConfiguration(
    4,
    (
        (0, 0, 1, 1),
        (0, 1, 0, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
        (1, 1, 0, 0),
    ),
)

SEVEN_POINTS_UNPERTURBED = PointConfiguration(
    3,
    (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (1, 0, 1),
        (0, 1, 1),
        (1, 1, 1),
    ),
)

SEVEN_POINTS_PERTURBED = PointConfiguration(
    3,
    (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, -2, 2),
        (1, 0, 1),
        (0, 1, 1),
        (1, 1, 1),
    ),
)
