"""Dense homogeneous forms of fixed degree in n variables.

A Form is exactly its coefficient vector over the graded-lexicographic
list of degree-d monomials, so forms double as ambient-space vectors for
the subspaces computed elsewhere; there is no conversion layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact_linalg import Matrix
from .rational import Rat, ZERO, ONE, rat, rat_str


def space_dim(n: int, d: int) -> int:
    """dim of the space of degree-d forms in n variables."""
    return math.comb(n + d - 1, d)


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> tuple:
    """All exponent vectors of degree d in n variables, graded-lex order.

    Lex-descending on exponent tuples with x1 > x2 > ... > xn; the list
    has length binomial(n+d-1, d).
    """
    if n < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if n == 1:
        return ((d,),)
    out = []
    for e1 in range(d, -1, -1):
        for tail in monomial_basis(n - 1, d - e1):
            out.append((e1,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {exp: i for i, exp in enumerate(monomial_basis(n, d))}


@dataclass(frozen=True)
class ProjectivePoint:
    """A nonzero rational coordinate vector, compared up to scale."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(rat(c) for c in self.coords))
        if not any(self.coords):
            raise ValueError("projective point must have a nonzero coordinate")

    @property
    def n(self) -> int:
        return len(self.coords)

    def canonical(self) -> tuple:
        """Representative with first nonzero coordinate scaled to 1.

        Used for distinctness checks only; evaluation never normalizes,
        since all vanishing conditions are scale-invariant by homogeneity.
        """
        lead = next(c for c in self.coords if c)
        return tuple(c / lead for c in self.coords)

    def projectively_equal(self, other: "ProjectivePoint") -> bool:
        return self.canonical() == other.canonical()

    def to_json(self):
        return [rat_str(c) for c in self.coords]


@dataclass(frozen=True)
class Form:
    """Homogeneous polynomial as a dense graded-lex coefficient vector."""

    n: int
    degree: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))
        if len(self.coeffs) != space_dim(self.n, self.degree):
            raise ValueError(
                f"expected {space_dim(self.n, self.degree)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, n, degree):
        return cls(n, degree, (ZERO,) * space_dim(n, degree))

    @classmethod
    def from_terms(cls, n, degree, terms):
        """Build from {exponent tuple: coefficient}; omitted monomials are zero."""
        index = monomial_index(n, degree)
        coeffs = [ZERO] * space_dim(n, degree)
        for exp, c in terms.items():
            exp = tuple(exp)
            if exp not in index:
                raise ValueError(f"exponent {exp} is not a degree-{degree} monomial")
            coeffs[index[exp]] = coeffs[index[exp]] + rat(c)
        return cls(n, degree, tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self):
        basis = monomial_basis(self.n, self.degree)
        return {exp: c for exp, c in zip(basis, self.coeffs) if c}

    def __add__(self, other: "Form") -> "Form":
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("can only add forms of the same shape")
        return Form(self.n, self.degree,
                    tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "Form":
        c = rat(c)
        return Form(self.n, self.degree, tuple(c * a for a in self.coeffs))

    def normalized(self) -> "Form":
        """Scaled so the graded-lex-first nonzero coefficient is 1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None:
            return self
        return self.scale(ONE / lead)

    def to_json(self):
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [
                {"exp": list(exp), "coef": rat_str(c)}
                for exp, c in self.terms().items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {tuple(t["exp"]): rat(t["coef"]) for t in data["terms"]}
        return cls.from_terms(data["n"], data["degree"], terms)


def _coord_powers(coords, max_power):
    return [[c ** k if k else ONE for k in range(max_power + 1)] for c in coords]


def evaluate(f: Form, p: ProjectivePoint) -> "Rat":
    if f.n != p.n:
        raise ValueError("form and point live in different variable counts")
    powers = _coord_powers(p.coords, f.degree)
    total = ZERO
    for exp, c in zip(monomial_basis(f.n, f.degree), f.coeffs):
        if not c:
            continue
        term = c
        for i, e in enumerate(exp):
            if e:
                term *= powers[i][e]
        total += term
    return total


def gradient_eval(f: Form, p: ProjectivePoint):
    """Vector of partial derivatives of f evaluated at p."""
    if f.degree < 1:
        raise ValueError("gradient of a degree-0 form")
    if f.n != p.n:
        raise ValueError("form and point live in different variable counts")
    powers = _coord_powers(p.coords, f.degree)
    grad = [ZERO] * f.n
    for exp, c in zip(monomial_basis(f.n, f.degree), f.coeffs):
        if not c:
            continue
        for j, ej in enumerate(exp):
            if not ej:
                continue
            term = c * ej
            for i, e in enumerate(exp):
                e = e - 1 if i == j else e
                if e:
                    term *= powers[i][e]
            grad[j] += term
    return grad


def hessian_eval(f: Form, p: ProjectivePoint) -> Matrix:
    """Symmetric n x n matrix of second partials of f at p."""
    if f.degree < 2:
        raise ValueError("Hessian of a form of degree < 2")
    if f.n != p.n:
        raise ValueError("form and point live in different variable counts")
    powers = _coord_powers(p.coords, f.degree)
    n = f.n
    h = [[ZERO] * n for _ in range(n)]
    for exp, c in zip(monomial_basis(n, f.degree), f.coeffs):
        if not c:
            continue
        for j in range(n):
            for k in range(j, n):
                ej, ek = exp[j], exp[k]
                if j == k:
                    if ej < 2:
                        continue
                    factor = c * ej * (ej - 1)
                else:
                    if not (ej and ek):
                        continue
                    factor = c * ej * ek
                term = factor
                for i, e in enumerate(exp):
                    if i == j:
                        e -= 1
                    if i == k:
                        e -= 1
                    if e:
                        term *= powers[i][e]
                h[j][k] += term
                if j != k:
                    h[k][j] += term
    return Matrix.from_rows(h)


def multiply(f: Form, g: Form) -> Form:
    if f.n != g.n:
        raise ValueError("can only multiply forms in the same variables")
    acc = {}
    fterms = f.terms()
    gterms = g.terms()
    for ef, cf in fterms.items():
        for eg, cg in gterms.items():
            e = tuple(a + b for a, b in zip(ef, eg))
            acc[e] = acc.get(e, ZERO) + cf * cg
    return Form.from_terms(f.n, f.degree + g.degree, acc)


def monomial_multiply(f: Form, exp) -> Form:
    """Multiply by a single monomial: a pure exponent shift of coefficients."""
    exp = tuple(exp)
    shift = sum(exp)
    index = monomial_index(f.n, f.degree + shift)
    coeffs = [ZERO] * space_dim(f.n, f.degree + shift)
    for ef, c in zip(monomial_basis(f.n, f.degree), f.coeffs):
        if c:
            e = tuple(a + b for a, b in zip(ef, exp))
            coeffs[index[e]] = c
    return Form(f.n, f.degree + shift, tuple(coeffs))


def linear_form(v) -> Form:
    v = [rat(x) for x in v]
    if not any(v):
        raise ValueError("linear form of the zero vector")
    n = len(v)
    terms = {}
    for i, c in enumerate(v):
        exp = tuple(1 if j == i else 0 for j in range(n))
        terms[exp] = c
    return Form.from_terms(n, 1, terms)
