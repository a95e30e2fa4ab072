"""Dense forms: monomial order, evaluation, calculus, products."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conefaces.polynomials import (
    Form,
    ProjectivePoint,
    evaluate,
    gradient_eval,
    hessian_eval,
    linear_form,
    monomial_basis,
    monomial_index,
    monomial_multiply,
    multiply,
    space_dim,
)
from conefaces.rational import ZERO, rat

coords = st.integers(min_value=-6, max_value=6)


def points(n):
    return (
        st.lists(coords, min_size=n, max_size=n)
        .filter(lambda c: any(c))
        .map(lambda c: ProjectivePoint(tuple(c)))
    )


def forms(n, d):
    dim = space_dim(n, d)
    return st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
        min_size=dim,
        max_size=dim,
    ).map(lambda c: Form(n, d, tuple(c)))


def test_space_dim():
    assert space_dim(3, 2) == 6
    assert space_dim(4, 4) == 35
    assert space_dim(3, 6) == 28


def test_monomial_basis_graded_lex():
    basis = monomial_basis(3, 2)
    assert basis == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(monomial_basis(4, 4)) == 35
    # lex-descending: each exponent tuple strictly dominates the next
    for a, b in zip(basis, basis[1:]):
        assert a > b
    assert monomial_index(3, 2)[(1, 0, 1)] == 2


def test_projective_point_canonical():
    p = ProjectivePoint((0, 2, 4))
    assert p.canonical() == (ZERO, rat(1), rat(2))
    assert p.projectively_equal(ProjectivePoint((0, 1, 2)))
    with pytest.raises(ValueError):
        ProjectivePoint((0, 0, 0))


def test_form_from_terms_roundtrip():
    f = Form.from_terms(3, 2, {(2, 0, 0): 1, (0, 1, 1): -3})
    assert f.terms() == {(2, 0, 0): rat(1), (0, 1, 1): rat(-3)}
    assert Form.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        Form.from_terms(3, 2, {(3, 0, 0): 1})


def test_form_add_scale_normalize():
    f = Form.from_terms(2, 2, {(2, 0): 2, (0, 2): 4})
    g = f + f.scale(-1)
    assert g.is_zero()
    assert f.normalized().terms() == {(2, 0): rat(1), (0, 2): rat(2)}
    assert Form.zero(2, 2).normalized().is_zero()


def test_evaluate_known():
    f = Form.from_terms(3, 2, {(1, 1, 0): 1, (0, 0, 2): -1})
    assert evaluate(f, ProjectivePoint((2, 3, 1))) == rat(5)
    assert gradient_eval(f, ProjectivePoint((2, 3, 1))) == [rat(3), rat(2), rat(-2)]


def test_hessian_known():
    # f = x^2 y: fxx = 2y, fxy = 2x, elsewhere 0
    f = Form.from_terms(2, 3, {(2, 1): 1})
    h = hessian_eval(f, ProjectivePoint((3, 5)))
    assert h.entries == ((rat(10), rat(6)), (rat(6), ZERO))


@given(forms(3, 4), points(3))
@settings(max_examples=150, deadline=None)
def test_euler_identity(f, p):
    grad = gradient_eval(f, p)
    lhs = sum((c * g for c, g in zip(p.coords, grad)), ZERO)
    assert lhs == 4 * evaluate(f, p)


@given(forms(3, 2), forms(3, 2), points(3))
@settings(max_examples=150, deadline=None)
def test_multiply_matches_pointwise(f, g, p):
    assert evaluate(multiply(f, g), p) == evaluate(f, p) * evaluate(g, p)


@given(forms(3, 2), points(3))
@settings(max_examples=100, deadline=None)
def test_homogeneity(f, p):
    scaled = ProjectivePoint(tuple(3 * c for c in p.coords))
    assert evaluate(f, scaled) == rat(3) ** f.degree * evaluate(f, p)


@given(forms(3, 2))
@settings(max_examples=100, deadline=None)
def test_monomial_multiply_is_multiplication(f):
    m = Form.from_terms(3, 2, {(1, 0, 1): 1})
    assert monomial_multiply(f, (1, 0, 1)) == multiply(f, m)


def test_linear_form():
    f = linear_form([1, -2, 0])
    assert evaluate(f, ProjectivePoint((3, 1, 7))) == rat(1)
    with pytest.raises(ValueError):
        linear_form([0, 0])


def test_shape_mismatches_raise():
    with pytest.raises(ValueError):
        Form(3, 2, (rat(1),) * 5)
    f = Form.zero(3, 2)
    with pytest.raises(ValueError):
        evaluate(f, ProjectivePoint((1, 1)))
    with pytest.raises(ValueError):
        f + Form.zero(3, 3)
