"""d-independence verdicts, Hilbert functions, general linear position."""

import pytest

from conefaces.constructions import (
    EXAMPLE_SIX_POINTS,
    SEVEN_POINTS_PERTURBED,
    SEVEN_POINTS_UNPERTURBED,
    snd_points,
)
from conefaces.ideal_components import PointConfiguration
from conefaces.independence import (
    condition2_holds,
    hilbert_function,
    is_d_independent,
    is_general_linear_position,
)
from conefaces.sampling import random_configuration


def test_condition2_small_space_raises():
    # |Gamma| + n - 1 = 8 > dim H_{3,2} = 6
    g = random_configuration(3, 6, seed=0)
    with pytest.raises(ValueError):
        condition2_holds(g, 2)


def test_condition2_known_cases():
    assert condition2_holds(EXAMPLE_SIX_POINTS, 2)
    assert condition2_holds(SEVEN_POINTS_PERTURBED, 3)


def test_hilbert_function_stabilizes_at_size():
    g = random_configuration(3, 4, seed=1)
    k_star = 2 * 2 + 3  # (n-1)(d-1) + d for n = d = 3
    assert hilbert_function(g, 3, k_star) == 4
    assert hilbert_function(g, 3, k_star + 1) == 4
    with pytest.raises(ValueError):
        hilbert_function(g, 3, 2)


def test_independent_verdicts():
    for g, d in [
        (EXAMPLE_SIX_POINTS, 2),
        (SEVEN_POINTS_PERTURBED, 3),
        (SEVEN_POINTS_UNPERTURBED, 3),
        (snd_points(3, 3), 3),
    ]:
        report = is_d_independent(g, d)
        assert report.verdict == "yes"
        assert report.condition2
        assert report.hilbert_values[-1][1] == g.size


def test_dependent_four_on_hyperplane():
    # four of the six points lie on x4 = 0, three of them collinear: any
    # quadric through the three vanishes on their whole line, and the double
    # vanishing conditions degenerate
    g = PointConfiguration(
        4,
        (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (1, 1, 0, 0),
            (0, 0, 1, 0),
            (1, 0, 0, 1),
            (0, 1, 1, 1),
        ),
    )
    report = is_d_independent(g, 2)
    assert report.verdict == "no"
    assert not report.condition2


def test_four_coplanar_but_generic_is_still_independent():
    # coplanarity alone does not break 2-independence
    g = PointConfiguration(
        4,
        (
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (1, 1, 1, 0),
            (1, 0, 0, 1),
            (0, 1, 1, 1),
        ),
    )
    assert is_d_independent(g, 2).verdict == "yes"


def test_too_many_points_is_no():
    # 7 plane points cannot be 2-independent: dim H_{3,2} = 6 < 7 + 2
    g = random_configuration(3, 7, seed=3)
    assert is_d_independent(g, 2).verdict == "no"


def test_report_json():
    data = is_d_independent(SEVEN_POINTS_PERTURBED, 3).to_json()
    assert data["verdict"] == "yes"
    assert all(len(kv) == 2 for kv in data["hilbert_values"])


def test_general_linear_position():
    assert is_general_linear_position(
        PointConfiguration(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)))
    )
    assert not is_general_linear_position(
        PointConfiguration(3, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)))
    )
    # fewer points than variables: linear independence
    assert is_general_linear_position(PointConfiguration(3, ((1, 0, 0), (0, 1, 0))))
    assert not is_general_linear_position(
        PointConfiguration(3, ((1, 0, 0), (2, 0, 1), (1, 0, 2)))
    )


def test_example_six_points_not_glp():
    # s1 - s2 - s5 + s6 = 0, so four of the points span only a hyperplane
    assert not is_general_linear_position(EXAMPLE_SIX_POINTS)


def test_random_configuration_predicates():
    g = random_configuration(4, 6, seed=7, glp=True)
    assert is_general_linear_position(g)
    assert random_configuration(4, 6, seed=7, glp=True) == g  # deterministic
    g2 = random_configuration(3, 7, seed=2, d_independent=3)
    assert is_d_independent(g2, 3).verdict == "yes"
    with pytest.raises(ValueError):
        random_configuration(3, 8, d_independent=3)
