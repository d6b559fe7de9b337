"""
Test cases for the phase-space geometry
"""
import itertools

from discrete_wigner.base.constants import Status
from discrete_wigner.base.phase_space import (
    Line,
    PhasePoint,
    Striation,
    enumerate_lines,
    verify_geometry,
)


def test_line_count(space):
    """Assert the phase space holds d(d + 1) distinct lines of d points."""
    dimension = space.dimension
    lines = enumerate_lines(space.field)
    assert len(lines) == dimension * (dimension + 1)
    assert all(len(line) == dimension for line in lines)
    assert set(lines) == set(space.lines)


def test_striation_count(space):
    """Assert there are d + 1 striations of d lines each."""
    dimension = space.dimension
    assert len(space.striations) == dimension + 1
    assert all(len(striation) == dimension for striation in space.striations)


def test_striation_partitions_points(space):
    """Assert each striation covers every point exactly once."""
    for striation in space.striations:
        points = [point for line in striation for point in line.points]
        assert sorted(points) == sorted(space.points)


def test_striation_order(space):
    """Assert vertical lines come first, then horizontal lines."""
    assert space.striations[0].direction == (1, 0)
    assert space.striations[1].direction == (0, 1)
    assert space.striations[0][1].points == frozenset(
        PhasePoint(1, p) for p in range(space.dimension)
    )


def test_lines_through_point(space):
    """Assert d + 1 lines go through every point, one per striation."""
    for point in space.points:
        through = space.lines_through(point)
        assert [index for index, _ in through] == list(range(space.dimension + 1))
        for striation_index, line_index in through:
            assert point in space.striations[striation_index][line_index]


def test_geometry_axioms(space):
    """Assert the default striations satisfy the affine plane axioms."""
    report = verify_geometry(space.striations)
    assert report.ok
    assert report.get("counts").data == {
        "striations": space.dimension + 1,
        "lines": space.dimension * (space.dimension + 1),
        "points": space.dimension ** 2,
    }


def test_geometry_broken_striation():
    """Assert a striation whose lines overlap is reported."""
    lines = [
        Line((1, 0, 0), [(0, 0), (0, 1)]),
        Line((1, 0, 1), [(0, 0), (1, 1)]),
    ]
    other = [Line((0, 1, 0), [(0, 0), (1, 0)]), Line((0, 1, 1), [(0, 1), (1, 1)])]
    report = verify_geometry([Striation(0, lines), Striation(1, other)])
    assert not report.ok
    assert report.get("axiom.intersections").status is Status.failed


def test_line_equality_ignores_coefficients():
    """Assert lines are compared by their points."""
    points = [(0, 0), (1, 1)]
    assert Line((1, 1, 0), points) == Line((2, 2, 0), points)


def test_points_are_lexicographic(space):
    """Assert points are listed in (q, p) order."""
    expected = [PhasePoint(*pair) for pair in itertools.product(range(space.dimension), repeat=2)]
    assert list(space.points) == expected
