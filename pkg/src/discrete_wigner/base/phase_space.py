"""
Affine geometry of the d x d phase space over a finite field.

A line is the solution set of a·q + b·p = c. Lines sharing a direction (a, b)
are parallel and form a striation; there are d + 1 of them.
"""
import collections
import itertools
import logging

from discrete_wigner.base.constants import Status
from discrete_wigner.base.field import field_for_dimension
from discrete_wigner.base.report import Report

_LOG = logging.getLogger(__name__)

PhasePoint = collections.namedtuple("PhasePoint", ("q", "p"))


class Line(object):
    """
    A set of d phase-space points.

    Two lines are equal if they hold the same points, whatever coefficients
    they were built from.
    """

    def __init__(self, coefficients, points):
        """
        :param tuple(int, int, int) coefficients: The (a, b, c) triple the line came from.
        :param points: The member points.
        :type points: iterable(PhasePoint)
        """
        self.coefficients = tuple(coefficients)
        self.points = frozenset(PhasePoint(*point) for point in points)

    def __repr__(self):
        return "<Line %r>" % (self.coefficients,)

    def __eq__(self, other):
        return isinstance(other, Line) and self.points == other.points

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.points)

    def __contains__(self, point):
        return point in self.points

    def __len__(self):
        return len(self.points)

    def sorted_points(self):
        """
        :return: The member points in lexicographic order.
        :rtype: list(PhasePoint)
        """
        return sorted(self.points)


class Striation(object):
    """
    An ordered collection of d parallel lines.
    """

    def __init__(self, index, lines, direction=None):
        """
        :param int index: Position of the striation in the phase space.
        :param lines: The parallel lines, in order.
        :type lines: iterable(Line)
        :param tuple(int, int) direction: The (a, b) coefficients shared by the lines.
        """
        self.index = index
        self.lines = tuple(lines)
        self.direction = direction
        self._line_by_point = {}
        for line_index, line in enumerate(self.lines):
            for point in line.points:
                self._line_by_point.setdefault(point, line_index)

    def __repr__(self):
        return "<Striation %d %r>" % (self.index, self.direction)

    def __iter__(self):
        return iter(self.lines)

    def __len__(self):
        return len(self.lines)

    def __getitem__(self, index):
        return self.lines[index]

    def line_index(self, point):
        """
        :param PhasePoint point: A phase-space point.
        :return: The index of the line of this striation holding the point.
        :rtype: int
        :raise KeyError: If no line holds the point.
        """
        return self._line_by_point[PhasePoint(*point)]


def _solve(field, a, b, c):
    return [
        PhasePoint(q, p)
        for q, p in itertools.product(field.elements, repeat=2)
        if field.add(field.mul(a, q), field.mul(b, p)) == c
    ]


def enumerate_lines(field):
    """
    Enumerate every distinct line a·q + b·p = c of the phase space.

    :param GaloisField field: The coordinate field.
    :return: The d(d+1) lines, first-found coefficients kept as provenance.
    :rtype: list(Line)
    """
    lines = []
    seen = set()
    for a, b, c in itertools.product(field.elements, repeat=3):
        if (a, b) == (0, 0):
            continue
        line = Line((a, b, c), _solve(field, a, b, c))
        if line in seen:
            continue
        seen.add(line)
        lines.append(line)
    return lines


def striation_directions(field):
    """
    Directions (a, b) in striation order: vertical lines q = c first,
    horizontal lines p = c second, then a·q + p = c for a = 1 .. d-1.

    :param GaloisField field: The coordinate field.
    :rtype: list(tuple(int, int))
    """
    return [(1, 0), (0, 1)] + [(a, 1) for a in field.elements[1:]]


def build_striations(field):
    """
    Partition the lines of the phase space into d + 1 striations.
    Lines inside a striation are ordered by their constant term c.

    :param GaloisField field: The coordinate field.
    :rtype: list(Striation)
    """
    striations = []
    for index, (a, b) in enumerate(striation_directions(field)):
        lines = [Line((a, b, c), _solve(field, a, b, c)) for c in field.elements]
        striations.append(Striation(index, lines, direction=(a, b)))
    return striations


class PhaseSpace(object):
    """
    The d x d grid together with its striations.
    """

    def __init__(self, field, striations=None):
        """
        :param GaloisField field: The coordinate field.
        :param striations: Striations to use, built from the field if omitted.
        :type striations: list(Striation)
        """
        self.field = field
        self.striations = tuple(striations or build_striations(field))
        self.points = tuple(
            PhasePoint(q, p) for q, p in itertools.product(field.elements, repeat=2)
        )

    def __repr__(self):
        return "<PhaseSpace %dx%d>" % (self.dimension, self.dimension)

    @property
    def dimension(self):
        """
        :rtype: int
        """
        return self.field.order

    @property
    def lines(self):
        """
        :return: Every line of every striation, in striation order.
        :rtype: list(Line)
        """
        return [line for striation in self.striations for line in striation]

    def lines_through(self, point):
        """
        :param PhasePoint point: A phase-space point.
        :return: The (striation index, line index) of every line through the point.
        :rtype: list(tuple(int, int))
        """
        return [(striation.index, striation.line_index(point)) for striation in self.striations]


def build_phase_space(dimension):
    """
    :param int dimension: A supported dimension.
    :return: The phase space over GF(dimension) with its default striations.
    :rtype: PhaseSpace
    """
    return PhaseSpace(field_for_dimension(dimension))


def verify_geometry(striations):
    """
    Check the three incidence axioms of an affine plane on a set of striations.

    (i) two distinct points lie on exactly one line,
    (ii) two non-parallel lines meet in exactly one point,
    (iii) through a point off a line passes exactly one line parallel to it.

    Violations are report content, not exceptions.

    :param striations: The striations to check.
    :type striations: list(Striation)
    :rtype: Report
    """
    striations = list(striations)
    lines = [(striation.index, line) for striation in striations for line in striation]
    points = sorted(set(point for _, line in lines for point in line.points))
    report = Report("geometry")

    sizes = sorted(set(len(line) for _, line in lines))
    report.add(
        "counts",
        Status.passed,
        detail="%d striations, %d lines, %d points, line sizes %r"
        % (len(striations), len(lines), len(points), sizes),
        data={"striations": len(striations), "lines": len(lines), "points": len(points)},
    )

    bad_pairs = []
    for first, second in itertools.combinations(points, 2):
        count = sum(1 for _, line in lines if first in line and second in line)
        if count != 1:
            bad_pairs.append((tuple(first), tuple(second), count))
    report.add(
        "axiom.point_pairs",
        Status.failed if bad_pairs else Status.passed,
        detail="%d point pairs not on exactly one line" % len(bad_pairs),
        data={"violations": bad_pairs[:10]},
    )

    bad_crossings = []
    for (index_a, line_a), (index_b, line_b) in itertools.combinations(lines, 2):
        shared = len(line_a.points & line_b.points)
        expected = 0 if index_a == index_b else 1
        if shared != expected:
            bad_crossings.append((line_a.coefficients, line_b.coefficients, shared))
    report.add(
        "axiom.intersections",
        Status.failed if bad_crossings else Status.passed,
        detail="%d line pairs with a wrong intersection" % len(bad_crossings),
        data={"violations": bad_crossings[:10]},
    )

    bad_parallels = []
    for _, line in lines:
        for point in points:
            if point in line:
                continue
            count = sum(
                1
                for _, other in lines
                if point in other and not (other.points & line.points)
            )
            if count != 1:
                bad_parallels.append((line.coefficients, tuple(point), count))
    report.add(
        "axiom.parallels",
        Status.failed if bad_parallels else Status.passed,
        detail="%d (line, point) pairs without a unique parallel" % len(bad_parallels),
        data={"violations": bad_parallels[:10]},
    )
    return report
