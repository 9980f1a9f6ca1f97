from __future__ import annotations
import os
import json
import logging
from typing import Iterable, NamedTuple, Sequence
import numpy
from __types__ import ThinShape
from manifest import canonical_json
from exceptions import (InvalidStructure, NotUniformLineSize, NotUniformPointDegree, ContainsTriangleOrDigon,
                        GQAxiomFails, CountMismatch, EmptyInput)

_logger = logging.getLogger(__name__)


def bits(mask: int):
    """
    Iterate the indices of the set bits of a bitset, lowest first.

    Args:
    - mask (int): The bitset.

    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


class GQOrder(NamedTuple):
    """
    Order (s, t) of a generalized quadrangle: every line has s+1 points and every point lies on t+1 lines.
    """
    s: int
    t: int

    @property
    def thick(self) -> bool:
        return self.s >= 2 and self.t >= 2

    @property
    def point_count(self) -> int:
        return (self.s + 1) * (self.s * self.t + 1)

    @property
    def line_count(self) -> int:
        return (self.t + 1) * (self.s * self.t + 1)


class GridShape(NamedTuple):
    """
    Result of classify_thin: a grid, a dual grid, or neither. Parameters are sorted ascending.
    """
    kind: ThinShape
    a: int = 0
    b: int = 0

    def __str__(self) -> str:
        if self.kind == "NotThin":
            return "NotThin"
        return f"{self.kind}({self.a},{self.b})"


class PartialOvoidReport(NamedTuple):
    is_partial_ovoid: bool
    size: int
    bound: int | None  # 1+st when the structure is a GQ
    within_bound: bool | None


class IncidenceStructure():
    """
    IncidenceStructure

    A finite point-line incidence structure S = (P, L). Points are the integers 0..point_count-1 and every line
    is stored as the ascending tuple of its points. Lines are kept in lexicographic order, so two structures are
    equal exactly when their line multisets are equal.

    Attributes:
    - point_count (int): Number of points.
    - lines (tuple[tuple[int, ...], ...]): Point sets of the lines, each sorted, in lexicographic order.
    - name (str): Optional label.

    Methods:
    - line_count -> int: Number of lines.
    - lines_through(p: int) -> tuple[int, ...]: Indices of the lines incident with a point.
    - collinear(x: int, y: int) -> bool: The relation x ~ y (reflexive).
    - collinear_mask(p: int) -> int: Bitset of the points collinear with p, p included.
    - line_mask(index: int) -> int: Bitset of the points of a line.
    - line_index(points: Iterable[int]) -> int | None: Index of the line with exactly these points.
    - line_through(x: int, y: int) -> int | None: Index of the line joining two distinct points.
    - incidence_matrix() -> numpy.ndarray: Point by line 0/1 matrix.
    - order -> GQOrder: The validated order (cached).
    - dual() -> IncidenceStructure: The point-line dual.
    - relabel(perm: Sequence[int]) -> IncidenceStructure: Image of the structure under a point relabeling.
    - to_json() -> dict / from_json(data: dict) -> IncidenceStructure: JSON interchange.
    - save(file_path: str) / load(file_path: str): File helpers.

    """

    def __init__(self, point_count: int, lines: Iterable[Iterable[int]], name: str = None) -> None:
        """
        Initialize an IncidenceStructure instance.

        Args:
        - point_count (int): Number of points.
        - lines (Iterable[Iterable[int]]): Point sets of the lines.
        - name (str): Optional label.

        Raises:
        - InvalidStructure: If a line is out of range, has fewer than 2 points or is repeated.

        """
        if point_count < 0:
            raise InvalidStructure("negative point count", point_count=point_count)
        canonical = []
        for line in lines:
            pts = tuple(sorted(set(line)))
            if len(pts) < 2:
                raise InvalidStructure("line with fewer than 2 points", line=list(pts))
            if pts[0] < 0 or pts[-1] >= point_count:
                raise InvalidStructure("point index out of range", line=list(pts))
            canonical.append(pts)
        canonical.sort()
        for first, second in zip(canonical, canonical[1:]):
            if first == second:
                raise InvalidStructure("repeated line", line=list(first))

        self.point_count = point_count
        self.lines: tuple[tuple[int, ...], ...] = tuple(canonical)
        self.name = name
        self._line_index = {line: i for i, line in enumerate(self.lines)}
        self._line_masks = [to_mask(line) for line in self.lines]

        through: list[list[int]] = [[] for _ in range(point_count)]
        collinear = [1 << p for p in range(point_count)]
        for i, line in enumerate(self.lines):
            mask = self._line_masks[i]
            for p in line:
                through[p].append(i)
                collinear[p] |= mask
        self._through = tuple(tuple(ls) for ls in through)
        self._collinear = collinear
        self._order = None

    @property
    def line_count(self) -> int:
        return len(self.lines)

    @property
    def order(self) -> GQOrder:
        if self._order is None:
            self._order = validate_gq(self)
        return self._order

    def lines_through(self, p: int) -> tuple[int, ...]:
        return self._through[p]

    def collinear(self, x: int, y: int) -> bool:
        return bool(self._collinear[x] >> y & 1)

    def collinear_mask(self, p: int) -> int:
        return self._collinear[p]

    def line_mask(self, index: int) -> int:
        return self._line_masks[index]

    def line_index(self, points: Iterable[int]) -> int | None:
        return self._line_index.get(tuple(sorted(points)))

    def line_through(self, x: int, y: int) -> int | None:
        """
        Return the index of the line joining two distinct points, or None if they are not collinear.

        Args:
        - x (int): First point.
        - y (int): Second point.

        Returns:
        - int | None: Index of the joining line.

        """
        if x == y:
            return None
        for i in self._through[x]:
            if self._line_masks[i] >> y & 1:
                return i
        return None

    def incidence_matrix(self) -> numpy.ndarray:
        matrix = numpy.zeros((self.point_count, self.line_count), dtype=numpy.int64)
        for i, line in enumerate(self.lines):
            matrix[list(line), i] = 1
        return matrix

    def dual(self) -> IncidenceStructure:
        """
        Return the point-line dual: the points of the dual are the lines of S (same indices), and each point p of
        S becomes the line made of the lines through p.

        Returns:
        - IncidenceStructure: The dual structure.

        Raises:
        - InvalidStructure: If a point lies on fewer than two lines or two points lie on the same set of lines.

        """
        name = f"dual({self.name})" if self.name else None
        return IncidenceStructure(self.line_count, self._through, name)

    def relabel(self, perm: Sequence[int]) -> IncidenceStructure:
        images = getattr(perm, "images", perm)
        if len(images) != self.point_count or sorted(images) != list(range(self.point_count)):
            raise InvalidStructure("relabeling is not a permutation of the points")
        return IncidenceStructure(self.point_count, ([images[p] for p in line] for line in self.lines), self.name)

    def to_json(self) -> dict:
        return {"name": self.name, "points": self.point_count, "lines": [list(line) for line in self.lines]}

    @staticmethod
    def from_json(data: dict) -> IncidenceStructure:
        try:
            return IncidenceStructure(int(data["points"]), data["lines"], data.get("name"))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidStructure(f"malformed structure record: {e}")

    def save(self, file_path: str) -> None:
        """
        Save the structure as canonical JSON, creating the parent directory if needed. Saving a loaded file
        reproduces it byte for byte.

        Args:
        - file_path (str): Destination file.

        """
        folder = os.path.dirname(file_path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(file_path, "w") as file:
            file.write(canonical_json(self.to_json()))

    @staticmethod
    def load(file_path: str) -> IncidenceStructure:
        with open(file_path, "r") as file:
            return IncidenceStructure.from_json(json.load(file))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.point_count == other.point_count and self.lines == other.lines

    def __hash__(self) -> int:
        return hash((self.point_count, self.lines))

    def __repr__(self) -> str:
        label = self.name or "S"
        return f"IncidenceStructure({label}: {self.point_count} points, {self.line_count} lines)"


def random_relabeling(point_count: int, seed: int) -> list[int]:
    """
    A uniformly random permutation of range(point_count), reproducible from the seed.
    """
    rng = numpy.random.default_rng(seed)
    return [int(p) for p in rng.permutation(point_count)]


def validate_gq(S: IncidenceStructure) -> GQOrder:
    """
    Check the generalized quadrangle axioms and return the order (s, t).

    The checks run in the order: uniform line size, uniform point degree, no two points on two lines, no
    triangle (a point off a line collinear with two of its points), exactly one point of every line collinear
    with every point off it, and the point and line counts.

    Args:
    - S (IncidenceStructure): The structure to validate.

    Returns:
    - GQOrder: The order (s, t).

    Raises:
    - InvalidStructure: If the structure has no points or no lines.
    - NotUniformLineSize, NotUniformPointDegree, ContainsTriangleOrDigon, GQAxiomFails, CountMismatch.

    """
    if S.point_count == 0 or S.line_count == 0:
        raise InvalidStructure("empty structure", points=S.point_count, lines=S.line_count)

    sizes = sorted({len(line) for line in S.lines})
    if len(sizes) != 1:
        raise NotUniformLineSize("lines of different sizes", sizes=sizes)
    degrees = sorted({len(S.lines_through(p)) for p in range(S.point_count)})
    if len(degrees) != 1 or degrees[0] == 0:
        raise NotUniformPointDegree("points on different numbers of lines", degrees=degrees)
    s, t = sizes[0] - 1, degrees[0] - 1

    # two points on two common lines
    matrix = S.incidence_matrix()
    common = matrix @ matrix.T
    numpy.fill_diagonal(common, 0)
    digons = numpy.argwhere(common > 1)
    if len(digons):
        x, y = (int(v) for v in digons[0])
        raise ContainsTriangleOrDigon("two points on two lines", points=[x, y])

    for index in range(S.line_count):
        line_mask = S.line_mask(index)
        for p in range(S.point_count):
            if line_mask >> p & 1:
                continue
            witnesses = popcount(S.collinear_mask(p) & line_mask)
            if witnesses >= 2:
                raise ContainsTriangleOrDigon("triangle through a point off a line",
                                              point=p, line=index, witnesses=witnesses)
            if witnesses == 0:
                raise GQAxiomFails("no point of the line is collinear with the point",
                                   point=p, line=index, witnesses=0)

    order = GQOrder(s, t)
    if S.point_count != order.point_count or S.line_count != order.line_count:
        raise CountMismatch("point or line count does not match the order",
                            points=S.point_count, lines=S.line_count, s=s, t=t)
    _logger.debug("validated %r as a GQ of order (%d,%d)", S, s, t)
    return order


def perp(S: IncidenceStructure, pts: Iterable[int], span: bool = False) -> frozenset[int]:
    """
    Return the points collinear with every point of `pts` (p ~ p included), or its perp again when `span` is set.

    Args:
    - S (IncidenceStructure): A validated GQ.
    - pts (Iterable[int]): Nonempty point set.
    - span (bool): Return perp(perp(pts)) instead.

    Returns:
    - frozenset[int]: The perp or span.

    Raises:
    - EmptyInput: If `pts` is empty.

    """
    mask = _perp_mask(S, pts)
    if span:
        mask = _perp_mask(S, bits(mask))
    return frozenset(bits(mask))


def span(S: IncidenceStructure, pts: Iterable[int]) -> frozenset[int]:
    return perp(S, pts, span=True)


def _perp_mask(S: IncidenceStructure, pts: Iterable[int]) -> int:
    mask = (1 << S.point_count) - 1
    empty = True
    for x in pts:
        empty = False
        mask &= S.collinear_mask(x)
    if empty:
        raise EmptyInput("perp of an empty point set")
    return mask


def _grid_shape(S: IncidenceStructure) -> tuple[int, int] | None:
    # every point on two lines, lines split in two classes, each pair of classes meets once
    if S.point_count == 0 or any(len(S.lines_through(p)) != 2 for p in range(S.point_count)):
        return None
    color = [-1] * S.line_count
    for start in range(S.line_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            line = queue.pop()
            for p in S.lines[line]:
                for other in S.lines_through(p):
                    if other == line:
                        continue
                    if color[other] == -1:
                        color[other] = 1 - color[line]
                        queue.append(other)
                    elif color[other] == color[line]:
                        return None
    first = [i for i in range(S.line_count) if color[i] == 0]
    second = [i for i in range(S.line_count) if color[i] == 1]
    pairs = {tuple(sorted(S.lines_through(p), key=lambda i: color[i])) for p in range(S.point_count)}
    if len(pairs) != S.point_count or S.point_count != len(first) * len(second):
        return None
    return tuple(sorted((len(first) - 1, len(second) - 1)))


def classify_thin(S: IncidenceStructure) -> GridShape:
    """
    Recognize grids and dual grids.

    A grid with parameters (s1, s2) has (s1+1)(s2+1) points, every point on exactly two lines, and its lines
    fall into two parallel classes that each cover every point once, with lines of different classes meeting in
    exactly one point. Dual grids are recognized by transposing.

    Args:
    - S (IncidenceStructure): The structure.

    Returns:
    - GridShape: Grid(s1,s2), DualGrid(t1,t2) or NotThin, parameters ascending.

    """
    shape = _grid_shape(S)
    if shape is not None:
        return GridShape("Grid", *shape)
    if S.line_count and all(len(line) == 2 for line in S.lines):
        try:
            shape = _grid_shape(S.dual())
        except InvalidStructure:
            shape = None
        if shape is not None:
            return GridShape("DualGrid", *shape)
    return GridShape("NotThin")


def is_partial_ovoid(S: IncidenceStructure, pts: Iterable[int]) -> PartialOvoidReport:
    """
    Decide whether the points are pairwise non-collinear, and compare their number with 1+st.

    Args:
    - S (IncidenceStructure): The structure.
    - pts (Iterable[int]): The point set.

    Returns:
    - PartialOvoidReport: The verdict, the size, the bound 1+st and whether the size is within it.

    """
    pts = sorted(set(pts))
    chosen = to_mask(pts)
    ok = all(popcount(S.collinear_mask(p) & chosen) == 1 for p in pts)
    try:
        s, t = S.order
        bound = 1 + s * t
    except (InvalidStructure, NotUniformLineSize, NotUniformPointDegree, ContainsTriangleOrDigon,
            GQAxiomFails, CountMismatch):
        bound = None
    within = None if bound is None else len(pts) <= bound
    return PartialOvoidReport(ok, len(pts), bound, within)


def greedy_partial_ovoid(S: IncidenceStructure) -> list[int]:
    """
    Greedy maximal partial ovoid: scan the points in order and keep each one not collinear with a kept point.
    """
    chosen: list[int] = []
    blocked = 0
    for p in range(S.point_count):
        if not blocked >> p & 1:
            chosen.append(p)
            blocked |= S.collinear_mask(p)
    return chosen
