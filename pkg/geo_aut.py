from __future__ import annotations
import logging
from math import prod
from typing import Iterable
from collections import Counter
from __types__ import WorkbenchConfig
from default_config import default_config
from incidence import IncidenceStructure
from permutation import Permutation
from perm_group import PermGroup, closure, induced_group
from exceptions import DomainMismatch, NotAutomorphism, TooLarge, VerificationFailed

_logger = logging.getLogger(__name__)

Colouring = list[int]


def is_automorphism(S: IncidenceStructure, g: Permutation) -> bool:
    """
    Decide whether a point permutation maps every line of S onto a line.

    Raises:
    - DomainMismatch: If g does not act on the points of S.

    """
    if g.domain_size != S.point_count:
        raise DomainMismatch("permutation and structure have different point counts",
                             permutation=g.domain_size, points=S.point_count)
    images = g.images
    return all(S.line_index(images[p] for p in line) is not None for line in S.lines)


def line_permutation(S: IncidenceStructure, g: Permutation) -> Permutation:
    """
    Return the permutation of the line indices induced by an automorphism.

    Raises:
    - NotAutomorphism: If some line is not mapped onto a line.

    """
    images = []
    for index, line in enumerate(S.lines):
        image = S.line_index(g.images[p] for p in line)
        if image is None:
            raise NotAutomorphism("line is not mapped onto a line", line=index)
        images.append(image)
    return Permutation(images)


def line_group(S: IncidenceStructure, A: PermGroup) -> PermGroup:
    return induced_group(A, lambda g: line_permutation(S, g))


# ======== COLOUR REFINEMENT =========== #

class _Refiner():
    """
    Colour refinement on the point-line incidence graph of S. Vertices 0..n-1 are the points and n..n+m-1 the
    lines. Colours are canonical: after each round they are renumbered by the sorted list of signatures, so two
    colourings that are images of each other under an automorphism refine to images of each other with equal
    traces.
    """

    def __init__(self, S: IncidenceStructure) -> None:
        n = S.point_count
        self.S = S
        self.n = n
        self.adjacency: list[tuple[int, ...]] = [tuple(n + i for i in S.lines_through(p)) for p in range(n)]
        self.adjacency += [line for line in S.lines]

    def initial(self, fixed_points: Iterable[int] = ()) -> Colouring:
        keys = [(0, len(self.adjacency[v])) if v < self.n else (1, len(self.adjacency[v]))
                for v in range(len(self.adjacency))]
        colours = _canonical(keys)
        for p in fixed_points:
            colours = self.individualize(colours, p)
        return colours

    def refine(self, colours: Colouring) -> tuple[Colouring, tuple]:
        trace = []
        while True:
            signatures = [(colours[v], tuple(sorted(colours[u] for u in self.adjacency[v])))
                          for v in range(len(colours))]
            refined = _canonical(signatures)
            trace.append(tuple(sorted(Counter(signatures).items())))
            if max(refined) == max(colours):
                return refined, tuple(trace)
            colours = refined

    @staticmethod
    def individualize(colours: Colouring, v: int) -> Colouring:
        keys = [2 * c + 1 for c in colours]
        keys[v] = 2 * colours[v]
        return _canonical(keys)

    def point_cells(self, colours: Colouring) -> dict[int, list[int]]:
        cells: dict[int, list[int]] = {}
        for p in range(self.n):
            cells.setdefault(colours[p], []).append(p)
        return cells

    def target_cell(self, colours: Colouring) -> list[int] | None:
        # smallest non-singleton point cell, ties broken by colour
        cells = [(len(c), colour, c) for colour, c in self.point_cells(colours).items() if len(c) > 1]
        if not cells:
            return None
        return min(cells)[2]


def _canonical(keys: list) -> Colouring:
    ranks = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [ranks[key] for key in keys]


def _find_automorphism(refiner: _Refiner, left: Colouring, right: Colouring,
                       counter: list[int]) -> Permutation | None:
    # automorphism mapping the individualized vertices of `left` to those of `right`
    counter[0] += 1
    left, left_trace = refiner.refine(left)
    right, right_trace = refiner.refine(right)
    if left_trace != right_trace:
        return None
    cell = refiner.target_cell(left)
    if cell is None:
        where = {right[p]: p for p in range(refiner.n)}
        g = Permutation(where[left[p]] for p in range(refiner.n))
        return g if is_automorphism(refiner.S, g) else None
    v = cell[0]
    candidates = [p for p in range(refiner.n) if right[p] == left[v]]
    for w in candidates:
        g = _find_automorphism(refiner, refiner.individualize(left, v), refiner.individualize(right, w), counter)
        if g is not None:
            return g
    return None


def automorphism_group(S: IncidenceStructure, fixed_points: Iterable[int] = (),
                       config: WorkbenchConfig = default_config) -> PermGroup:
    """
    Compute the automorphism group of S, or the pointwise stabilizer of `fixed_points` in it.

    A base b_0, b_1, ... is chosen by individualizing the least point of the smallest non-singleton cell of
    the refined colouring until the points are discrete. Going up the stabilizer chain from the last level,
    every point of the cell of b_i outside the orbit of b_i under the generators found so far is tested with a
    backtracking search for an automorphism fixing b_0..b_{i-1} and mapping b_i to it. The group order is the
    product of the orbit lengths; when it is at most `verify_order_max` the closure of the generators is
    enumerated and compared with it.

    Args:
    - S (IncidenceStructure): The structure.
    - fixed_points (Iterable[int]): Points fixed by every returned automorphism.
    - config (WorkbenchConfig): Caps.

    Returns:
    - PermGroup: Generators of the group, with its order recorded.

    Raises:
    - TooLarge: If S has more than `max_points` points.
    - VerificationFailed: If the enumerated order differs from the stabilizer chain order.

    """
    if S.point_count > config["max_points"]:
        raise TooLarge(f"{S.point_count} points exceed the limit of {config['max_points']}",
                       points=S.point_count, max_points=config["max_points"])
    fixed_points = list(fixed_points)
    refiner = _Refiner(S)
    colours, _ = refiner.refine(refiner.initial(fixed_points))

    levels: list[tuple[Colouring, int, list[int]]] = []
    while True:
        cell = refiner.target_cell(colours)
        if cell is None:
            break
        base = cell[0]
        levels.append((colours, base, cell))
        colours, _ = refiner.refine(refiner.individualize(colours, base))

    n = S.point_count
    generators: list[Permutation] = []
    orbit_lengths: list[int] = []
    counter = [0]
    for colours, base, cell in reversed(levels):
        orbit = _orbit(base, generators, n)
        for target in cell:
            if target in orbit:
                continue
            g = _find_automorphism(refiner, refiner.individualize(colours, base),
                                   refiner.individualize(colours, target), counter)
            if g is not None:
                generators.append(g)
                orbit = _orbit(base, generators, n)
        orbit_lengths.append(len(orbit))

    order = prod(orbit_lengths)
    A = PermGroup(generators, n, config)
    A._order = order
    if order <= config["verify_order_max"]:
        found = len(closure([g.images for g in A.generators], n, config["enumeration_cap"]))
        if found != order:
            raise VerificationFailed("stabilizer chain order differs from the enumerated order",
                                     chain=order, enumerated=found)
    _logger.info("Aut(%s) fixing %s: order %d, base length %d, %d generators, %d search nodes",
                 S.name or "S", fixed_points, order, len(levels), len(generators), counter[0])
    return A


def _orbit(point: int, generators: list[Permutation], n: int) -> set[int]:
    seen = {point}
    queue = [point]
    for x in queue:
        for g in generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen
