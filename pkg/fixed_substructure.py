from __future__ import annotations
import logging
from collections import Counter
from typing import Callable, NamedTuple
from __types__ import CaseTag
from incidence import IncidenceStructure, classify_thin, validate_gq
from permutation import Permutation
from perm_group import PermGroup
from geo_aut import is_automorphism, line_permutation
from exceptions import WorkbenchError, InvalidStructure, NotAutomorphism, NotThick, NoCaseApplies, VerificationFailed

_logger = logging.getLogger(__name__)


class FixedPartition():
    """
    FixedPartition

    The partitions of the points and of the lines of S determined by an automorphism g. P0 holds the fixed
    points, P1 the moved points collinear with their image and P2 the rest; L0, L1 and L2 are the dual sets
    (fixed lines, moved lines concurrent with their image, the rest).

    Attributes:
    - g (Permutation): The automorphism, acting on points.
    - line_action (Permutation): The induced permutation of the line indices.
    - P0, P1, P2 (frozenset[int]): Point classes.
    - L0, L1, L2 (frozenset[int]): Line classes.

    """

    def __init__(self, S: IncidenceStructure, g: Permutation) -> None:
        self.g = g
        self.line_action = line_permutation(S, g)
        points, lines = g.images, self.line_action.images
        self.P0 = frozenset(p for p in range(S.point_count) if points[p] == p)
        self.P1 = frozenset(p for p in range(S.point_count) if points[p] != p and S.collinear(p, points[p]))
        self.P2 = frozenset(range(S.point_count)) - self.P0 - self.P1
        self.L0 = frozenset(i for i in range(S.line_count) if lines[i] == i)
        self.L1 = frozenset(i for i in range(S.line_count)
                            if lines[i] != i and S.line_mask(i) & S.line_mask(lines[i]))
        self.L2 = frozenset(range(S.line_count)) - self.L0 - self.L1

    def sizes(self) -> dict[str, int]:
        return {name: len(getattr(self, name)) for name in ("P0", "P1", "P2", "L0", "L1", "L2")}

    def to_json(self) -> dict:
        record = {name: sorted(getattr(self, name)) for name in ("P0", "P1", "P2", "L0", "L1", "L2")}
        record["g"] = self.g.to_json()
        return record


def fixed_partition(S: IncidenceStructure, g: Permutation) -> FixedPartition:
    """
    Split the points and lines of S by their behaviour under g.

    Raises:
    - NotAutomorphism: If g does not map lines onto lines.

    """
    if not is_automorphism(S, g):
        raise NotAutomorphism("permutation is not an automorphism of the structure")
    return FixedPartition(S, g)


class BensonReport(NamedTuple):
    points_side: int  # (1+t)|P0| + |P1|
    lines_side: int  # (1+s)|L0| + |L1|
    target: int  # (s+1)(t+1)
    modulus: int  # s+t
    residue: int


def benson_check(S: IncidenceStructure, g: Permutation) -> BensonReport:
    """
    Evaluate both sides of Benson's counting identity for an automorphism of a thick GQ and check that they
    agree and are congruent to (s+1)(t+1) modulo s+t.

    Args:
    - S (IncidenceStructure): A thick GQ of order (s, t).
    - g (Permutation): An automorphism.

    Returns:
    - BensonReport: The two sides, the target, the modulus and the residue.

    Raises:
    - NotThick: If s or t is 1.
    - NotAutomorphism: If g is not an automorphism.
    - VerificationFailed: If the identity or the congruence fails.

    """
    s, t = S.order
    if not S.order.thick:
        raise NotThick("Benson's congruence needs a thick quadrangle", s=s, t=t)
    part = fixed_partition(S, g)
    points_side = (1 + t) * len(part.P0) + len(part.P1)
    lines_side = (1 + s) * len(part.L0) + len(part.L1)
    target = (s + 1) * (t + 1)
    report = BensonReport(points_side, lines_side, target, s + t, points_side % (s + t))
    if points_side != lines_side or report.residue != target % (s + t):
        raise VerificationFailed("Benson's congruence fails", **report._asdict(), g=g.to_json())
    return report


# ======== CASES =========== #

Witness = dict[str, int]


def _case_0(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    return {} if not part.P0 and not part.L0 else None


def _case_1(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    if not part.P0 or part.L0:
        return None
    if any(S.collinear(x, y) for x in part.P0 for y in part.P0 if x < y):
        return None
    return {"points": len(part.P0)}


def _case_1_dual(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    if part.P0 or not part.L0:
        return None
    if any(S.line_mask(i) & S.line_mask(j) for i in part.L0 for j in part.L0 if i < j):
        return None
    return {"lines": len(part.L0)}


def _case_2(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    if not part.L0:
        return None
    for p in sorted(part.P0):
        if all(S.collinear(p, x) for x in part.P0) and all(S.line_mask(i) >> p & 1 for i in part.L0):
            return {"point": p}
    return None


def _case_2_dual(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    if not part.P0:
        return None
    for i in sorted(part.L0):
        mask = S.line_mask(i)
        if all(mask >> p & 1 for p in part.P0) and all(mask & S.line_mask(j) for j in part.L0):
            return {"line": i}
    return None


def fixed_substructure(S: IncidenceStructure, part: FixedPartition) -> IncidenceStructure | None:
    """
    The substructure (P0, L0) with the fixed points renumbered in increasing order, or None when some fixed line
    carries fewer than two fixed points.
    """
    index = {p: i for i, p in enumerate(sorted(part.P0))}
    lines = [[index[p] for p in S.lines[i] if p in index] for i in sorted(part.L0)]
    if not lines or any(len(line) < 2 for line in lines):
        return None
    try:
        return IncidenceStructure(len(index), lines, "fixed")
    except InvalidStructure:
        return None


def _case_3(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    sub = fixed_substructure(S, part)
    shape = classify_thin(sub) if sub is not None else None
    if shape is None or shape.kind != "Grid":
        return None
    return {"s1": shape.a, "s2": shape.b}


def _case_3_dual(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    sub = fixed_substructure(S, part)
    shape = classify_thin(sub) if sub is not None else None
    if shape is None or shape.kind != "DualGrid":
        return None
    return {"t1": shape.a, "t2": shape.b}


def _case_4(S: IncidenceStructure, part: FixedPartition) -> Witness | None:
    sub = fixed_substructure(S, part)
    if sub is None:
        return None
    try:
        s, t = validate_gq(sub)
    except WorkbenchError:
        return None
    return {"s": s, "t": t}


CASES: list[tuple[CaseTag, Callable[[IncidenceStructure, FixedPartition], Witness | None]]] = [
    ("C0", _case_0), ("C1", _case_1), ("C1'", _case_1_dual), ("C2", _case_2), ("C2'", _case_2_dual),
    ("C3", _case_3), ("C3'", _case_3_dual), ("C4", _case_4),
]


class SubstructureClass(NamedTuple):
    """
    The case of the fixed substructure of an automorphism, with its witness: the distinguished point (C2) or
    line (C2'), the grid parameters (C3, C3') or the subquadrangle order (C4).
    """
    tag: CaseTag
    witness: Witness
    partition: FixedPartition

    def verify(self, S: IncidenceStructure) -> bool:
        return dict(CASES)[self.tag](S, self.partition) == self.witness

    def __str__(self) -> str:
        if self.tag not in ("C3", "C3'", "C4"):
            return self.tag
        return f"{self.tag}({','.join(str(v) for v in self.witness.values())})"

    def to_json(self) -> dict:
        return {"case": self.tag, "witness": self.witness, "sizes": self.partition.sizes()}


def classify_fixed_substructure(S: IncidenceStructure, g: Permutation) -> SubstructureClass:
    """
    Decide which shape the fixed substructure of the automorphism g takes, testing the cases in the
    order C0, C1, C1', C2, C2', C3, C3', C4 and returning the first that holds.

    Args:
    - S (IncidenceStructure): A thick GQ.
    - g (Permutation): An automorphism.

    Returns:
    - SubstructureClass: The case tag with its witness.

    Raises:
    - NotAutomorphism: If g is not an automorphism.
    - NoCaseApplies: If no case holds.

    """
    part = fixed_partition(S, g)
    for tag, test in CASES:
        witness = test(S, part)
        if witness is not None:
            return SubstructureClass(tag, witness, part)
    raise NoCaseApplies("fixed substructure matches no case", sizes=part.sizes(), g=g.to_json())


def classification_census(S: IncidenceStructure, A: PermGroup) -> Counter:
    """
    Count the elements of A by the case of their fixed substructure, classifying one representative per
    conjugacy class and weighting it by the class size.
    """
    census: Counter = Counter()
    for representative, size in A.conjugacy_classes():
        census[str(classify_fixed_substructure(S, representative))] += size
    _logger.info("classified %d elements of Aut(%s) into %d kinds", sum(census.values()), S.name, len(census))
    return census
