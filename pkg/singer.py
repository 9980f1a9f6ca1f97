from __future__ import annotations
import logging
from __types__ import WorkbenchConfig
from default_config import default_config
from incidence import IncidenceStructure, GQOrder
from permutation import Permutation
from perm_group import PermGroup, Images, invert
from geo_aut import is_automorphism
from exceptions import NotRegular, DomainMismatch, VerificationFailed

_logger = logging.getLogger(__name__)


class SingerContext():
    """
    SingerContext

    A quadrangle S with a Singer group G (a group of automorphisms acting regularly on the points) and a base
    point. The points are identified with the elements of G through g -> base^g, so the identity is the base
    point. Delta is the set of non-identity elements whose point is collinear with the base point.

    Attributes:
    - S (IncidenceStructure): The quadrangle.
    - G (PermGroup): The Singer group.
    - base_point (int): The point identified with the identity.
    - order (GQOrder): The order (s, t) of S.
    - elem_of (list[Images]): elem_of[p] is the element mapping the base point to p.
    - point_of (dict[Images, int]): Inverse of elem_of.
    - delta (frozenset[Images]): The set Delta.

    Methods:
    - element(p: int) -> Permutation: The element identified with a point.
    - rebase(h: Permutation) -> SingerContext: The context with base point base^h.
    - to_json() -> dict: Summary record.

    """

    def __init__(self, S: IncidenceStructure, G: PermGroup, base_point: int = 0) -> None:
        """
        Initialize a SingerContext instance.

        Args:
        - S (IncidenceStructure): A GQ.
        - G (PermGroup): A group of automorphisms of S.
        - base_point (int): The base point.

        Raises:
        - DomainMismatch: If G does not act on the points of S.
        - NotRegular: If G is not regular on the points.
        - VerificationFailed: If Delta has the wrong size or is not closed under inversion.

        """
        if G.domain_size != S.point_count:
            raise DomainMismatch("group and structure have different point counts",
                                 group=G.domain_size, points=S.point_count)
        if not G.is_regular():
            raise NotRegular("group is not regular on the points", order=G.order(), points=S.point_count)
        self.S = S
        self.G = G
        self.base_point = base_point
        self.order: GQOrder = S.order

        elem_of: list[Images] = [None] * S.point_count
        for g in G.enumerate():
            elem_of[g.images[base_point]] = g.images
        self.elem_of = elem_of
        self.point_of: dict[Images, int] = {e: p for p, e in enumerate(elem_of)}

        identity = tuple(range(S.point_count))
        self.delta = frozenset(elem_of[p] for p in range(S.point_count)
                               if p != base_point and S.collinear(base_point, p))
        s, t = self.order
        if len(self.delta) != s * (t + 1):
            raise VerificationFailed("Delta has the wrong size", size=len(self.delta), expected=s * (t + 1))
        if any(invert(d) not in self.delta for d in self.delta) or identity in self.delta:
            raise VerificationFailed("Delta is not closed under inversion")

    def element(self, p: int) -> Permutation:
        return Permutation(self.elem_of[p])

    def rebase(self, h: Permutation) -> SingerContext:
        return SingerContext(self.S, self.G, h.images[self.base_point])

    def to_json(self) -> dict:
        return {
            "structure": self.S.name,
            "order": list(self.order),
            "group_order": self.G.order(),
            "base_point": self.base_point,
            "delta": len(self.delta),
            "generators": [g.to_json() for g in self.G.generators],
        }

    def __repr__(self) -> str:
        return f"SingerContext({self.S.name}, |G| = {self.G.order()}, base {self.base_point})"


def make_context(S: IncidenceStructure, G: PermGroup, base_point: int = 0) -> SingerContext:
    context = SingerContext(S, G, base_point)
    _logger.debug("built %r with |Delta| = %d", context, len(context.delta))
    return context


def find_singer_groups(S: IncidenceStructure, A: PermGroup,
                       config: WorkbenchConfig = default_config) -> list[PermGroup]:
    """
    Search A for subgroups acting regularly on the points of S.

    When the number of points is a prime power the search runs inside a Sylow subgroup of A. The results are
    reduced to one per A-conjugacy class when |A| is at most `conjugacy_dedup_max_order`.

    Args:
    - S (IncidenceStructure): The structure.
    - A (PermGroup): An automorphism group of S.
    - config (WorkbenchConfig): Budgets.

    Returns:
    - list[PermGroup]: Singer groups, each verified regular and made of automorphisms.

    Raises:
    - DomainMismatch: If A does not act on the points of S.
    - SearchBudgetExceeded: If the search runs out of nodes.

    """
    if A.domain_size != S.point_count:
        raise DomainMismatch("group and structure have different point counts",
                             group=A.domain_size, points=S.point_count)
    found = A.regular_subgroups(config["max_singer_groups"])
    for R in found:
        if not R.is_regular() or not all(is_automorphism(S, g) for g in R.generators):
            raise VerificationFailed("regular subgroup search returned an invalid group")
    if A.order() <= config["conjugacy_dedup_max_order"]:
        representatives: list[PermGroup] = []
        for R in found:
            if not any(A.are_conjugate_subgroups(R, K) for K in representatives):
                representatives.append(R)
        found = representatives
    _logger.info("%s: %d Singer groups of order %d", S.name, len(found), S.point_count)
    return found
