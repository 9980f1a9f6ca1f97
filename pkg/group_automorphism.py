from __future__ import annotations
import logging
from math import prod
from __types__ import WorkbenchConfig
from default_config import default_config
from permutation import Permutation
from perm_group import PermGroup, Images, compose, minimal_generators
from exceptions import CapExceeded, DomainMismatch

_logger = logging.getLogger(__name__)


class GroupAutomorphism():
    """
    GroupAutomorphism

    An automorphism theta of a permutation group G, given by the images of a generating set and evaluated on
    every element through a spanning tree of the Cayley graph. Automorphisms act on the right: g^(theta phi) is
    (g^theta)^phi.

    Attributes:
    - group (PermGroup): The group G.
    - mapping (dict[Images, Images]): Image of every element, in image form.

    Methods:
    - __call__(g: Permutation) -> Permutation: Evaluate theta.
    - then(other: GroupAutomorphism) -> GroupAutomorphism: Apply self, then other.
    - inverse() -> GroupAutomorphism: The inverse automorphism.
    - order() -> int: Order of theta in Aut(G).
    - fixed_elements() -> list[Permutation]: The centralizer C_G(theta).
    - is_identity() -> bool: True for the identity automorphism.

    """

    def __init__(self, group: PermGroup, mapping: dict[Images, Images]) -> None:
        self.group = group
        self.mapping = mapping
        self._key = tuple(mapping[e.images] for e in group.enumerate())

    @staticmethod
    def identity(group: PermGroup) -> GroupAutomorphism:
        return GroupAutomorphism(group, {e: e for e in group.element_set()})

    @staticmethod
    def conjugation(group: PermGroup, m: Permutation) -> GroupAutomorphism:
        """
        Conjugation g -> m^-1 g m by a permutation m normalizing the group.
        """
        inverse = m.inverse().images
        mapping = {e: compose(compose(inverse, e), m.images) for e in group.element_set()}
        if set(mapping.values()) != group.element_set():
            raise DomainMismatch("conjugating permutation does not normalize the group")
        return GroupAutomorphism(group, mapping)

    def __call__(self, g: Permutation) -> Permutation:
        return Permutation(self.mapping[g.images])

    def then(self, other: GroupAutomorphism) -> GroupAutomorphism:
        return GroupAutomorphism(self.group, {e: other.mapping[x] for e, x in self.mapping.items()})

    def inverse(self) -> GroupAutomorphism:
        return GroupAutomorphism(self.group, {x: e for e, x in self.mapping.items()})

    def is_identity(self) -> bool:
        return all(e == x for e, x in self.mapping.items())

    def order(self) -> int:
        k = 1
        current = self
        while not current.is_identity():
            current = current.then(self)
            k += 1
        return k

    def fixed_elements(self) -> list[Permutation]:
        return [Permutation(e) for e in sorted(self.mapping) if self.mapping[e] == e]

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAutomorphism) and self._key == other._key

    def __lt__(self, other: GroupAutomorphism) -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"GroupAutomorphism(order {self.order()} on a group of order {len(self.mapping)})"


def _spanning_tree(gens: list[Images], n: int) -> list[tuple[Images, Images, int]]:
    # (element, parent, generator index), parents listed before children
    identity = tuple(range(n))
    seen = {identity}
    tree = [(identity, None, -1)]
    for e, _, _ in tree:
        for i, g in enumerate(gens):
            x = compose(e, g)
            if x not in seen:
                seen.add(x)
                tree.append((x, e, i))
    return tree


def group_automorphisms(G: PermGroup, cap: int = None,
                        config: WorkbenchConfig = default_config) -> list[GroupAutomorphism]:
    """
    Enumerate Aut(G) by assigning images to a generating set over elements of matching order.

    After each new generator image the partial map is extended along a spanning tree of the subgroup generated
    so far and checked for multiplicativity and injectivity there, which prunes most assignments early.

    Args:
    - G (PermGroup): The group.
    - cap (int): Largest admissible number of candidate assignments (default from config).
    - config (WorkbenchConfig): Caps and budgets.

    Returns:
    - list[GroupAutomorphism]: All automorphisms, sorted.

    Raises:
    - CapExceeded: If the product of the candidate counts exceeds the cap.

    """
    cap = config["automorphism_search_cap"] if cap is None else cap
    n = G.domain_size
    elements = G.enumerate()
    gens = [g.images for g in minimal_generators(elements, n, config)]
    if not gens:
        return [GroupAutomorphism.identity(G)]
    orders = {e.images: e.order() for e in elements}
    candidates = [[e for e in sorted(orders) if orders[e] == orders[g]] for g in gens]
    space = prod(len(c) for c in candidates)
    if space > cap:
        raise CapExceeded(f"automorphism search space {space} exceeds {cap}", cap=cap, search_space=space)

    trees = [_spanning_tree(gens[:k + 1], n) for k in range(len(gens))]
    results: list[GroupAutomorphism] = []

    def extend(k: int, images: list[Images]) -> dict[Images, Images] | None:
        phi: dict[Images, Images] = {}
        for e, parent, i in trees[k]:
            phi[e] = e if parent is None else compose(phi[parent], images[i])
        if len(set(phi.values())) != len(phi):
            return None
        for e, x in phi.items():
            for i, g in enumerate(gens[:k + 1]):
                if phi[compose(e, g)] != compose(x, images[i]):
                    return None
        return phi

    def assign(k: int, images: list[Images]) -> None:
        if k == len(gens):
            results.append(GroupAutomorphism(G, extend(k - 1, images)))
            return
        for image in candidates[k]:
            if extend(k, images + [image]) is not None:
                assign(k + 1, images + [image])

    assign(0, [])
    _logger.info("Aut(G) has order %d for |G| = %d (search space %d)", len(results), len(elements), space)
    return sorted(results)
