from __future__ import annotations
import logging
from math import lcm, factorial
from typing import Callable, Iterable, NamedTuple, Sequence
from sympy import factorint
from __types__ import WorkbenchConfig
from default_config import default_config
from permutation import Permutation
from exceptions import CapExceeded, DomainMismatch, NotTransitive, SearchBudgetExceeded, VerificationFailed

_logger = logging.getLogger(__name__)

Images = tuple  # image form of a permutation, used inside closures


class UnionFind():
    """
    Disjoint-set forest over a finite set, with union by rank and path compression.
    """

    def __init__(self, X: Iterable) -> None:
        self.parent = {x: x for x in X}
        self.rank = {x: 0 for x in self.parent}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]
        return True

    def reps(self) -> set:
        return set(self.rank)

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(sorted(c) for c in groups.values())


class ConjugacyClass(NamedTuple):
    representative: Permutation
    size: int


def compose(a: Images, b: Images) -> Images:
    return tuple(map(b.__getitem__, a))


def invert(a: Images) -> Images:
    images = [0] * len(a)
    for i, j in enumerate(a):
        images[j] = i
    return tuple(images)


def closure(generators: Sequence[Images], n: int, cap: int, limit: int = None,
            fixed_point_free: bool = False) -> set[Images] | None:
    """
    Breadth-first closure of a set of permutations under composition.

    Args:
    - generators (Sequence[Images]): Generators in image form.
    - n (int): Domain size.
    - cap (int): Raise CapExceeded beyond this many elements.
    - limit (int): Return None as soon as the closure grows beyond this size.
    - fixed_point_free (bool): Return None as soon as a non-identity element fixes a point.

    Returns:
    - set[Images] | None: The elements, or None when a limit was hit.

    """
    identity = tuple(range(n))
    elements = {identity}
    queue = [identity]
    for e in queue:
        for g in generators:
            x = tuple(map(g.__getitem__, e))
            if x in elements:
                continue
            if fixed_point_free and any(i == j for i, j in enumerate(x)):
                return None
            elements.add(x)
            queue.append(x)
            if limit is not None and len(elements) > limit:
                return None
            if len(elements) > cap:
                raise CapExceeded(f"group closure exceeds {cap} elements", cap=cap)
    return elements


class PermGroup():
    """
    PermGroup

    A finitely generated permutation group on {0..domain_size-1}. The element list is enumerated on demand by
    closure, sorted lexicographically on image sequences, and cached. All subgroup operations (stabilizers,
    centralizers, normalizers, classes) filter the element list.

    Attributes:
    - generators (list[Permutation]): Generators, all on the same domain.
    - domain_size (int): Number of points acted on.
    - config (WorkbenchConfig): Caps and budgets.

    Methods:
    - enumerate(cap: int = None) -> list[Permutation]: All elements in lexicographic order.
    - order() -> int: Number of elements.
    - contains(g: Permutation) -> bool: Membership test.
    - orbits(domain: Iterable[int] = None) -> list[list[int]]: Orbits on a subset of the domain.
    - orbit(point: int) -> list[int]: Orbit of one point.
    - is_transitive / is_regular / is_semiregular(domain = None) -> bool: Action properties.
    - stabilizer(point: int) -> PermGroup: Point stabilizer.
    - centralizer(x: Permutation) -> PermGroup: Centralizer of an element.
    - normalizer(H: PermGroup) -> PermGroup: Normalizer of a subgroup.
    - conjugacy_classes() -> list[ConjugacyClass]: Class representatives (lexicographically least) and sizes.
    - minimal_block(alpha: int, beta: int) -> list[list[int]]: Finest block system joining alpha and beta.
    - is_primitive() -> bool: Only trivial block systems.
    - is_k_transitive(k: int) -> bool: Transitive on ordered k-tuples of distinct points.
    - sylow_subgroup(p: int) -> PermGroup: A Sylow p-subgroup.
    - subgroups_of_order(n: int) -> list[PermGroup]: All subgroups of order n.
    - regular_subgroups(max_results: int = None) -> list[PermGroup]: Subgroups acting regularly on the domain.
    - are_conjugate_subgroups(H: PermGroup, K: PermGroup) -> bool: Conjugacy of two subgroups.
    - is_abelian / exponent / is_p_group: Isomorphism-type fingerprints.

    """

    def __init__(self, generators: Iterable[Permutation], domain_size: int = None,
                 config: WorkbenchConfig = default_config) -> None:
        """
        Initialize a PermGroup instance.

        Args:
        - generators (Iterable[Permutation]): Generators; may be empty when domain_size is given.
        - domain_size (int): Size of the domain, required for the trivial group without generators.
        - config (WorkbenchConfig): Caps and budgets.

        Raises:
        - DomainMismatch: If generators act on different domains.

        """
        self.generators: list[Permutation] = list(generators)
        sizes = {g.domain_size for g in self.generators}
        if domain_size is not None:
            sizes.add(domain_size)
        if len(sizes) != 1:
            raise DomainMismatch("generators on different domains", sizes=sorted(sizes))
        self.domain_size: int = sizes.pop()
        if not self.generators:
            self.generators = [Permutation.identity(self.domain_size)]
        self.config = config
        self._elements: list[Permutation] = None
        self._element_set: set[Images] = None
        self._order: int = None  # set by searches that certify the order without enumerating

    @staticmethod
    def from_elements(elements: Iterable[Permutation], domain_size: int,
                      config: WorkbenchConfig = default_config) -> PermGroup:
        """
        Build a group from the complete element list of a subgroup, with a greedy lexicographic generating set.

        Args:
        - elements (Iterable[Permutation]): Every element of the subgroup.
        - domain_size (int): Domain size.
        - config (WorkbenchConfig): Caps and budgets.

        Returns:
        - PermGroup: The subgroup with its element cache filled.

        """
        elements = sorted(set(elements))
        group = PermGroup(minimal_generators(elements, domain_size, config), domain_size, config)
        group._elements = elements
        group._element_set = {e.images for e in elements}
        return group

    # ======== ENUMERATION =========== #

    def enumerate(self, cap: int = None) -> list[Permutation]:
        cap = self.config["enumeration_cap"] if cap is None else cap
        if self._elements is None:
            found = closure([g.images for g in self.generators], self.domain_size, cap)
            self._elements = [Permutation(images) for images in sorted(found)]
            self._element_set = found
            _logger.debug("enumerated group of order %d on %d points", len(found), self.domain_size)
        if len(self._elements) > cap:
            raise CapExceeded(f"group has more than {cap} elements", cap=cap)
        return self._elements

    def element_set(self) -> set[Images]:
        if self._element_set is None:
            self.enumerate()
        return self._element_set

    def order(self) -> int:
        if self._elements is None and self._order is not None:
            return self._order
        return len(self.enumerate())

    def contains(self, g: Permutation) -> bool:
        return g.images in self.element_set()

    def identity(self) -> Permutation:
        return Permutation.identity(self.domain_size)

    # ======== ACTION =========== #

    def orbits(self, domain: Iterable[int] = None) -> list[list[int]]:
        points = range(self.domain_size) if domain is None else sorted(set(domain))
        uf = UnionFind(points)
        for g in self.generators:
            for x in points:
                y = g.images[x]
                if y not in uf.parent:
                    raise DomainMismatch("subset is not invariant under the group", point=x)
                uf.union(x, y)
        return uf.classes()

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def is_transitive(self, domain: Iterable[int] = None) -> bool:
        return len(self.orbits(domain)) == 1

    def is_regular(self, domain: Iterable[int] = None) -> bool:
        points = list(range(self.domain_size)) if domain is None else sorted(set(domain))
        return self.is_transitive(points) and self.order() == len(points)

    def is_semiregular(self, domain: Iterable[int] = None) -> bool:
        """
        True iff every element acting non-trivially on the subset fixes none of its points.
        """
        points = list(range(self.domain_size)) if domain is None else sorted(set(domain))
        induced = {tuple(g.images[x] for x in points) for g in self.enumerate()}
        return all(len(orbit) == len(induced) for orbit in self.orbits(points))

    # ======== SUBGROUPS =========== #

    def subgroup(self, generators: Iterable[Permutation]) -> PermGroup:
        return PermGroup(generators, self.domain_size, self.config)

    def stabilizer(self, point: int) -> PermGroup:
        return PermGroup.from_elements((g for g in self.enumerate() if g.images[point] == point),
                                       self.domain_size, self.config)

    def centralizer(self, x: Permutation) -> PermGroup:
        return PermGroup.from_elements((g for g in self.enumerate() if g * x == x * g),
                                       self.domain_size, self.config)

    def normalizer(self, H: PermGroup) -> PermGroup:
        members = H.element_set()
        gens = [h.images for h in H.generators]

        def normalizes(g: Permutation) -> bool:
            inverse = invert(g.images)
            return all(compose(compose(inverse, h), g.images) in members for h in gens)

        return PermGroup.from_elements(filter(normalizes, self.enumerate()), self.domain_size, self.config)

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        """
        Split the group into conjugacy classes by closing each element under conjugation by the generators.

        Returns:
        - list[ConjugacyClass]: Representatives (least element of each class) in ascending order with sizes.

        """
        gens = [(invert(g.images), g.images) for g in self.generators]
        assigned: set[Images] = set()
        classes = []
        for element in self.enumerate():
            if element.images in assigned:
                continue
            members = {element.images}
            queue = [element.images]
            for x in queue:
                for inverse, g in gens:
                    y = compose(compose(inverse, x), g)
                    if y not in members:
                        members.add(y)
                        queue.append(y)
            assigned |= members
            classes.append(ConjugacyClass(element, len(members)))
        return classes

    def are_conjugate_subgroups(self, H: PermGroup, K: PermGroup) -> bool:
        if H.order() != K.order():
            return False
        target = K.element_set()
        if H.element_set() == target:
            return True
        gens = [h.images for h in H.generators]
        for a in self.enumerate():
            inverse = invert(a.images)
            if all(compose(compose(inverse, h), a.images) in target for h in gens):
                return True
        return False

    # ======== BLOCKS =========== #

    def minimal_block(self, alpha: int, beta: int) -> list[list[int]]:
        """
        Return the finest block system in which alpha and beta share a block.

        Args:
        - alpha (int): First point.
        - beta (int): Second point.

        Returns:
        - list[list[int]]: The blocks, sorted.

        """
        uf = UnionFind(range(self.domain_size))
        uf.union(alpha, beta)
        pending = [(alpha, beta)]
        while pending:
            x, y = pending.pop()
            for g in self.generators:
                u, v = g.images[x], g.images[y]
                if uf.find(u) != uf.find(v):
                    # enqueue the merged representatives
                    pending.append((uf.find(u), uf.find(v)))
                    uf.union(u, v)
        return uf.classes()

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            raise NotTransitive("primitivity needs a transitive group", orbits=len(self.orbits()))
        for beta in range(1, self.domain_size):
            if len(self.minimal_block(0, beta)) > 1:
                return False
        return True

    def is_k_transitive(self, k: int) -> bool:
        n = self.domain_size
        start = tuple(range(k))
        seen = {start}
        queue = [start]
        for x in queue:
            for g in self.generators:
                y = tuple(g.images[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == factorial(n) // factorial(n - k)

    # ======== FINGERPRINTS =========== #

    def is_abelian(self) -> bool:
        return all(g * h == h * g for i, g in enumerate(self.generators) for h in self.generators[i + 1:])

    def exponent(self) -> int:
        return lcm(1, *(g.order() for g in self.enumerate()))

    def is_p_group(self) -> bool:
        return len(factorint(self.order())) <= 1

    # ======== SYLOW AND SUBGROUP SEARCH =========== #

    def sylow_subgroup(self, p: int) -> PermGroup:
        """
        Return a Sylow p-subgroup, grown one step at a time: an element y outside the current p-subgroup P that
        normalizes P with y^p in P gives the p-group <P, y> of order p|P|.

        Args:
        - p (int): A prime.

        Returns:
        - PermGroup: A subgroup of order p^a, where p^a is the p-part of the group order.

        """
        target = p ** factorint(self.order()).get(p, 0)
        n = self.domain_size
        cap = self.config["enumeration_cap"]
        gens: list[Images] = []
        members = {tuple(range(n))}
        while len(members) < target:
            found = None
            for y in self.enumerate():
                y = y.images
                if y in members:
                    continue
                power = y
                for _ in range(p - 1):
                    power = compose(power, y)
                if power not in members:
                    continue
                inverse = invert(y)
                if all(compose(compose(inverse, h), y) in members for h in gens):
                    found = y
                    break
            if found is None:
                raise VerificationFailed(f"no element extends the {p}-subgroup", order=len(members))
            gens.append(found)
            members = closure(gens, n, cap)
        _logger.debug("Sylow %d-subgroup of order %d", p, len(members))
        return PermGroup.from_elements((Permutation(m) for m in members), n, self.config)

    def subgroups_of_order(self, order: int) -> list[PermGroup]:
        """
        Return all subgroups of the given order, found by closing subgroups of order dividing `order` under one
        more element at a time.

        Args:
        - order (int): Target order.

        Returns:
        - list[PermGroup]: The subgroups, sorted by their element lists.

        Raises:
        - CapExceeded: If the group has more than 10^4 elements.
        - SearchBudgetExceeded: If more closures than the node budget are needed.

        """
        if self.order() > 10_000:
            raise CapExceeded("subgroup search needs a group of order at most 10000", cap=10_000)
        if self.order() % order:
            return []
        n = self.domain_size
        budget = self.config["search_node_budget"]
        elements = [g.images for g in self.enumerate()]
        trivial = frozenset([tuple(range(n))])
        seen = {trivial: []}
        frontier = [trivial]
        found = []
        nodes = 0
        while frontier:
            next_frontier = []
            for members in frontier:
                for g in elements:
                    if g in members:
                        continue
                    nodes += 1
                    if nodes > budget:
                        raise SearchBudgetExceeded("subgroup search budget exhausted", budget=budget)
                    gens = seen[members] + [g]
                    grown = closure(gens, n, self.config["enumeration_cap"], limit=order)
                    if grown is None or order % len(grown):
                        continue
                    grown = frozenset(grown)
                    if grown in seen:
                        continue
                    seen[grown] = gens
                    if len(grown) == order:
                        found.append(grown)
                    else:
                        next_frontier.append(grown)
            frontier = next_frontier
        if order == 1:
            found = [trivial]
        return [PermGroup.from_elements((Permutation(m) for m in members), n, self.config)
                for members in sorted(found, key=sorted)]

    def regular_subgroups(self, max_results: int = None) -> list[PermGroup]:
        """
        Search the subgroups that act regularly on the domain.

        A regular subgroup R holds exactly one element mapping point 0 to each point. The search grows a
        semiregular subgroup by the element sending 0 to the least point outside the current orbit of 0, so
        every regular subgroup is reached along exactly one branch. When the domain size is a prime power the
        search runs inside one Sylow subgroup, which contains a conjugate of every regular subgroup.

        Args:
        - max_results (int): Stop after this many subgroups (default from config).

        Returns:
        - list[PermGroup]: The regular subgroups found, in discovery order.

        Raises:
        - SearchBudgetExceeded: If the node budget runs out before the search completes.

        """
        n = self.domain_size
        max_results = self.config["max_singer_groups"] if max_results is None else max_results
        budget = self.config["search_node_budget"]
        primes = factorint(n)
        space = self.sylow_subgroup(next(iter(primes))) if len(primes) == 1 else self
        if space.order() % n:
            return []

        candidates: dict[int, list[Images]] = {}
        for g in space.enumerate():
            images = g.images
            if images[0] != 0 and all(i != j for i, j in enumerate(images)):
                candidates.setdefault(images[0], []).append(images)

        found: list[frozenset] = []
        nodes = 0

        def search(gens: list[Images], members: set[Images]) -> None:
            nonlocal nodes
            if len(found) >= max_results:
                return
            if len(members) == n:
                found.append(frozenset(members))
                return
            reached = {m[0] for m in members}
            target = next(x for x in range(n) if x not in reached)
            for g in candidates.get(target, []):
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded("regular subgroup search budget exhausted", budget=budget)
                grown = closure(gens + [g], n, self.config["enumeration_cap"], limit=n, fixed_point_free=True)
                if grown is not None and n % len(grown) == 0:
                    search(gens + [g], grown)
                if len(found) >= max_results:
                    return

        search([], {tuple(range(n))})
        _logger.info("found %d regular subgroups of order %d after %d nodes", len(found), n, nodes)
        return [PermGroup.from_elements((Permutation(m) for m in members), n, self.config) for members in found]

    def to_json(self) -> dict:
        return {"domain": self.domain_size, "generators": [g.to_json() for g in self.generators]}

    def __repr__(self) -> str:
        order = len(self._elements) if self._elements is not None else "?"
        return f"PermGroup(degree {self.domain_size}, order {order})"


def minimal_generators(elements: Sequence[Permutation], domain_size: int,
                       config: WorkbenchConfig = default_config) -> list[Permutation]:
    """
    Greedy generating set: scan the elements in lexicographic order and keep each one outside the subgroup
    generated so far.
    """
    gens: list[Permutation] = []
    members = {tuple(range(domain_size))}
    for e in sorted(elements):
        if e.images not in members:
            gens.append(e)
            members = closure([g.images for g in gens], domain_size, config["enumeration_cap"])
    return gens


def induced_group(G: PermGroup, act: Callable[[Permutation], Permutation]) -> PermGroup:
    """
    Return the image of G under an action map, e.g. the action on lines induced by a point action.
    """
    images = [act(g) for g in G.generators]
    return PermGroup(images, images[0].domain_size, G.config)
