from __future__ import annotations
import logging
from multiprocessing.pool import ThreadPool
from typing import Callable
from __types__ import WorkbenchConfig
from default_config import default_config
from permutation import Permutation
from perm_group import PermGroup, minimal_generators
from finite_field import FiniteField, ProjectivePointSet
from constructions import matrix_permutation, symplectic_transvection
from simple_groups import SimpleGroupSpec, centralizer_formula, order_of_simple
from exceptions import UnsupportedFamily, FormulaMismatch, NonIntegerFormulaValue, VerificationFailed

_logger = logging.getLogger(__name__)

M11_GENERATORS = (
    [(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10)],
    [(2, 6, 10, 7), (3, 9, 4, 5)],
)


# ======== PERMUTATION REPRESENTATIONS =========== #

def alternating_group(n: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    Alt(n) on {0..n-1}, generated by the 3-cycles (0, 1, i).
    """
    return PermGroup([Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)], n, config)


def _elementary(field: FiniteField, n: int, i: int, j: int, lam: int) -> list[list[int]]:
    matrix = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    matrix[i][j] = lam
    return matrix


def psl_group(n: int, q: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    PSL(n, q) acting on the points of PG(n-1, q), generated by elementary transvections I + lam E_ij with lam
    running over an additive basis of GF(q). Redundant transvections are dropped greedily.

    Raises:
    - UnsupportedField: If GF(q) is not available.

    """
    field = FiniteField(q)
    space = ProjectivePointSet(field, n - 1)
    basis = [field.p ** k for k in range(field.k)]
    candidates = [matrix_permutation(space, _elementary(field, n, i, j, lam))
                  for i in range(n) for j in range(n) if i != j for lam in basis]
    gens = minimal_generators(candidates, len(space), config)
    _logger.debug("PSL(%d,%d): %d of %d transvections generate", n, q, len(gens), len(candidates))
    return PermGroup(gens, len(space), config)


def psp4_group(q: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    PSp(4, q) acting on the points of PG(3, q), generated by the symplectic transvections x -> x + B(x, v) v.
    """
    candidates = [symplectic_transvection(q, point) for point in range(len(ProjectivePointSet(FiniteField(q), 3)))]
    return PermGroup(minimal_generators(candidates, candidates[0].domain_size, config), config=config)


def mathieu11(config: WorkbenchConfig = default_config) -> PermGroup:
    """
    M11 on 11 points.

    Raises:
    - VerificationFailed: If the generated group is not sharply 4-transitive.

    """
    group = PermGroup([Permutation.from_cycles(11, cycles) for cycles in M11_GENERATORS], 11, config)
    if not group.is_k_transitive(4) or group.order() != 7920:
        raise VerificationFailed("M11 generators do not give a sharply 4-transitive group", order=group.order())
    return group


def permutation_representation(spec: SimpleGroupSpec, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    A permutation representation of a small simple group: Alt(n) naturally, PSL(n, q) and PSp(4, q) on
    projective points, M11 on 11 points.

    Raises:
    - UnsupportedFamily: For families without a representation here.

    """
    if spec.family == "Alt":
        return alternating_group(spec.n, config)
    if spec.family == "PSL":
        return psl_group(spec.n, spec.q, config)
    if spec.family == "PSp" and spec.n == 2:
        return psp4_group(spec.q, config)
    if spec.family == "M11":
        return mathieu11(config)
    raise UnsupportedFamily(f"no permutation representation for {spec}", **spec.to_json())


# ======== ORACLES =========== #

def _direct_centralizer(G: PermGroup, x: Permutation) -> int:
    return sum(1 for g in G.enumerate() if g * x == x * g)


def centralizer_orders(G: PermGroup, verify: bool = False,
                       config: WorkbenchConfig = default_config) -> list[tuple[Permutation, int]]:
    """
    The centralizer order |G| / |x^G| of each conjugacy class representative x.

    Args:
    - G (PermGroup): The group.
    - verify (bool): Also count each centralizer directly, one thread per representative.
    - config (WorkbenchConfig): Caps and number of workers.

    Returns:
    - list[tuple[Permutation, int]]: Representatives with their centralizer orders.

    Raises:
    - CapExceeded: If G is too large to enumerate.
    - VerificationFailed: If a direct count disagrees with the class size.

    """
    order = G.order()
    classes = [(c.representative, order // c.size) for c in G.conjugacy_classes()]
    if verify:
        pool = ThreadPool(processes=config["workers"])
        results = pool.starmap_async(_direct_centralizer, [[G, x] for x, _ in classes])
        counts = results.get()
        pool.close()
        pool.join()
        for (x, expected), count in zip(classes, counts):
            if count != expected:
                raise VerificationFailed("centralizer count disagrees with the class size",
                                         x=x.to_json(), counted=count, expected=expected)
    return classes


def brute_max_centralizer(G: PermGroup, verify: bool = False,
                          config: WorkbenchConfig = default_config) -> tuple[int, Permutation]:
    """
    The largest centralizer of a nonidentity element, with a witness (the least representative attaining it).
    """
    best = max(((size, x) for x, size in centralizer_orders(G, verify, config) if not x.is_identity()),
               key=lambda pair: pair[0])
    _logger.info("max centralizer %d in a group of order %d", best[0], G.order())
    return best


def witness_predicate(spec: SimpleGroupSpec) -> Callable[[Permutation], bool]:
    """
    Recognize the witness element of the centralizer formula inside the permutation representation: a 3-cycle
    in Alt(n), an involution in M11, and in PSL(n, q) and PSp(4, q) an element of order p fixing a hyperplane of
    projective points.

    Raises:
    - UnsupportedFamily: For families without a representation here.

    """
    if spec.family == "Alt":
        return lambda x: x.order() == 3 and len(x.fixed_points()) == spec.n - 3
    if spec.family == "M11":
        return lambda x: x.order() == 2
    if spec.family in ("PSL", "PSp"):
        q = spec.q
        dimension = spec.n if spec.family == "PSL" else 2 * spec.n
        hyperplane = (q ** (dimension - 1) - 1) // (q - 1)
        p = FiniteField(q).p
        return lambda x: x.order() == p and len(x.fixed_points()) == hyperplane
    raise UnsupportedFamily(f"no witness element for {spec}", **spec.to_json())


def formula_vs_brute(spec: SimpleGroupSpec, config: WorkbenchConfig = default_config) -> dict:
    """
    Compare the closed formulas with brute force: the order must equal the enumerated order, and the witness
    centralizer value must be the centralizer order of the conjugacy classes of the witness type.

    Args:
    - spec (SimpleGroupSpec): A group with a permutation representation.
    - config (WorkbenchConfig): Caps.

    Returns:
    - dict: Formula order and centralizer, enumerated order, brute-force maximum, the class centralizers and
      the centralizers of the witness classes.

    Raises:
    - NonIntegerFormulaValue: If the formula is not integral; the brute-force maximum is attached.
    - FormulaMismatch: If the order disagrees, no class has the witness type, or an exact witness value differs
      from the centralizer of a witness class.

    """
    G = permutation_representation(spec, config)
    classes = centralizer_orders(G, config=config)
    sizes = sorted({size for x, size in classes if not x.is_identity()})
    brute = sizes[-1]
    if order_of_simple(spec) != G.order():
        raise FormulaMismatch(f"order formula of {spec} disagrees with enumeration",
                              formula=order_of_simple(spec), enumerated=G.order())
    try:
        estimate = centralizer_formula(spec)
    except NonIntegerFormulaValue as e:
        _logger.warning("%s: formula is not integral, brute force gives %d", spec, brute)
        raise NonIntegerFormulaValue(str(e), brute=brute, **e.details) from e
    is_witness = witness_predicate(spec)
    witnessed = sorted({size for x, size in classes if not x.is_identity() and is_witness(x)})
    if not witnessed:
        raise FormulaMismatch(f"no conjugacy class of {spec} has the witness type", witness=estimate.witness,
                              centralizers=sizes)
    found = witnessed == [estimate.value] if estimate.exact else min(witnessed) >= estimate.value
    if not found:
        raise FormulaMismatch(f"witness centralizer of {spec} differs from brute force", formula=estimate.value,
                              witness=estimate.witness, witness_centralizers=witnessed, centralizers=sizes)
    return {"group": str(spec), "order": G.order(), "formula": estimate.to_json(), "brute_max": brute,
            "centralizers": sizes, "witness_centralizers": witnessed}
