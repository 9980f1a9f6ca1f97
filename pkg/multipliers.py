from __future__ import annotations
import logging
from multiprocessing.pool import ThreadPool
from typing import NamedTuple
from __types__ import WorkbenchConfig, CentralizerCase
from default_config import default_config
from incidence import is_partial_ovoid, classify_thin
from permutation import Permutation
from perm_group import PermGroup, Images, compose, invert, closure
from group_automorphism import GroupAutomorphism, group_automorphisms
from geo_aut import is_automorphism, line_permutation
from fixed_substructure import fixed_partition, fixed_substructure, classify_fixed_substructure
from arithmetic_bounds import subgq_constraints, centralizer_bound_values
from singer import SingerContext
from manifest import REFERENCE_TAGS
from exceptions import WorkbenchError, VerificationFailed, NoCaseVerifies

_logger = logging.getLogger(__name__)


class MultiplierRecord():
    """
    MultiplierRecord

    A multiplier theta of a Singer context: an automorphism of G whose induced point map g -> g^theta is an
    automorphism of S. Everything but theta is recomputed from theta and the context.

    Attributes:
    - theta (GroupAutomorphism): The group automorphism.
    - point_map (Permutation): The induced point permutation, fixing the base point.
    - order (int): Order of theta.
    - H (PermGroup): The centralizer C_G(theta), the elements fixed by theta.
    - X (frozenset[Images]): The set {g^theta g^-1 : g in G}.
    - c (int): Number of fixed lines through the base point.
    - x_delta (int): |X and Delta|.

    """

    def __init__(self, ctx: SingerContext, theta: GroupAutomorphism) -> None:
        self.theta = theta
        mapping = theta.mapping
        self.point_map = Permutation([ctx.point_of[mapping[ctx.elem_of[p]]] for p in range(ctx.S.point_count)])
        self.order = theta.order()
        fixed = theta.fixed_elements()
        self.H = PermGroup.from_elements(fixed, ctx.G.domain_size, ctx.G.config)
        self.X = frozenset(compose(x, invert(g)) for g, x in mapping.items())
        lines = line_permutation(ctx.S, self.point_map)
        self.c = sum(1 for i in ctx.S.lines_through(ctx.base_point) if lines.images[i] == i)
        self.x_delta = len(self.X & ctx.delta)
        if len(self.X) * len(fixed) != ctx.G.order():
            raise VerificationFailed("|X| |H| differs from |G|", X=len(self.X), H=len(fixed))

    def to_json(self) -> dict:
        return {"order": self.order, "H": self.H.order(), "X_cap_delta": self.x_delta, "c": self.c,
                "point_map": self.point_map.to_json()}

    def __repr__(self) -> str:
        return f"MultiplierRecord(order {self.order}, |H| = {self.H.order()}, c = {self.c})"


def _check_closed(records: list[MultiplierRecord]) -> None:
    maps = {r.point_map.images for r in records}
    n = len(next(iter(maps)))
    generated = closure(list(maps), n, len(maps) + 1, limit=len(maps))
    if generated != maps:
        raise VerificationFailed("multipliers are not closed under composition", found=len(maps))


# ======== STRATEGIES =========== #

def multipliers_group_side(ctx: SingerContext, cap: int = None,
                           config: WorkbenchConfig = default_config) -> list[MultiplierRecord]:
    """
    Enumerate Aut(G) and keep the automorphisms that map Delta onto Delta and whose induced point map is an
    automorphism of S.

    Args:
    - ctx (SingerContext): The context.
    - cap (int): Largest admissible automorphism search space (default from config).
    - config (WorkbenchConfig): Caps.

    Returns:
    - list[MultiplierRecord]: The multipliers, sorted by point map.

    Raises:
    - CapExceeded: If Aut(G) is too expensive to enumerate.
    - VerificationFailed: If the result is not closed under composition.

    """
    automorphisms = group_automorphisms(ctx.G, cap, config)
    records = []
    rejected_fast = 0
    for theta in automorphisms:
        if {theta.mapping[d] for d in ctx.delta} != ctx.delta:
            rejected_fast += 1
            continue
        point_map = Permutation([ctx.point_of[theta.mapping[ctx.elem_of[p]]] for p in range(ctx.S.point_count)])
        if is_automorphism(ctx.S, point_map):
            records.append(MultiplierRecord(ctx, theta))
    _check_closed(records)
    _logger.info("group side: %d of %d automorphisms are multipliers (%d rejected by Delta)",
                 len(records), len(automorphisms), rejected_fast)
    return sorted(records, key=lambda r: r.point_map)


def multipliers_geometry_side(ctx: SingerContext, A: PermGroup,
                              config: WorkbenchConfig = default_config) -> list[MultiplierRecord]:
    """
    Take the automorphisms of S that fix the base point and normalize G, and turn each m into the conjugation
    g -> m^-1 g m, whose induced point map is m again.

    Args:
    - ctx (SingerContext): The context.
    - A (PermGroup): The automorphism group of S.
    - config (WorkbenchConfig): Caps.

    Returns:
    - list[MultiplierRecord]: The multipliers, sorted by point map.

    Raises:
    - VerificationFailed: If an induced point map differs from its automorphism, or closure fails.

    """
    members = ctx.G.element_set()
    gens = [g.images for g in ctx.G.generators]
    records = []
    for m in A.enumerate():
        if m.images[ctx.base_point] != ctx.base_point:
            continue
        inverse = invert(m.images)
        if not all(compose(compose(inverse, g), m.images) in members for g in gens):
            continue
        record = MultiplierRecord(ctx, GroupAutomorphism.conjugation(ctx.G, m))
        if record.point_map != m:
            raise VerificationFailed("induced point map differs from the automorphism", m=m.to_json())
        records.append(record)
    _check_closed(records)
    _logger.info("geometry side: %d multipliers from |A| = %d", len(records), A.order())
    return sorted(records, key=lambda r: r.point_map)


def multiplier_maps(records: list[MultiplierRecord]) -> set[Images]:
    return {r.point_map.images for r in records}


def check_base_change(ctx: SingerContext, A: PermGroup, h: Permutation,
                      config: WorkbenchConfig = default_config) -> bool:
    """
    Compare the multipliers at the base point with those at base^h: the second set must be h^-1 M h.
    """
    moved = ctx.rebase(h)
    here = {r.point_map.conjugate(h).images for r in multipliers_geometry_side(ctx, A, config)}
    there = multiplier_maps(multipliers_geometry_side(moved, A, config))
    return here == there


# ======== FIXED STRUCTURE =========== #

def check_fixed_structure(ctx: SingerContext, rec: MultiplierRecord) -> dict:
    """
    Check the fixed point structure of a multiplier: its fixed points are the points of H, P1 is the set of
    points g with g^theta g^-1 in Delta, |P1| = |H| |X and Delta|, and every fixed point lies on exactly c fixed
    lines.

    Args:
    - ctx (SingerContext): The context.
    - rec (MultiplierRecord): The multiplier.

    Returns:
    - dict: The sizes |P0|, |P1|, |H|, |X and Delta| and c.

    Raises:
    - VerificationFailed: On the first failing clause.

    """
    part = fixed_partition(ctx.S, rec.point_map)
    H_points = {ctx.point_of[h] for h in rec.H.element_set()}
    if set(part.P0) != H_points:
        raise VerificationFailed("fixed points differ from the centralizer", clause="fixed_points")
    mapping = rec.theta.mapping
    moved_to_delta = {ctx.point_of[g] for g in ctx.G.element_set() if compose(mapping[g], invert(g)) in ctx.delta}
    if set(part.P1) != moved_to_delta:
        raise VerificationFailed("P1 differs from the points with g^theta g^-1 in Delta", clause="P1")
    if len(part.P1) != rec.H.order() * rec.x_delta:
        raise VerificationFailed("|P1| differs from |H| |X and Delta|", clause="product",
                                 P1=len(part.P1), H=rec.H.order(), X_cap_delta=rec.x_delta)
    for p in part.P0:
        fixed_lines = sum(1 for i in ctx.S.lines_through(p) if i in part.L0)
        if fixed_lines != rec.c:
            raise VerificationFailed("fixed points lie on different numbers of fixed lines", clause="constant_c",
                                     point=p, lines=fixed_lines, c=rec.c)
    return {"P0": len(part.P0), "P1": len(part.P1), "H": rec.H.order(), "X_cap_delta": rec.x_delta, "c": rec.c}


def check_small_order(ctx: SingerContext, rec: MultiplierRecord) -> dict:
    """
    For a multiplier of order 2 or 3, check that H acts semiregularly on L1, |L1| = (t+1-c)|H| and
    (1+s)|L0| = |H|(c + |X and Delta|).

    Returns:
    - dict: {"status": "NotApplicable"} for other orders, else the sizes with status "Pass".

    Raises:
    - VerificationFailed: On the first failing clause.

    """
    if rec.order not in (2, 3):
        return {"status": "NotApplicable", "order": rec.order}
    s, t = ctx.order
    part = fixed_partition(ctx.S, rec.point_map)
    H = rec.H.order()
    for h in rec.H.enumerate():
        if h.is_identity():
            continue
        lines = line_permutation(ctx.S, h).images
        if any(lines[i] == i for i in part.L1):
            raise VerificationFailed("an element of H fixes a line of L1", clause="semiregular", h=h.to_json())
    if len(part.L1) != (t + 1 - rec.c) * H:
        raise VerificationFailed("|L1| differs from (t+1-c)|H|", clause="L1", L1=len(part.L1), H=H, c=rec.c)
    if (1 + s) * len(part.L0) != H * (rec.c + rec.x_delta):
        raise VerificationFailed("|L0| differs from |H|(c + |X and Delta|)/(1+s)", clause="L0",
                                 L0=len(part.L0), H=H, c=rec.c, X_cap_delta=rec.x_delta)
    _logger.debug("order %d multiplier: |L0| = %d, |L1| = %d", rec.order, len(part.L0), len(part.L1))
    return {"status": "Pass", "order": rec.order, "L0": len(part.L0), "L1": len(part.L1), "H": H}


# ======== CENTRALIZER CASES =========== #

class CentralizerShape(NamedTuple):
    case: CentralizerCase
    evidence: dict
    substructure: str


def _is_subgroup(elements: set[Images]) -> bool:
    return all(compose(a, b) in elements for a in elements for b in elements)


def _product(left: set[Images], right: set[Images], swap: bool) -> set[Images]:
    return {compose(b, a) if swap else compose(a, b) for a in left for b in right}


def _line_elements(ctx: SingerContext, line: int, H: set[Images]) -> set[Images]:
    return {ctx.elem_of[p] for p in ctx.S.lines[line] if ctx.elem_of[p] in H}


def _case_a(ctx, rec, H, part, shape) -> dict | None:
    s, t = ctx.order
    if len(H) <= 1 + s * t and is_partial_ovoid(ctx.S, part.P0).is_partial_ovoid:
        return {"H": len(H), "bound": 1 + s * t}
    return None


def _case_b(ctx, rec, H, part, shape) -> dict | None:
    s, _ = ctx.order
    points = sorted(part.P0)
    for i in ctx.S.lines_through(points[0]):
        if all(ctx.S.line_mask(i) >> p & 1 for p in points) and (1 + s) % len(H) == 0:
            return {"line": i, "H": len(H)}
    return None


def _fixed_lines_through_base(ctx, part) -> list[int]:
    return [i for i in ctx.S.lines_through(ctx.base_point) if i in part.L0]


def _case_c(ctx, rec, H, part, shape) -> dict | None:
    s, _ = ctx.order
    if shape is None or shape.kind != "Grid":
        return None
    lines = _fixed_lines_through_base(ctx, part)
    if len(lines) != 2:
        return None
    Y1, Y2 = (_line_elements(ctx, i, H) for i in lines)
    if not (_is_subgroup(Y1) and _is_subgroup(Y2)):
        return None
    sizes = sorted((len(Y1) - 1, len(Y2) - 1))
    if sizes != [shape.a, shape.b] or (s + 1) % len(Y1) or (s + 1) % len(Y2):
        return None
    if len(Y1 & Y2) != 1 or _product(Y1, Y2, False) != H:
        return None
    return {"Y1": len(Y1), "Y2": len(Y2), "lines": lines}


def _case_c_twisted(ctx, rec, H, part, shape) -> dict | None:
    # products are read in both multiplication conventions
    if shape is None or shape.kind != "Grid" or shape.a != shape.b or shape.a % 2 == 0:
        return None
    lines = _fixed_lines_through_base(ctx, part)
    if len(lines) != 2:
        return None
    half = (shape.a + 1) // 2
    for first, second in (lines, lines[::-1]):
        Y1, Y2 = _line_elements(ctx, first, H), _line_elements(ctx, second, H)
        X1 = {g for g in Y1 if invert(g) in Y1}
        if len(X1) != half or not _is_subgroup(X1):
            continue
        for g1 in sorted(Y1 - X1):
            g1_inverse = invert(g1)
            for swap in (False, True):
                coset = _product({g1}, X1, swap)
                if Y1 != X1 | coset:
                    continue
                conjugate = _product(_product({g1}, X1, swap), {g1_inverse}, swap)
                if Y2 != conjugate | _product(X1, {g1_inverse}, swap):
                    continue
                if closure(list(X1) + [g1], len(g1), len(H)) != H:
                    continue
                return {"X1": len(X1), "g1": list(g1), "lines": [first, second], "swapped": swap}
    return None


def _case_d(ctx, rec, H, part, shape) -> dict | None:
    s, t = ctx.order
    if shape is None or shape.kind != "DualGrid" or shape.a != shape.b or not 2 <= shape.a <= min(s, t):
        return None
    # the two classes of pairwise noncollinear fixed points
    side = {ctx.base_point: 0}
    queue = [ctx.base_point]
    for x in queue:
        for i in ctx.S.lines_through(x):
            if i not in part.L0:
                continue
            for y in ctx.S.lines[i]:
                if y in part.P0 and y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
    K = {ctx.elem_of[p] for p, colour in side.items() if colour == 0}
    points = [p for p, colour in side.items() if colour == 0]
    if 2 * len(K) != len(H) or not _is_subgroup(K):
        return None
    if any(ctx.S.collinear(x, y) for x in points for y in points if x < y):
        return None
    return {"K": len(K), "t1": shape.a}


def _case_e(ctx, rec, H, part, shape) -> dict | None:
    s, t = ctx.order
    sub = fixed_substructure(ctx.S, part)
    if sub is None:
        return None
    try:
        s2, t2 = sub.order
    except WorkbenchError:
        return None
    if min(s2, t2) < 2 or not subgq_constraints(s, t, s2, t2).passed:
        return None
    return {"s": s2, "t": t2}


CENTRALIZER_CASES = [("a", _case_a), ("b", _case_b), ("c", _case_c), ("c'", _case_c_twisted), ("d", _case_d), ("e", _case_e)]


def classify_centralizer(ctx: SingerContext, rec: MultiplierRecord) -> CentralizerShape:
    """
    Decide which shape the centralizer H of a multiplier takes, checking the group-theoretic payload of each
    case: (a) a partial ovoid with |H| <= 1+st, (b) points on one line with |H| dividing 1+s, (c) a grid
    H = Y1 Y2 of line subgroups, (c') a grid (s1, s1) built from a subgroup X1 of order (s1+1)/2 and an element
    g1, (d) a dual grid with an index-2 subgroup of noncollinear points, (e) a thick subquadrangle.

    Args:
    - ctx (SingerContext): The context.
    - rec (MultiplierRecord): The multiplier.

    Returns:
    - CentralizerShape: "Trivial" when H = 1, else the single verified case with its evidence.

    Raises:
    - NoCaseVerifies: If zero or several cases verify.

    """
    H = rec.H.element_set()
    sub = classify_fixed_substructure(ctx.S, rec.point_map)
    if len(H) == 1:
        return CentralizerShape("Trivial", {"H": 1}, str(sub))
    part = sub.partition
    induced = fixed_substructure(ctx.S, part)
    shape = classify_thin(induced) if induced is not None else None
    verified = []
    for case, test in CENTRALIZER_CASES:
        evidence = test(ctx, rec, H, part, shape)
        if evidence is not None:
            verified.append((case, evidence))
    if len(verified) != 1:
        raise NoCaseVerifies("centralizer shape does not match exactly one case",
                             cases=[case for case, _ in verified], substructure=str(sub), H=len(H))
    case, evidence = verified[0]
    return CentralizerShape(case, evidence, str(sub))


def check_centralizer_bound(ctx: SingerContext, rec: MultiplierRecord) -> dict:
    """
    The three-quarter bound |H|^4 < |G|^3, reported as HypothesisNotMet when min(s, t) < 4.

    Raises:
    - VerificationFailed: If the hypothesis holds and the bound fails.

    """
    s, t = ctx.order
    report = centralizer_bound_values(s, t, rec.H.order(), ctx.G.order())
    if report["status"] == "Fail":
        raise VerificationFailed("centralizer exceeds |G|^(3/4)", s=s, t=t, lhs=report["lhs"], rhs=report["rhs"])
    return report


# ======== AGGREGATE =========== #

def verify_record(ctx: SingerContext, rec: MultiplierRecord) -> dict:
    row = rec.to_json()
    del row["point_map"]
    failures = []
    checks = [("fixed_structure", check_fixed_structure), ("small_order", check_small_order),
              ("centralizer", classify_centralizer), ("bound", check_centralizer_bound)]
    for name, check in checks:
        try:
            result = check(ctx, rec)
        except WorkbenchError as e:
            failures.append({"check": name, "ref": REFERENCE_TAGS[name], **e.to_dict()})
            row[name] = "Fail"
            continue
        if name == "centralizer":
            row["case"] = result.case
            row["substructure"] = result.substructure
            row[name] = "Pass"
        elif name in ("small_order", "bound"):
            row[name] = result["status"]
        else:
            row[name] = "Pass"
    row["refs"] = {name: REFERENCE_TAGS[name] for name, _ in checks}
    row["failures"] = failures
    return row


def verify_context(ctx: SingerContext, records: list[MultiplierRecord],
                   config: WorkbenchConfig = default_config) -> list[dict]:
    """
    Run every structural check on every multiplier, in a thread pool.

    Args:
    - ctx (SingerContext): The context.
    - records (list[MultiplierRecord]): The multipliers.
    - config (WorkbenchConfig): Number of workers.

    Returns:
    - list[dict]: One row per multiplier: order, |H|, |X and Delta|, c, case, and the verdict of each check.

    """
    pool = ThreadPool(processes=max(1, min(config["workers"], len(records))))
    args = [[ctx, rec] for rec in records]
    results = pool.starmap_async(verify_record, args)
    rows = results.get()
    pool.close()
    pool.join()
    failed = sum(1 for row in rows if row["failures"])
    _logger.info("%r: %d multipliers verified, %d with failures", ctx, len(rows), failed)
    return rows
