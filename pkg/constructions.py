from __future__ import annotations
import logging
from itertools import combinations
from typing import Callable, Sequence
from __types__ import WorkbenchConfig
from default_config import default_config
from finite_field import FiniteField, ProjectivePointSet
from incidence import IncidenceStructure, validate_gq, span
from permutation import Permutation
from perm_group import PermGroup
from geo_aut import is_automorphism, line_permutation, automorphism_group
from exceptions import (WorkbenchError, UnsupportedField, InvalidStructure, NotSquareOrder, NotRegularPoint,
                        ValidationFailed, ConstructionFailed)

_logger = logging.getLogger(__name__)

Vector = Sequence[int]


# ======== FORMS =========== #

def symplectic_form(field: FiniteField) -> Callable[[Vector, Vector], int]:
    """
    The alternating form B(x, y) = x0 y1 - x1 y0 + x2 y3 - x3 y2 on GF(q)^4.
    """
    mul, sub, add = field.mul, field.sub, field.add

    def form(x: Vector, y: Vector) -> int:
        return add(sub(mul(x[0], y[1]), mul(x[1], y[0])), sub(mul(x[2], y[3]), mul(x[3], y[2])))

    return form


def elliptic_constant(field: FiniteField) -> int:
    """
    The least c such that x^2 + x + c has no root in the field.
    """
    for c in range(field.q):
        if all(field.add(field.add(field.mul(x, x), x), c) for x in range(field.q)):
            return c
    raise ConstructionFailed(f"no irreducible x^2+x+c over GF({field.q})")


def elliptic_form(field: FiniteField) -> Callable[[Vector], int]:
    """
    The quadratic form Q(x) = x0 x1 + x2 x3 + x4^2 + x4 x5 + c x5^2 of minus type on GF(q)^6.
    """
    mul, add = field.mul, field.add
    c = elliptic_constant(field)

    def form(x: Vector) -> int:
        anisotropic = add(add(mul(x[4], x[4]), mul(x[4], x[5])), mul(c, mul(x[5], x[5])))
        return add(add(mul(x[0], x[1]), mul(x[2], x[3])), anisotropic)

    return form


def polar_form(field: FiniteField, quadratic: Callable[[Vector], int]) -> Callable[[Vector, Vector], int]:
    def form(x: Vector, y: Vector) -> int:
        return field.sub(field.sub(quadratic(field.vec_add(x, y)), quadratic(x)), quadratic(y))

    return form


def _isotropic_lines(space: ProjectivePointSet, points: list[int],
                     orthogonal: Callable[[Vector, Vector], int]) -> set[tuple[int, ...]]:
    lines = set()
    for i, j in combinations(points, 2):
        u, v = space.points[i], space.points[j]
        if orthogonal(u, v) == 0:
            lines.add(tuple(space.line_points(u, v)))
    return lines


def _checked(S: IncidenceStructure, expected: tuple[int, int]) -> IncidenceStructure:
    try:
        order = validate_gq(S)
    except WorkbenchError as e:
        raise ValidationFailed(f"{S.name} is not a generalized quadrangle: {e}", cause=e.to_dict())
    if order != expected:
        raise ValidationFailed(f"{S.name} has order {tuple(order)}, expected {expected}",
                               order=list(order), expected=list(expected))
    return S


# ======== CLASSICAL QUADRANGLES =========== #

def construct_w(q: int) -> IncidenceStructure:
    """
    Build the symplectic quadrangle W(q): all points of PG(3,q), in ProjectivePointSet order, and the totally
    isotropic lines of B(x, y) = x0 y1 - x1 y0 + x2 y3 - x3 y2.

    Args:
    - q (int): Field order, one of 2, 3, 4.

    Returns:
    - IncidenceStructure: A GQ of order (q, q).

    Raises:
    - UnsupportedField: For any other q.

    """
    if q not in (2, 3, 4):
        raise UnsupportedField(f"W({q}) is not supported", q=q, supported=[2, 3, 4])
    field = FiniteField(q)
    space = ProjectivePointSet(field, 3)
    lines = _isotropic_lines(space, list(range(len(space))), symplectic_form(field))
    S = IncidenceStructure(len(space), lines, f"W({q})")
    return _checked(S, (q, q))


def _elliptic_quadric(q: int) -> tuple[ProjectivePointSet, list[int], Callable[[Vector, Vector], int]]:
    if q not in (2, 3):
        raise UnsupportedField(f"Q-(5,{q}) is not supported", q=q, supported=[2, 3])
    field = FiniteField(q)
    space = ProjectivePointSet(field, 5)
    quadratic = elliptic_form(field)
    singular = [i for i, v in enumerate(space.points) if quadratic(v) == 0]
    return space, singular, polar_form(field, quadratic)


def construct_elliptic_q5(q: int) -> IncidenceStructure:
    """
    Build the elliptic quadrangle Q-(5,q) on the singular points of Q(x) = x0 x1 + x2 x3 + x4^2 + x4 x5 + c x5^2,
    with c the least constant making x^2 + x + c irreducible. Lines are the projective lines spanned by two
    orthogonal singular points.

    Args:
    - q (int): Field order, 2 or 3.

    Returns:
    - IncidenceStructure: A GQ of order (q, q^2).

    Raises:
    - UnsupportedField: For any other q.

    """
    space, singular, polar = _elliptic_quadric(q)
    index = {p: i for i, p in enumerate(singular)}
    lines = [[index[p] for p in line] for line in _isotropic_lines(space, singular, polar)]
    S = IncidenceStructure(len(singular), lines, f"Q-(5,{q})")
    return _checked(S, (q, q * q))


def has_singular_plane(q: int) -> bool:
    """
    Search every singular line of the elliptic quadric for a singular point orthogonal to it and off it; such a
    point would span a totally singular plane.
    """
    space, singular, polar = _elliptic_quadric(q)
    for line in _isotropic_lines(space, singular, polar):
        u, v = space.points[line[0]], space.points[line[1]]
        for z in singular:
            if z in line:
                continue
            w = space.points[z]
            if polar(w, u) == 0 and polar(w, v) == 0:
                return True
    return False


# ======== GRIDS =========== #

def construct_grid(s1: int, s2: int) -> IncidenceStructure:
    """
    The grid with points x_{i,j} (index i*(s2+1)+j), lines l_k = {x_{k,j}} for 0 <= k <= s1 and
    m_k = {x_{i,k}} for 0 <= k <= s2.
    """
    if s1 < 1 or s2 < 1:
        raise InvalidStructure("grid parameters must be at least 1", s1=s1, s2=s2)
    width = s2 + 1
    rows = [[i * width + j for j in range(width)] for i in range(s1 + 1)]
    columns = [[i * width + k for i in range(s1 + 1)] for k in range(width)]
    return IncidenceStructure((s1 + 1) * width, rows + columns, f"grid({s1},{s2})")


def construct_dual_grid(t1: int, t2: int) -> IncidenceStructure:
    dual = construct_grid(t1, t2).dual()
    dual.name = f"dualgrid({t1},{t2})"
    return dual


# ======== PAYNE DERIVATION =========== #

def is_regular_point(S: IncidenceStructure, p: int) -> bool:
    """
    Decide whether p is regular: every span {p, x}^perp^perp with x not collinear with p has t+1 points.

    Raises:
    - NotSquareOrder: If S does not have order (s, s).

    """
    s, t = S.order
    if s != t:
        raise NotSquareOrder("regularity is defined here for quadrangles of order (s,s)", s=s, t=t)
    return all(len(span(S, (p, x))) == t + 1 for x in range(S.point_count) if not S.collinear(p, x))


def derived_points(S: IncidenceStructure, p: int) -> list[int]:
    return [x for x in range(S.point_count) if not S.collinear(p, x)]


def payne_derive(S: IncidenceStructure, p: int) -> IncidenceStructure:
    """
    Build the Payne derived quadrangle of S at a regular point p. Its points are the points of S not collinear
    with p, renumbered in increasing order; its lines are the lines of S not through p with their point
    collinear with p removed, and the spans {p, x}^perp^perp with p removed.

    Args:
    - S (IncidenceStructure): A GQ of order (q, q).
    - p (int): A regular point.

    Returns:
    - IncidenceStructure: A GQ of order (q-1, q+1).

    Raises:
    - NotRegularPoint: If p is not regular.
    - ValidationFailed: If the result is not a GQ of order (q-1, q+1).

    """
    if not is_regular_point(S, p):
        raise NotRegularPoint(f"point {p} of {S.name} is not regular", point=p)
    q = S.order.s
    points = derived_points(S, p)
    index = {x: i for i, x in enumerate(points)}

    lines = set()
    for line in S.lines:
        if p in line:
            continue
        lines.add(tuple(index[x] for x in line if x in index))
    for x in points:
        lines.add(tuple(sorted(index[y] for y in span(S, (p, x)) if y != p)))

    D = IncidenceStructure(len(points), lines, f"payne({S.name})" if S.name else "payne")
    _logger.debug("derived %r at point %d", D, p)
    return _checked(D, (q - 1, q + 1))


# ======== COLLINEATIONS =========== #

def matrix_permutation(space: ProjectivePointSet, matrix: Sequence[Sequence[int]]) -> Permutation:
    field = space.field
    return Permutation(space.index_of(field.mat_vec(matrix, v)) for v in space.points)


def symplectic_transvection(q: int, point: int, lam: int = 1) -> Permutation:
    """
    The transvection x -> x + lam B(x, v) v of W(q) with center the point of index `point`, as a permutation of
    the points of construct_w(q).
    """
    field = FiniteField(q)
    space = ProjectivePointSet(field, 3)
    form = symplectic_form(field)
    v = space.points[point]
    return Permutation(space.index_of(field.vec_add(x, field.vec_scale(field.mul(lam, form(x, v)), v)))
                       for x in space.points)


def elation_matrix(field: FiniteField, a: int, b: int, c: int) -> list[list[int]]:
    """
    The symplectic matrix x -> (x0 + a x2, x1 + b x2, x2, x3 + b x0 - a x1 + c x2). It fixes the point <e3>,
    every line through it, and acts regularly on the points with x2 != 0 as (a, b, c) ranges over GF(q)^3.
    """
    return [[1, 0, a, 0],
            [0, 1, b, 0],
            [0, 0, 1, 0],
            [b, field.neg(a), c, 1]]


ELATION_CENTER = 0  # <(0,0,0,1)> is the first point of PG(3,q)


def _elation_conditions(S: IncidenceStructure, p: int, g: Permutation) -> bool:
    if g.images[p] != p:
        return False
    lines = line_permutation(S, g)
    return all(lines.images[i] == i for i in S.lines_through(p))


def _restrict_to_derived(S: IncidenceStructure, p: int, generators: list[Permutation], q: int,
                         config: WorkbenchConfig) -> PermGroup:
    points = derived_points(S, p)
    index = {x: i for i, x in enumerate(points)}
    try:
        restricted = [Permutation(index[g.images[x]] for x in points) for g in generators]
    except KeyError:
        raise ConstructionFailed("a generator does not preserve the derived points")
    D = payne_derive(S, p)
    E = PermGroup(restricted, len(points), config)
    if not all(is_automorphism(D, g) for g in restricted):
        raise ConstructionFailed("a generator is not an automorphism of the derived quadrangle")
    if E.order() != q ** 3 or not E.is_regular():
        raise ConstructionFailed("elation group is not regular of order q^3", order=E.order(), q=q)
    return E


def elation_singer_from_matrices(q: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    Elation group about <e3> from the unipotent matrices of elation_matrix, with (a, b, c) running over the
    additive basis of GF(q), restricted to the points of payne_derive(W(q), 0).
    """
    S = construct_w(q)
    field = FiniteField(q)
    space = ProjectivePointSet(field, 3)
    basis = [field.p ** i for i in range(field.k)]
    generators = []
    for e in basis:
        for a, b, c in ((e, 0, 0), (0, e, 0), (0, 0, e)):
            g = matrix_permutation(space, elation_matrix(field, a, b, c))
            if not is_automorphism(S, g) or not _elation_conditions(S, ELATION_CENTER, g):
                raise ConstructionFailed("matrix is not an elation of W(q)", q=q, a=a, b=b, c=c)
            generators.append(g)
    return _restrict_to_derived(S, ELATION_CENTER, generators, q, config)


def elation_singer_from_stabilizer(q: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    Elation group about <e3> found inside the stabilizer of the point in Aut(W(q)): the elements fixing every
    line through the point and no point off its perp, together with the identity.
    """
    S = construct_w(q)
    p = ELATION_CENTER
    stabilizer = automorphism_group(S, [p], config)
    off_perp = derived_points(S, p)
    elations = [g for g in stabilizer.enumerate()
                if _elation_conditions(S, p, g) and (g.is_identity() or all(g.images[x] != x for x in off_perp))]
    if len(elations) != q ** 3:
        raise ConstructionFailed("wrong number of elations in the point stabilizer", found=len(elations), q=q)
    group = PermGroup.from_elements(elations, S.point_count, config)
    return _restrict_to_derived(S, p, group.generators, q, config)


def construct_elation_singer(q: int, config: WorkbenchConfig = default_config) -> PermGroup:
    """
    Return a Singer group of order q^3 of the Payne derived quadrangle of W(q) at the point <e3>.

    The unipotent matrix route runs first; if it fails verification the elation group is recovered from the
    point stabilizer in Aut(W(q)).

    Args:
    - q (int): Field order, 2, 3 or 4.
    - config (WorkbenchConfig): Caps.

    Returns:
    - PermGroup: A group regular on the q^3 points of payne_derive(construct_w(q), 0).

    Raises:
    - ConstructionFailed: If both routes fail.

    """
    try:
        return elation_singer_from_matrices(q, config)
    except ConstructionFailed as e:
        _logger.warning("matrix elation route failed for q=%d (%s), searching the point stabilizer", q, e)
        return elation_singer_from_stabilizer(q, config)

