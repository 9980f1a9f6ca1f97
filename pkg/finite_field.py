from __future__ import annotations
import itertools
import logging
from typing import Sequence
import numpy
from exceptions import UnsupportedField, ConstructionFailed

_logger = logging.getLogger(__name__)

# q -> (p, coefficients of the defining polynomial, lowest degree first)
FIELD_POLYNOMIALS = {
    2: (2, [0, 1]),
    3: (3, [0, 1]),
    4: (2, [1, 1, 1]),  # x^2 + x + 1
    5: (5, [0, 1]),
    7: (7, [0, 1]),
    8: (2, [1, 1, 0, 1]),  # x^3 + x + 1
    9: (3, [2, 2, 1]),  # x^2 + 2x + 2
    11: (11, [0, 1]),
}


def to_digits(x: numpy.ndarray, base: int, width: int) -> numpy.ndarray:
    x = numpy.array(x, dtype=numpy.int64)
    digits = numpy.zeros(x.shape + (width,), dtype=numpy.int64)
    for i in range(width):
        digits[..., i], x = x % base, x // base
    return digits


def from_digits(digits: numpy.ndarray, base: int) -> numpy.ndarray:
    width = digits.shape[-1]
    return (numpy.mod(digits, base) * base ** numpy.arange(width, dtype=numpy.int64)).sum(axis=-1)


class FiniteField():
    """
    FiniteField

    The field GF(q) for q in {2, 3, 4, 5, 7, 8, 9, 11}. Elements are the integers 0..q-1; for q = p^k the
    integer with base-p digits (c_0, ..., c_{k-1}) stands for c_0 + c_1 x + ... + c_{k-1} x^{k-1} modulo the
    defining polynomial (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+2x+2 for GF(9)). The tables are checked
    against the field axioms when the field is built.

    Attributes:
    - q (int): Field order.
    - p (int): Characteristic.
    - k (int): Degree over the prime field.
    - add_table, mul_table (list[list[int]]): Operation tables.
    - neg_table, inv_table (list[int]): Additive and multiplicative inverses (inv_table[0] is 0).

    Methods:
    - add, sub, mul, neg, inv: Field operations on element integers.
    - verify_axioms() -> None: Exhaustive check of the field axioms.

    """

    def __init__(self, q: int) -> None:
        if q not in FIELD_POLYNOMIALS:
            raise UnsupportedField(f"GF({q}) is not supported", q=q, supported=sorted(FIELD_POLYNOMIALS))
        p, poly = FIELD_POLYNOMIALS[q]
        self.q = q
        self.p = p
        self.k = len(poly) - 1
        self.polynomial = poly

        digits = to_digits(numpy.arange(q), p, self.k)
        self.add_table = from_digits(digits[:, None, :] + digits[None, :, :], p).tolist()

        mul = numpy.zeros((q, q), dtype=numpy.int64)
        for a in range(q):
            for b in range(q):
                mul[a, b] = self._reduce(numpy.convolve(digits[a], digits[b]))
        self.mul_table = mul.tolist()

        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [0] + [self.mul_table[a].index(1) for a in range(1, q)]
        self.verify_axioms()

    def _reduce(self, coefficients: numpy.ndarray) -> int:
        coefficients = [int(c) % self.p for c in coefficients]
        # leading coefficient of the defining polynomial is 1
        for degree in range(len(coefficients) - 1, self.k - 1, -1):
            c = coefficients[degree]
            if c:
                for i, m in enumerate(self.polynomial):
                    coefficients[degree - self.k + i] = (coefficients[degree - self.k + i] - c * m) % self.p
        return int(from_digits(numpy.array(coefficients[:self.k] + [0] * (self.k - len(coefficients))), self.p))

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def verify_axioms(self) -> None:
        q, add, mul = self.q, self.add_table, self.mul_table
        for a, b in itertools.product(range(q), repeat=2):
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise ConstructionFailed(f"GF({q}) is not commutative", a=a, b=b)
        for a, b, c in itertools.product(range(q), repeat=3):
            if add[add[a][b]][c] != add[a][add[b][c]] or mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ConstructionFailed(f"GF({q}) is not associative", a=a, b=b, c=c)
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise ConstructionFailed(f"GF({q}) is not distributive", a=a, b=b, c=c)
        for a in range(q):
            if add[a][0] != a or mul[a][1] != a or add[a][self.neg_table[a]] != 0:
                raise ConstructionFailed(f"GF({q}) identities fail", a=a)
            if a and mul[a][self.inv_table[a]] != 1:
                raise ConstructionFailed(f"GF({q}) has a non-invertible element", a=a)

    # ======== VECTORS =========== #

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        total = 0
        for a, b in zip(u, v):
            total = self.add_table[total][self.mul_table[a][b]]
        return total

    def vec_add(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.add_table[a][b] for a, b in zip(u, v))

    def vec_scale(self, c: int, u: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.mul_table[c][a] for a in u)

    def mat_vec(self, matrix: Sequence[Sequence[int]], u: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.dot(row, u) for row in matrix)

    def __repr__(self) -> str:
        return f"GF({self.q})"


class ProjectivePointSet():
    """
    ProjectivePointSet

    The points of PG(d, q) as normalized coordinate vectors (first nonzero coordinate 1), listed in
    lexicographic order; the position in the list is the point index.

    Attributes:
    - field (FiniteField): The coordinate field.
    - dimension (int): Projective dimension d.
    - points (list[tuple[int, ...]]): Normalized vectors.

    Methods:
    - normalize(v) -> tuple[int, ...]: Normalized representative of a nonzero vector.
    - index_of(v) -> int: Index of the point spanned by a nonzero vector.
    - line_points(u, v) -> list[int]: Indices of the q+1 points of the line spanned by two points.

    """

    def __init__(self, field: FiniteField, dimension: int) -> None:
        self.field = field
        self.dimension = dimension
        self.points: list[tuple[int, ...]] = [
            v for v in itertools.product(range(field.q), repeat=dimension + 1)
            if any(v) and v[next(i for i, c in enumerate(v) if c)] == 1]
        self._index = {v: i for i, v in enumerate(self.points)}
        expected = (field.q ** (dimension + 1) - 1) // (field.q - 1)
        if len(self.points) != expected:
            raise ConstructionFailed("wrong number of projective points", count=len(self.points), expected=expected)

    def __len__(self) -> int:
        return len(self.points)

    def normalize(self, v: Sequence[int]) -> tuple[int, ...]:
        lead = next((c for c in v if c), 0)
        if lead == 0:
            raise ValueError("the zero vector is not a projective point")
        return self.field.vec_scale(self.field.inv(lead), v)

    def index_of(self, v: Sequence[int]) -> int:
        return self._index[self.normalize(v)]

    def line_points(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        field = self.field
        points = {self.index_of(v)}
        for b in range(field.q):
            points.add(self.index_of(field.vec_add(u, field.vec_scale(b, v))))
        return sorted(points)
