from __future__ import annotations
import logging
from fractions import Fraction
from math import ceil, factorial, gcd, prod
from typing import NamedTuple
from sympy import factorint
from __types__ import FamilyTag
from arithmetic_bounds import power_compare
from exceptions import InvalidGroupSpec, UnsupportedFamily, NonIntegerFormulaValue

_logger = logging.getLogger(__name__)

FAMILIES: tuple[FamilyTag, ...] = ("Alt", "PSL", "PSU", "PSp", "Omega_odd", "POmega_eps",
                                   "Sz", "G2", "TwoF4", "E8", "M11")

# sporadic groups other than M11, and the Tits group, are only listed
UNSUPPORTED = ("M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "Co1", "Co2", "Co3",
               "He", "Ru", "ON", "Ly", "Th", "HN", "Fi22", "Fi23", "Fi24'", "B", "M", "2F4(2)'")

M11_ORDER = 7920
M11_MAX_CENTRALIZER = 48  # centralizer of an involution


class SimpleGroupSpec():
    """
    SimpleGroupSpec

    A nonabelian finite simple group named by family and parameters. PSL(n, q) and PSU(n, q) are indexed by
    the dimension, PSp(2n, q), Omega(2n+1, q) and POmega(2n, q) by the half dimension n.

    Attributes:
    - family (FamilyTag): The family.
    - n (int | None): Degree, dimension or half dimension.
    - q (int | None): Field order p^f.
    - eps (int | None): +1 or -1 for POmega_eps.

    Methods:
    - p / f -> int: Characteristic and degree of the field.
    - to_json() -> dict: JSON record.

    """

    def __init__(self, family: FamilyTag, n: int = None, q: int = None, eps: int = None) -> None:
        """
        Initialize a SimpleGroupSpec instance.

        Raises:
        - UnsupportedFamily: For a family outside FAMILIES.
        - InvalidGroupSpec: When the parameters do not name a simple group of the family.

        """
        if family not in FAMILIES:
            raise UnsupportedFamily(f"unsupported family {family}", family=family)
        self.family = family
        self.n = n
        self.q = q
        self.eps = eps
        self._validate()

    def _fail(self, reason: str) -> None:
        raise InvalidGroupSpec(f"{self}: {reason}", **self.to_json())

    def _validate(self) -> None:
        family, n, q = self.family, self.n, self.q
        if family == "M11":
            return
        if family == "Alt":
            if n is None or n < 5:
                self._fail("needs n >= 5")
            return
        if q is None or q < 2 or len(factorint(q)) != 1:
            self._fail("q must be a prime power")
        if family in ("Sz", "TwoF4"):
            if self.p != 2 or self.f % 2 == 0 or q < 8:
                self._fail("needs q = 2^(2m+1) with m >= 1")
        elif family == "G2":
            if q < 3:
                self._fail("G2(2) is not simple")
        elif family == "PSL":
            if n is None or n < 2 or (n, q) in ((2, 2), (2, 3)):
                self._fail("needs n >= 2, and PSL(2,2), PSL(2,3) are not simple")
        elif family == "PSU":
            if n is None or n < 3 or (n, q) == (3, 2):
                self._fail("needs n >= 3, and PSU(3,2) is not simple")
        elif family == "PSp":
            if n is None or n < 2 or (n, q) == (2, 2):
                self._fail("needs n >= 2, and PSp(4,2) is not simple")
        elif family == "Omega_odd":
            if n is None or n < 3 or q % 2 == 0:
                self._fail("needs n >= 3 and q odd")
        elif family == "POmega_eps":
            if n is None or n < 4 or self.eps not in (1, -1):
                self._fail("needs n >= 4 and eps = +1 or -1")

    @property
    def p(self) -> int:
        return next(iter(factorint(self.q)))

    @property
    def f(self) -> int:
        return next(iter(factorint(self.q).values()))

    def to_json(self) -> dict:
        record = {"family": self.family}
        for key in ("n", "q", "eps"):
            if getattr(self, key) is not None:
                record[key] = getattr(self, key)
        return record

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGroupSpec) and self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash((self.family, self.n, self.q, self.eps))

    def __str__(self) -> str:
        n, q, family = self.n, self.q, self.family
        if family == "M11":
            return "M11"
        if family == "Alt":
            return f"Alt({n})"
        if family in ("Sz", "G2", "E8"):
            return f"{family}({q})"
        if family == "TwoF4":
            return f"2F4({q})"
        if family in ("PSL", "PSU"):
            return f"{family}({n},{q})"
        dimension = "?" if n is None else 2 * n + (family == "Omega_odd")
        if family == "PSp":
            return f"PSp({dimension},{q})"
        if family == "Omega_odd":
            return f"Omega({dimension},{q})"
        return f"POmega{'+' if self.eps == 1 else '-'}({dimension},{q})"

    def __repr__(self) -> str:
        return f"SimpleGroupSpec({self})"


class CentralizerEstimate(NamedTuple):
    """
    The centralizer order of a named witness element, exact or as a lower bound.
    """
    witness: str
    value: int
    exact: bool

    def to_json(self) -> dict:
        return {"witness": self.witness, "value": str(self.value), "exact": self.exact}


def _integral(spec: SimpleGroupSpec, value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerFormulaValue(f"{what} of {spec} is not an integer", value=str(value), **spec.to_json())
    return value.numerator


def _terms(q: int, indices, sign: int = 1) -> int:
    return prod(q ** i - sign ** i for i in indices)


# ======== ORDERS =========== #

def order_of_simple(spec: SimpleGroupSpec) -> int:
    """
    The order of a simple group from its closed formula, in exact integer arithmetic.

    Args:
    - spec (SimpleGroupSpec): The group.

    Returns:
    - int: |T|.

    Raises:
    - UnsupportedFamily: If the family has no order formula.

    """
    n, q, family = spec.n, spec.q, spec.family
    if family == "Alt":
        return factorial(n) // 2
    if family == "M11":
        return M11_ORDER
    if family == "PSL":
        value = Fraction(q ** (n * (n - 1) // 2) * _terms(q, range(2, n + 1)), gcd(n, q - 1))
    elif family == "PSU":
        value = Fraction(q ** (n * (n - 1) // 2) * _terms(q, range(2, n + 1), -1), gcd(n, q + 1))
    elif family == "PSp":
        value = Fraction(q ** (n * n) * _terms(q, range(2, 2 * n + 1, 2)), gcd(2, q - 1))
    elif family == "Omega_odd":
        value = Fraction(q ** (n * n) * _terms(q, range(2, 2 * n + 1, 2)), 2)
    elif family == "POmega_eps":
        value = Fraction(q ** (n * (n - 1)) * (q ** n - spec.eps) * _terms(q, range(2, 2 * n - 1, 2)),
                         gcd(4, q ** n - spec.eps))
    elif family == "Sz":
        value = Fraction(q ** 2 * (q ** 2 + 1) * (q - 1))
    elif family == "G2":
        value = Fraction(q ** 6 * (q ** 6 - 1) * (q ** 2 - 1))
    elif family == "TwoF4":
        value = Fraction(q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1))
    elif family == "E8":
        value = Fraction(q ** 120 * _terms(q, (2, 8, 12, 14, 18, 20, 24, 30)))
    else:
        raise UnsupportedFamily(f"no order formula for {family}", family=family)
    return _integral(spec, value, "order")


def centralizer_formula(spec: SimpleGroupSpec) -> CentralizerEstimate:
    """
    The centralizer order of a witness element with a large centralizer: a 3-cycle in Alt(n), a transvection
    or its analogue in the classical groups, an involution in Sz(q), a long root element in G2(q), 2F4(q) and
    E8(q), and an involution in M11.

    Args:
    - spec (SimpleGroupSpec): The group.

    Returns:
    - CentralizerEstimate: Witness, value and exactness. Lower bounds are rounded up.

    Raises:
    - UnsupportedFamily: If the family has no formula.
    - NonIntegerFormulaValue: If an exact formula evaluates to a non-integer (PSL(2, q) with q odd).

    """
    n, q, family = spec.n, spec.q, spec.family
    exact = True
    if family == "Alt":
        return CentralizerEstimate("3-cycle", 3 * factorial(n - 3) // 2, True)
    if family == "M11":
        return CentralizerEstimate("involution", M11_MAX_CENTRALIZER, True)
    if family == "PSL":
        witness = "transvection, one Jordan block of size 2"
        value = Fraction(q ** (n * (n - 1) // 2) * _terms(q, range(1, n - 1)), gcd(n, q - 1))
    elif family == "PSU":
        witness = "unitary transvection, one Jordan block of size 2"
        value = Fraction(q ** (n * (n - 1) // 2) * _terms(q, range(1, n - 1), -1), gcd(n, q + 1))
    elif family == "PSp":
        witness = "symplectic transvection" if q % 2 else "involution of type b1"
        # g centralizes x -> x + B(x, v) v iff gv = +-v, so the central -1 cancels the factor (2, q-1) of |T|
        value = Fraction(q ** (n * n) * _terms(q, range(2, 2 * n - 1, 2)))
    elif family == "Omega_odd":
        witness = "involution of type t_n" if q % 4 == 1 else "involution of type t_n'"
        sign = -1 if q % 4 == 1 else 1
        value = Fraction(q ** (n * n - n) * (q ** n + sign) * _terms(q, range(2, 2 * n - 1, 2)))
    elif family == "POmega_eps":
        exact = False
        if q % 2:
            witness = "unipotent element, Jordan blocks 2(n-2), 2, 2"
            scale = Fraction(1, 8)
        else:
            witness = "involution of type a2"
            scale = Fraction(1, 4)
        value = scale * q ** (n * n - 2) * (q ** 2 - 1) * _terms(q, range(2, 2 * n - 5, 2))
    elif family == "Sz":
        witness = "involution"
        value = Fraction(q ** 2)
    elif family == "G2":
        witness = "long root element"
        value = Fraction(q ** 5 * q * (q ** 2 - 1), gcd(2, q - 1))
    elif family == "TwoF4":
        witness = "unipotent element centralizing Sz(q)"
        value = Fraction(q ** 10 * order_of_simple(SimpleGroupSpec("Sz", q=q)))
    elif family == "E8":
        exact = False
        witness = "long root element"
        value = Fraction(q ** 120 * _terms(q, (2, 6, 8, 10, 12, 14, 18)), 2)
    else:
        raise UnsupportedFamily(f"no centralizer formula for {family}", family=family)
    if exact:
        return CentralizerEstimate(witness, _integral(spec, value, "centralizer formula"), True)
    return CentralizerEstimate(witness, ceil(value), False)


# ======== THRESHOLDS =========== #

def exceeds(value: int, order: int, exponent: Fraction, strict: bool = True) -> bool:
    """
    Decide value > order^exponent (or >= when not strict) by comparing value^den with order^num.
    """
    sign = power_compare(value, order, exponent.numerator, exponent.denominator)
    return sign > 0 or (not strict and sign == 0)


def threshold_class(subject: SimpleGroupSpec | CentralizerEstimate | int, exponent: Fraction,
                    order: int = None, strict: bool = True) -> bool:
    """
    Decide whether a centralizer order exceeds |T|^e.

    Args:
    - subject (SimpleGroupSpec | CentralizerEstimate | int): A group (its formula witness is used), an estimate,
      or a concrete centralizer order such as a brute-force value.
    - exponent (Fraction): The exponent e.
    - order (int): |T|, required unless subject is a SimpleGroupSpec.
    - strict (bool): Decide > rather than >=.

    Returns:
    - bool: True when the exceedance is certified. A lower bound that falls short certifies nothing and gives
      False.

    """
    if isinstance(subject, SimpleGroupSpec):
        order = order_of_simple(subject)
        subject = centralizer_formula(subject)
    estimate = subject if isinstance(subject, CentralizerEstimate) else CentralizerEstimate("given", subject, True)
    verdict = exceeds(estimate.value, order, Fraction(exponent), strict)
    if not verdict and not estimate.exact:
        _logger.debug("lower bound %d does not certify exceedance of |T|^%s", estimate.value, exponent)
    return verdict


class Claim(NamedTuple):
    """
    A threshold statement: for every group of the family in the grid with n >= n_min, the witness centralizer
    exceeds |T|^exponent.
    """
    family: FamilyTag
    exponent: Fraction
    n_min: int | None
    grid: tuple[SimpleGroupSpec, ...]

    def __str__(self) -> str:
        bound = f" for n >= {self.n_min}" if self.n_min is not None else ""
        return f"{self.family}: |C| > |T|^{self.exponent}{bound}"


def _grid(family: FamilyTag, ns, qs, eps=(None,)) -> list[SimpleGroupSpec]:
    specs = []
    for n in ns:
        for q in qs:
            for e in eps:
                try:
                    specs.append(SimpleGroupSpec(family, n, q, e))
                except InvalidGroupSpec:
                    continue
    return specs


def threshold_claims() -> list[Claim]:
    """
    The threshold statements for the alternating, classical and exceptional families, each with a grid of
    groups at and beyond the stated bound.
    """
    quarter, half, three_quarters = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    claims = [
        Claim("Alt", three_quarters, 16, tuple(_grid("Alt", range(16, 31), (None,)))),
        Claim("Alt", half, 8, tuple(_grid("Alt", range(8, 31), (None,)))),
        Claim("Alt", quarter, 5, tuple(_grid("Alt", range(5, 31), (None,)))),
    ]
    classical = [
        ("PSL", three_quarters, 8, range(8, 13), (2, 3, 4, 5, 7), (None,)),
        ("PSL", half, 4, range(4, 13), (2, 3, 4, 5, 7), (None,)),
        ("PSL", quarter, 2, range(2, 13), (2, 4, 8), (None,)),
        ("PSL", quarter, 3, range(3, 13), (3, 5, 7, 9, 11), (None,)),
        ("PSU", three_quarters, 7, range(7, 13), (2, 3, 4, 5), (None,)),
        ("PSU", half, 4, range(4, 13), (2, 3, 4, 5), (None,)),
        ("PSU", quarter, 3, range(3, 13), (2, 3, 4, 5), (None,)),
        ("PSp", three_quarters, 4, range(4, 9), (2, 3, 4, 5, 7), (None,)),
        ("PSp", half, 2, range(2, 9), (2, 3, 4, 5, 7), (None,)),
        ("Omega_odd", three_quarters, 4, range(4, 9), (3, 5, 7, 9), (None,)),
        ("Omega_odd", half, 3, range(3, 9), (3, 5, 7, 9), (None,)),
        ("POmega_eps", three_quarters, 9, range(9, 12), (2, 3, 4, 5), (1, -1)),
        ("POmega_eps", half, 4, range(4, 12), (2, 3, 4, 5), (1, -1)),
    ]
    for family, exponent, n_min, ns, qs, eps in classical:
        claims.append(Claim(family, exponent, n_min, tuple(_grid(family, ns, qs, eps))))
    claims += [
        Claim("Sz", quarter, None, tuple(_grid("Sz", (None,), (8, 32, 128, 512)))),
        Claim("G2", half, None, tuple(_grid("G2", (None,), (3, 4, 5, 7, 8, 9, 11)))),
        Claim("TwoF4", half, None, tuple(_grid("TwoF4", (None,), (8, 32, 128)))),
        Claim("E8", three_quarters, None, tuple(_grid("E8", (None,), (2, 3, 4, 5)))),
        Claim("M11", quarter, None, (SimpleGroupSpec("M11"),)),
    ]
    return claims


def check_claim(claim: Claim) -> dict:
    """
    Check a threshold statement on every group of its grid.

    Returns:
    - dict: The claim, the number of groups checked, and the groups where exceedance could not be certified.

    """
    failures = []
    for spec in claim.grid:
        if not threshold_class(spec, claim.exponent):
            failures.append(str(spec))
    if failures:
        _logger.warning("%s: not certified for %s", claim, ", ".join(failures))
    return {"claim": str(claim), "checked": len(claim.grid), "failures": failures, "passed": not failures}
