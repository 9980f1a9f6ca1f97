from __future__ import annotations
import logging
from math import gcd
from typing import Callable
import numpy
from sympy import integer_nthroot
from __types__ import WorkbenchConfig
from default_config import default_config

_logger = logging.getLogger(__name__)


class FeasibilityReport():
    """
    FeasibilityReport

    Outcome of a set of arithmetic constraints on a parameter pair: one boolean per constraint and the exact
    integers the booleans were decided from.

    Attributes:
    - params (dict[str, int]): The parameters.
    - checks (dict[str, bool]): Constraint name to verdict.
    - witness (dict[str, int | list[int]]): Both sides of every comparison and every divisor/dividend pair.

    Methods:
    - passed -> bool: All constraints hold.
    - to_json() -> dict: JSON record.

    """

    def __init__(self, params: dict[str, int], checks: dict[str, bool], witness: dict) -> None:
        self.params = params
        self.checks = checks
        self.witness = witness

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"params": self.params, "checks": self.checks, "witness": self.witness, "passed": self.passed}

    def __repr__(self) -> str:
        failed = [name for name, ok in self.checks.items() if not ok]
        return f"FeasibilityReport({self.params}, {'passed' if not failed else 'failed: ' + ', '.join(failed)})"


def power_compare(a: int, b: int, num: int, den: int) -> int:
    """
    Compare a with b^(num/den) exactly: the sign of a^den - b^num.
    """
    left, right = a ** den, b ** num
    return (left > right) - (left < right)


# ======== PARAMETER CONSTRAINTS =========== #

def feasible_parameters(s: int, t: int) -> FeasibilityReport:
    """
    Point and line counts of a GQ of order (s, t), Higman's inequality (for s, t > 1) and the divisibility
    condition s+t | st(s+1)(t+1).
    """
    points = (s + 1) * (s * t + 1)
    lines = (t + 1) * (s * t + 1)
    dividend = s * t * (s + 1) * (t + 1)
    thick = s > 1 and t > 1
    checks = {
        "higman": not thick or (s <= t * t and t <= s * s),
        "divisibility": dividend % (s + t) == 0,
    }
    witness = {"points": points, "lines": lines, "s_vs_t2": [s, t * t], "t_vs_s2": [t, s * s],
               "divisor": s + t, "dividend": dividend}
    return FeasibilityReport({"s": s, "t": t}, checks, witness)


def subgq_constraints(s: int, t: int, s2: int, t2: int) -> FeasibilityReport:
    """
    A subquadrangle of order (s2, t2) of a GQ of order (s, t) has s = s2 or s2 t2 <= s, and t = t2 or s2 t2 <= t.
    """
    checks = {"points": s == s2 or s2 * t2 <= s, "lines": t == t2 or s2 * t2 <= t}
    return FeasibilityReport({"s": s, "t": t, "s_sub": s2, "t_sub": t2}, checks, {"product": s2 * t2})


def hs_filter(s: int, t: int) -> FeasibilityReport:
    """
    The arithmetic conditions on a GQ of order (s, t) with a Singer group acting with the HS property:
    s+t | 1+st, s+2 <= t <= s^2-s and gcd(s, t) = 1. The implied s != t and t != s^2 are reported as witnesses.
    """
    checks = {
        "divisibility": (1 + s * t) % (s + t) == 0,
        "range": s + 2 <= t <= s * s - s,
        "coprime": gcd(s, t) == 1,
    }
    witness = {"divisor": s + t, "dividend": 1 + s * t, "range": [s + 2, t, s * s - s], "gcd": gcd(s, t),
               "s_ne_t": s != t, "t_ne_s2": t != s * s}
    return FeasibilityReport({"s": s, "t": t}, checks, witness)


def hs_final_sweep(max_value: int = None, factors: tuple[int, ...] = (2, 3),
                   config: WorkbenchConfig = default_config) -> dict:
    """
    Search every pair 1 <= s, t <= max_value for solutions of s+t = (b-1)(1+st), b in `factors`.

    Thick solutions (s, t >= 2) would contradict the final counting step; the thin solutions (1, k) and (k, 1)
    are the excluded boundary. The sweep runs on int64 arrays, far below overflow at these sizes.

    Args:
    - max_value (int): Upper bound of s and t (default `hs_max`).
    - factors (tuple[int, ...]): Values of b.
    - config (WorkbenchConfig): Defaults.

    Returns:
    - dict: Per b, the thick solutions, the number of thin solutions and the least thick gap 1+st-(s+t).

    """
    max_value = config["hs_max"] if max_value is None else max_value
    values = numpy.arange(1, max_value + 1, dtype=numpy.int64)
    s, t = values[:, None], values[None, :]
    thick = (s >= 2) & (t >= 2)
    report = {"max": max_value, "factors": {}}
    for b in factors:
        solutions = (s + t) == (b - 1) * (1 + s * t)
        thick_solutions = [[int(values[i]), int(values[j])] for i, j in numpy.argwhere(solutions & thick)]
        report["factors"][str(b)] = {
            "thick_solutions": thick_solutions,
            "thin_solutions": int((solutions & ~thick).sum()),
        }
    gap = (1 + s * t) - (s + t)
    report["min_thick_gap"] = int(gap[thick].min()) if max_value >= 2 else None
    report["passed"] = all(not entry["thick_solutions"] for entry in report["factors"].values())
    _logger.info("final sweep up to %d: %s", max_value, "no thick solutions" if report["passed"] else "FAILED")
    return report


# ======== CENTRALIZER BOUND =========== #

def cube_root_upper(value: int, denominator: int) -> int:
    """
    The least N with N^3 >= value * denominator^3, so that N / denominator bounds the real cube root from above.
    """
    root, exact = integer_nthroot(value * denominator ** 3, 3)
    return int(root) if exact else int(root) + 1


def small_subquadrangle_bound(s: int, denominator: int) -> bool:
    """
    Certify (1 + s^(2/3))(1 + s) <= ((1+s)(1+s^2))^(3/4) with a rational upper bound N/D of s^(2/3):
    (D + N)^4 (1 + s) <= D^4 (1 + s^2)^3.
    """
    N = cube_root_upper(s * s, denominator)
    return (denominator + N) ** 4 * (1 + s) <= denominator ** 4 * (1 + s * s) ** 3


def endgame_cases(s: int, t: int) -> list[dict]:
    """
    The subquadrangles of order (s, t') with t' >= 2 and st' <= t allowed by |H| dividing |G|: 1+st' divides
    1+st with quotient m > 1. Each entry records m mod s, whether 1+st >= (1+st')(1+s), and whether
    |H|^4 < |G|^3 for |H| = (1+s)(1+st').
    """
    group = (1 + s) * (1 + s * t)
    cases = []
    for t2 in range(2, t // s + 1):
        sub = 1 + s * t2
        if (1 + s * t) % sub:
            continue
        m = (1 + s * t) // sub
        if m <= 1:
            continue
        H = (1 + s) * sub
        cases.append({"t_sub": t2, "m": m, "m_mod_s": m % s, "product_bound": 1 + s * t >= sub * (1 + s),
                      "three_quarter_bound": H ** 4 < group ** 3})
    return cases


def _inequalities(config: WorkbenchConfig) -> list[tuple[str, Callable[[int, int], bool], Callable[[int, int], bool]]]:
    # (name, domain, inequality); |G| = (1+s)(1+st)
    D = config["root_precision"]
    return [
        ("power5", lambda s, t: s <= t, lambda s, t: (1 + s) ** 5 < (1 + s * t) ** 3),
        ("t_below_s", lambda s, t: t < s, lambda s, t: (1 + t) ** 4 * (1 + s) < (1 + s * t) ** 3),
        ("t_le_s_le_t2", lambda s, t: t <= s <= t * t, lambda s, t: (1 + s) * (1 + t) ** 4 < (1 + s * t) ** 3),
        ("case_a", lambda s, t: True, lambda s, t: 1 + s * t < (1 + s) ** 3),
        ("case_b", lambda s, t: True, lambda s, t: (1 + s) ** 4 < (1 + s) ** 3 * (1 + s * t) ** 3),
        # a fixed grid of order (s, s) contains a subquadrangle of order (s, 1)
        ("case_c", lambda s, t: subgq_constraints(s, t, s, 1).passed,
         lambda s, t: (1 + s) ** 8 < (1 + s) ** 3 * (1 + s * t) ** 3),
        ("case_d", lambda s, t: True,
         lambda s, t: (2 * (1 + min(s, t))) ** 4 < ((1 + s) * (1 + s * t)) ** 3),
        ("case_e_small", lambda s, t: s < t, lambda s, t: small_subquadrangle_bound(s, D)),
        ("case_e_t_equal", lambda s, t: t <= s <= t * t,
         lambda s, t: (t + s) ** 3 * (1 + s) <= t ** 3 * (1 + s * t) ** 2),
        ("case_e_endgame", lambda s, t: True,
         lambda s, t: all(c["m_mod_s"] == 1 % s and c["product_bound"] and c["three_quarter_bound"]
                          for c in endgame_cases(s, t))),
    ]


def centralizer_bound_sweep(low: int = 4, high: int = None, config: WorkbenchConfig = default_config) -> dict:
    """
    Check every inequality of the three-quarter bound on centralizers of multipliers over the Higman-feasible
    pairs low <= s, t <= high, by exact integer powers.

    The stronger square-root bound claimed for dual grid fixed substructures, (2(1+min(s,t)))^2 < |G|, is
    evaluated too; its exceptions are listed separately and do not fail the sweep, since the three-quarter
    bound still holds there.

    Args:
    - low (int): Least s and t, at least 4.
    - high (int): Largest s and t (default `sweep_max`).
    - config (WorkbenchConfig): Defaults and the cube-root denominator.

    Returns:
    - dict: Per inequality the number of pairs checked and the failing pairs, the pair count, the
      square-root exceptions and a global `passed` flag.

    """
    high = config["sweep_max"] if high is None else high
    inequalities = _inequalities(config)
    results = {name: {"checked": 0, "failures": []} for name, _, _ in inequalities}
    sqrt_exceptions = []
    pairs = 0
    endgame_patterns = 0
    for s in range(low, high + 1):
        for t in range(low, high + 1):
            if s > t * t or t > s * s:
                continue
            pairs += 1
            for name, domain, holds in inequalities:
                if not domain(s, t):
                    continue
                results[name]["checked"] += 1
                if not holds(s, t):
                    results[name]["failures"].append([s, t])
            endgame_patterns += len(endgame_cases(s, t))
            if (2 * (1 + min(s, t))) ** 2 >= (1 + s) * (1 + s * t):
                sqrt_exceptions.append([s, t])
    passed = all(not r["failures"] for r in results.values())
    _logger.info("centralizer bound sweep %d..%d: %d pairs, %d endgame patterns, %s",
                 low, high, pairs, endgame_patterns, "all hold" if passed else "FAILURES")
    return {"range": [low, high], "pairs": pairs, "inequalities": results, "endgame_patterns": endgame_patterns,
            "sqrt_bound_exceptions": sqrt_exceptions, "passed": passed}


def centralizer_bound_values(s: int, t: int, h_order: int, g_order: int) -> dict:
    """
    The three-quarter bound |H|^4 < |G|^3 for a centralizer of order h_order in a Singer group of order g_order,
    applicable when min(s, t) >= 4.
    """
    if min(s, t) < 4:
        return {"status": "HypothesisNotMet", "s": s, "t": t}
    holds = h_order ** 4 < g_order ** 3
    return {"status": "Pass" if holds else "Fail", "lhs": h_order ** 4, "rhs": g_order ** 3}


def sweep_margins(low: int = 4, high: int = None, config: WorkbenchConfig = default_config) -> dict:
    """
    Decimal digit margins, digits(right side) - digits(left side), of the main inequalities along t = s.
    """
    high = config["sweep_max"] if high is None else high
    sides: dict[str, Callable[[int], tuple[int, int]]] = {
        "power5": lambda s: ((1 + s) ** 5, (1 + s * s) ** 3),
        "case_e_t_equal": lambda s: ((2 * s) ** 3 * (1 + s), s ** 3 * (1 + s * s) ** 2),
        "case_a": lambda s: (1 + s * s, (1 + s) ** 3),
        "case_d": lambda s: ((2 * (1 + s)) ** 4, ((1 + s) * (1 + s * s)) ** 3),
    }
    return {name: [(s, len(str(f(s)[1])) - len(str(f(s)[0]))) for s in range(low, high + 1)]
            for name, f in sides.items()}


def feasible_pairs(max_value: int) -> list[tuple[int, int]]:
    """
    Thick pairs 2 <= s, t <= max_value passing Higman's inequality and the divisibility condition.
    """
    return [(s, t) for s in range(2, max_value + 1) for t in range(2, max_value + 1)
            if feasible_parameters(s, t).passed]
