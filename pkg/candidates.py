from __future__ import annotations
import logging
from fractions import Fraction
from typing import Iterable
from __types__ import DiagonalMode
from simple_groups import SimpleGroupSpec, centralizer_formula, order_of_simple, exceeds
from manifest import REFERENCE_TAGS
from exceptions import NonIntegerFormulaValue, UnsupportedFamily

_logger = logging.getLogger(__name__)

# T is excluded when some nonidentity x has |C_T(x)| >= |T|^(1-r/4); SD with k >= 3 uses the 3/4 bound
MODE_EXPONENTS: dict[DiagonalMode, Fraction] = {
    "SD_k>=3": Fraction(3, 4),
    "CD_r2": Fraction(1, 2),
    "CD_r3": Fraction(1, 4),
}

# short mode names used in report references
MODE_TAGS: dict[DiagonalMode, str] = {
    "SD_k>=3": "SD",
    "CD_r2": "CD_r2",
    "CD_r3": "CD_r3",
}


def _specs(family, ns=(None,), qs=(None,), eps=(None,)) -> list[SimpleGroupSpec]:
    return [SimpleGroupSpec(family, n, q, e) for n in ns for q in qs for e in eps]


DEFAULT_GRIDS: dict[str, list[SimpleGroupSpec]] = {
    "Alt": _specs("Alt", range(5, 21)),
    "PSL": _specs("PSL", range(3, 11), (2,)) + _specs("PSL", (2,), (4, 8)),
    "PSU": _specs("PSU", range(4, 8), (2,)) + _specs("PSU", range(3, 8), (3,)),
    "PSp": _specs("PSp", range(2, 5), (3,)) + _specs("PSp", range(3, 5), (2,)),
    "Omega_odd": _specs("Omega_odd", range(3, 6), (3,)),
    "POmega_eps": _specs("POmega_eps", range(4, 11), (2,), (1, -1)),
    "Sz": _specs("Sz", qs=(8, 32)),
    "G2": _specs("G2", qs=(3, 4, 5)),
    "TwoF4": _specs("TwoF4", qs=(8,)),
    "E8": _specs("E8", qs=(2, 3)),
    "M11": _specs("M11"),
}


def is_excluded(spec: SimpleGroupSpec, mode: DiagonalMode) -> bool | None:
    """
    Decide whether a witness centralizer reaches |T|^(1-r/4) in the given mode.

    Returns:
    - bool | None: True when excluded, False when the witness stays below the bound, None when the formula
      gives no integral witness (the group then survives undecided).

    Raises:
    - UnsupportedFamily: For an unknown mode or family.

    """
    if mode not in MODE_EXPONENTS:
        raise UnsupportedFamily(f"unknown mode {mode}", mode=mode)
    try:
        estimate = centralizer_formula(spec)
    except NonIntegerFormulaValue:
        _logger.info("%s: no integral witness, kept", spec)
        return None
    reached = exceeds(estimate.value, order_of_simple(spec), MODE_EXPONENTS[mode], strict=False)
    if not reached and not estimate.exact:
        # a short lower bound proves nothing either way
        return None
    return reached


def candidate_filter(mode: DiagonalMode, specs: Iterable[SimpleGroupSpec]) -> list[SimpleGroupSpec]:
    """
    Keep the candidate groups that no witness centralizer excludes in the given mode.

    Args:
    - mode (DiagonalMode): SD_k>=3, CD_r2 or CD_r3.
    - specs (Iterable[SimpleGroupSpec]): Candidates.

    Returns:
    - list[SimpleGroupSpec]: The survivors, in input order.

    """
    return [spec for spec in specs if not is_excluded(spec, mode)]


def candidate_table(mode: DiagonalMode, grids: dict[str, list[SimpleGroupSpec]] = None) -> dict:
    """
    Run the filter over one grid per family and summarize survivors and exclusions.
    """
    if mode not in MODE_TAGS:
        raise UnsupportedFamily(f"unknown mode {mode}", mode=mode)
    grids = DEFAULT_GRIDS if grids is None else grids
    summary = {"mode": mode, "exponent": str(MODE_EXPONENTS[mode]), "families": {}}
    for family, specs in grids.items():
        survivors = candidate_filter(mode, specs)
        excluded = [spec for spec in specs if spec not in survivors]
        ns = [spec.n for spec in survivors if spec.n is not None]
        summary["families"][family] = {
            "survivors": [str(spec) for spec in survivors],
            "excluded": [str(spec) for spec in excluded],
            "max_surviving_n": max(ns) if ns else None,
            "ref": f"{REFERENCE_TAGS['candidates']}:{MODE_TAGS[mode]}:{family}",
        }
    _logger.info("candidates (%s): %d survivors", mode,
                 sum(len(f["survivors"]) for f in summary["families"].values()))
    return summary
