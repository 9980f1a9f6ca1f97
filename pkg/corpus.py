from __future__ import annotations
import logging
from functools import lru_cache
from incidence import IncidenceStructure
from perm_group import PermGroup
from geo_aut import automorphism_group
from singer import SingerContext, make_context
from constructions import (construct_w, construct_elliptic_q5, construct_grid, construct_dual_grid, payne_derive,
                           construct_elation_singer, ELATION_CENTER)
from exceptions import InvalidStructure

_logger = logging.getLogger(__name__)

NAMES = ("w2", "w3", "w4", "q5m2", "q5m3", "q4-3", "payne-w2", "payne-w3", "payne-w4")
SINGER_NAMES = ("payne-w3", "payne-w4")


def _pair(name: str, prefix: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in name[len(prefix):].split(","))
    except ValueError:
        raise InvalidStructure(f"bad parameters in {name!r}, expected {prefix}a,b", name=name)
    return a, b


@lru_cache(maxsize=None)
def structure(name: str) -> IncidenceStructure:
    """
    Build a named structure: w2, w3, w4 (W(q)), q5m2, q5m3 (Q-(5,q)), q4-3 (the dual of W(3)), payne-w2,
    payne-w3, payne-w4 (Payne derived at the point <e3>), grid:a,b and dualgrid:a,b.

    Raises:
    - InvalidStructure: For an unknown name.

    """
    if name.startswith("grid:"):
        return construct_grid(*_pair(name, "grid:"))
    if name.startswith("dualgrid:"):
        return construct_dual_grid(*_pair(name, "dualgrid:"))
    if name in ("w2", "w3", "w4"):
        return construct_w(int(name[1]))
    if name in ("q5m2", "q5m3"):
        return construct_elliptic_q5(int(name[3]))
    if name == "q4-3":
        Q = construct_w(3).dual()
        Q.name = "Q(4,3)"
        return Q
    if name in ("payne-w2", "payne-w3", "payne-w4"):
        return payne_derive(structure(name[len("payne-"):]), ELATION_CENTER)
    raise InvalidStructure(f"unknown structure {name!r}", name=name, known=list(NAMES))


@lru_cache(maxsize=None)
def automorphisms(name: str) -> PermGroup:
    A = automorphism_group(structure(name))
    _logger.info("Aut(%s) has order %d", name, A.order())
    return A


@lru_cache(maxsize=None)
def elation_context(name: str) -> SingerContext:
    """
    The Singer context of a Payne derived quadrangle of W(q) with the elation group about <e3> and base point 0.
    """
    if name not in SINGER_NAMES:
        raise InvalidStructure(f"{name!r} has no elation Singer group", name=name, known=list(SINGER_NAMES))
    q = int(name[-1])
    return make_context(structure(name), construct_elation_singer(q))
