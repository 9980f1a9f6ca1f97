from typing import TypedDict, Literal

CaseTag = Literal["C0", "C1", "C1'", "C2", "C2'", "C3", "C3'", "C4"]
CentralizerCase = Literal["Trivial", "a", "b", "c", "c'", "d", "e"]
FamilyTag = Literal["Alt", "PSL", "PSU", "PSp", "Omega_odd", "POmega_eps",
                    "Sz", "G2", "TwoF4", "E8", "M11"]
DiagonalMode = Literal["SD_k>=3", "CD_r2", "CD_r3"]
SweepCheck = Literal["feasible", "hs", "hs-final", "cor34", "bound"]
ThinShape = Literal["Grid", "DualGrid", "NotThin"]


class WorkbenchConfig(TypedDict):
    """
    Workbench Configuration

    This TypedDict defines the caps, budgets and report settings shared by every computation of the workbench.

    Attributes:
    - enumeration_cap (int): Maximum number of elements a permutation group closure may reach before CapExceeded.
    - max_points (int): Largest point count accepted by the automorphism search.
    - verify_order_max (int): Automorphism groups up to this order are enumerated to confirm the stabilizer chain order.

    - automorphism_search_cap (int): Maximum number of candidate generator-image assignments tried by group_automorphisms.
    - search_node_budget (int): Maximum number of backtracking nodes in searches for regular subgroups and subgroups of a given order.
    - max_singer_groups (int): Stop the regular subgroup search after this many distinct subgroups.
    - conjugacy_dedup_max_order (int): Deduplicate Singer groups by conjugacy only when the ambient group is at most this large.
    - seed (int): Seed of the random relabelings used by the invariance checks. The searches themselves are
      deterministic.

    - workers (int): Number of threads used for embarrassingly parallel verifications.

    - sweep_max (int): Default upper bound of the centralizer bound sweep.
    - hs_max (int): Default upper bound of the final arithmetic sweep.
    - root_precision (int): Denominator of the rational upper bounds used to certify inequalities with cube roots.

    - schema_version (int): Version stamped into every JSON report.
    - tool_version (str): Version of the workbench recorded in run manifests.

    """
    # ======== ENUMERATION =========== #
    enumeration_cap: int
    max_points: int
    verify_order_max: int

    # ======== SEARCH =========== #
    automorphism_search_cap: int
    search_node_budget: int
    max_singer_groups: int
    conjugacy_dedup_max_order: int
    seed: int

    # ======== PARALLELISM =========== #
    workers: int

    # ======== ARITHMETIC =========== #
    sweep_max: int
    hs_max: int
    root_precision: int

    # ======== REPORTS =========== #
    schema_version: int
    tool_version: str
