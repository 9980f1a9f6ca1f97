from __types__ import WorkbenchConfig

default_config: WorkbenchConfig = {
    # ======== ENUMERATION =========== #
    "enumeration_cap": 2_000_000,
    "max_points": 512,
    "verify_order_max": 200_000,

    # ======== SEARCH =========== #
    "automorphism_search_cap": 1_000_000,
    "search_node_budget": 1_000_000,
    "max_singer_groups": 64,
    "conjugacy_dedup_max_order": 60_000,
    "seed": 0,  # relabelings only

    # ======== PARALLELISM =========== #
    "workers": 4,

    # ======== ARITHMETIC =========== #
    "sweep_max": 512,
    "hs_max": 1000,
    "root_precision": 1000,  # rational cube roots are bounded with this denominator

    # ======== REPORTS =========== #
    "schema_version": 1,
    "tool_version": "0.1.0"
}
