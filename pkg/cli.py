from __future__ import annotations
import argparse
import logging
import os
import sys
from collections import Counter
from fractions import Fraction
from multiprocessing.pool import ThreadPool
from typing import Callable
from termcolor import colored
from __types__ import WorkbenchConfig
from default_config import default_config
from incidence import IncidenceStructure, validate_gq, random_relabeling
from perm_group import PermGroup
from geo_aut import automorphism_group, line_group
from fixed_substructure import benson_check
from singer import make_context, find_singer_groups
from multipliers import multipliers_group_side, multipliers_geometry_side, multiplier_maps, verify_context
from constructions import construct_elation_singer
from arithmetic_bounds import feasible_pairs, hs_filter, hs_final_sweep, centralizer_bound_sweep
from simple_groups import SimpleGroupSpec, order_of_simple, centralizer_formula, threshold_class, threshold_claims, check_claim
from centralizer_oracles import formula_vs_brute, brute_max_centralizer, mathieu11
from candidates import candidate_filter, candidate_table
from manifest import RunManifest, REFERENCE_TAGS, report, write_report, write_csv, read_json, canonical_json
import corpus
from exceptions import (WorkbenchError, VerificationFailed, NoCaseVerifies, ValidationFailed, FormulaMismatch,
                        NonIntegerFormulaValue, CapExceeded)

_logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# failures of a check, as opposed to bad input
VERIFICATION_ERRORS = (VerificationFailed, NoCaseVerifies, ValidationFailed, FormulaMismatch)

EXPECTED_ORDERS = {
    "w2": ((2, 2), 15, 15), "w3": ((3, 3), 40, 40), "w4": ((4, 4), 85, 85),
    "q5m2": ((2, 4), 27, 45), "q5m3": ((3, 9), 112, 280), "payne-w4": ((3, 5), 64, 96),
}

Outcome = tuple[dict, bool]


# ======== INPUT =========== #

def load_structure(source: str, manifest: RunManifest) -> IncidenceStructure:
    """
    Read a structure from a JSON file, from stdin ("-"), or build it from a corpus name.
    """
    if source == "-" or os.path.exists(source):
        data, text = read_json(source, sys.stdin)
        manifest.add_input(source, text)
        return IncidenceStructure.from_json(data)
    S = corpus.structure(source)
    manifest.add_input(source, canonical_json(S.to_json()))
    return S


def _group_record(G: PermGroup) -> dict:
    return {"order": G.order(), "generators": [g.to_json() for g in G.generators],
            "abelian": G.is_abelian(), "p_group": G.is_p_group()}


# ======== COMMANDS =========== #

def cmd_construct(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    S = corpus.structure(args.name)
    return S.to_json(), True


def cmd_validate(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    S = load_structure(args.file, manifest)
    try:
        s, t = validate_gq(S)
    except WorkbenchError as e:
        return {"structure": S.name, "valid": False, "failure": e.to_dict()}, False
    return {"structure": S.name, "valid": True, "order": [s, t], "points": S.point_count,
            "lines": S.line_count}, True


def cmd_aut(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    S = load_structure(args.file, manifest)
    A = automorphism_group(S, config=config)
    body = {"structure": S.name, "order": A.order(), "generators": [g.to_json() for g in A.generators]}
    if A.is_transitive():
        body["primitive_on_points"] = A.is_primitive()
        L = line_group(S, A)
        body["primitive_on_lines"] = L.is_transitive() and L.is_primitive()
    return body, True


def cmd_singer(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    S = load_structure(args.file, manifest)
    groups = find_singer_groups(S, automorphism_group(S, config=config), config)
    return {"structure": S.name, "count": len(groups), "groups": [_group_record(G) for G in groups]}, True


def cmd_multipliers(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    S = load_structure(args.file, manifest)
    A = automorphism_group(S, config=config)
    if args.elation is not None:
        G = construct_elation_singer(args.elation, config)
    else:
        groups = find_singer_groups(S, A, config)
        if args.group >= len(groups):
            raise VerificationFailed("no Singer group with this index", index=args.group, found=len(groups))
        G = groups[args.group]
    ctx = make_context(S, G, args.base)
    body = {"context": ctx.to_json()}
    records = None
    agree = True
    if args.strategy in ("geometry", "both"):
        records = multipliers_geometry_side(ctx, A, config)
    if args.strategy in ("group", "both"):
        group_records = multipliers_group_side(ctx, config=config)
        if records is not None:
            agree = multiplier_maps(records) == multiplier_maps(group_records)
            body["strategies_agree"] = agree
        records = group_records
    rows = verify_context(ctx, records, config)
    body["multipliers"] = rows
    body["cases"] = dict(sorted(Counter(row.get("case", "Fail") for row in rows).items()))
    return body, agree and not any(row["failures"] for row in rows)


def cmd_sweep(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    kind = "cor34" if args.check == "bound" else args.check
    if kind == "feasible":
        rows = [{"s": s, "t": t} for s, t in feasible_pairs(args.max)]
        body, passed = {"check": kind, "rows": rows}, True
    elif kind == "hs":
        rows = [{"s": s, "t": t} for s in range(2, args.max + 1) for t in range(2, args.max + 1)
                if hs_filter(s, t).passed]
        body, passed = {"check": kind, "rows": rows}, True
    elif kind == "hs-final":
        body = hs_final_sweep(args.max, config=config)
        passed = body["passed"]
    else:
        body = centralizer_bound_sweep(args.min, args.max, config)
        passed = body["passed"]
    body["ref"] = REFERENCE_TAGS[kind]
    return body, passed


def cmd_centralizers(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    spec = SimpleGroupSpec(args.family, args.n, args.q, args.eps)
    body = {"group": str(spec), "order": str(order_of_simple(spec))}
    try:
        estimate = centralizer_formula(spec)
        body["formula"] = estimate.to_json()
        if args.threshold is not None:
            body["exceeds"] = {"exponent": args.threshold,
                               "verdict": threshold_class(estimate, Fraction(args.threshold), order_of_simple(spec))}
    except NonIntegerFormulaValue as e:
        body["formula"] = e.to_dict()
    if args.brute:
        try:
            body["brute"] = formula_vs_brute(spec, config)
        except NonIntegerFormulaValue as e:
            body["brute"] = e.to_dict()
    return body, True


# ======== VERIFY PAPER =========== #

def check_counts(quick: bool, config: WorkbenchConfig) -> Outcome:
    found = {}
    for name, (order, points, lines) in EXPECTED_ORDERS.items():
        S = corpus.structure(name)
        found[name] = {"order": list(S.order), "points": S.point_count, "lines": S.line_count,
                       "ok": tuple(S.order) == order and (S.point_count, S.line_count) == (points, lines)}
    return found, all(entry["ok"] for entry in found.values())


def check_benson(quick: bool, config: WorkbenchConfig) -> Outcome:
    names = ["w2", "q5m2"] + ([] if quick else ["payne-w4"])
    found = {}
    for name in names:
        S = corpus.structure(name)
        violations = 0
        for g in corpus.automorphisms(name).enumerate():
            try:
                benson_check(S, g)
            except VerificationFailed:
                violations += 1
        found[name] = {"checked": corpus.automorphisms(name).order(), "violations": violations}
    return found, all(entry["violations"] == 0 for entry in found.values())


def check_primitivity(quick: bool, config: WorkbenchConfig) -> Outcome:
    A = corpus.automorphisms("q5m2")
    P = corpus.automorphisms("payne-w4")
    found = {
        "q5m2_points": A.is_primitive(),
        "q5m2_lines": line_group(corpus.structure("q5m2"), A).is_primitive(),
        "payne-w4_points": P.is_primitive(),
    }
    return found, all(found.values())


def check_singer(quick: bool, config: WorkbenchConfig) -> Outcome:
    found = {}
    for name in corpus.SINGER_NAMES:
        found[name] = {"elation_order": corpus.elation_context(name).G.order()}
    searched = find_singer_groups(corpus.structure("q5m2"), corpus.automorphisms("q5m2"), config)
    found["q5m2_search"] = sorted({G.order() for G in searched})
    ok = found["payne-w3"]["elation_order"] == 27 and found["payne-w4"]["elation_order"] == 64 \
        and found["q5m2_search"] == [27]
    if not quick:
        A = corpus.automorphisms("payne-w4")
        groups = find_singer_groups(corpus.structure("payne-w4"), A, config)
        elation = corpus.elation_context("payne-w4").G
        conjugate = any(A.are_conjugate_subgroups(elation, G) for G in groups)
        found["payne-w4_search"] = {"found": len(groups), "elation_conjugate": conjugate}
        ok = ok and conjugate
    return found, ok


def check_multipliers(quick: bool, config: WorkbenchConfig) -> Outcome:
    found = {}
    ok = True
    for name in corpus.SINGER_NAMES:
        ctx = corpus.elation_context(name)
        records = multipliers_geometry_side(ctx, corpus.automorphisms(name), config)
        entry = {"multipliers": len(records)}
        try:
            entry["strategies_agree"] = multiplier_maps(records) == multiplier_maps(
                multipliers_group_side(ctx, config=config))
            ok = ok and entry["strategies_agree"]
        except CapExceeded:
            entry["strategies_agree"] = None
            _logger.info("%s: group side skipped, Aut(G) too large", name)
        rows = verify_context(ctx, records, config)
        entry["cases"] = dict(sorted(Counter(row.get("case", "Fail") for row in rows).items()))
        entry["failures"] = [failure for row in rows for failure in row["failures"]]
        ok = ok and not entry["failures"]
        found[name] = entry
    return found, ok


def check_bound_sweep(quick: bool, config: WorkbenchConfig) -> Outcome:
    body = centralizer_bound_sweep(4, 64 if quick else config["sweep_max"], config)
    body["inequalities"] = {name: {"checked": r["checked"], "failures": len(r["failures"])}
                            for name, r in body["inequalities"].items()}
    return body, body["passed"] and body["sqrt_bound_exceptions"] == [[4, 4]]


def check_hs(quick: bool, config: WorkbenchConfig) -> Outcome:
    body = hs_final_sweep(100 if quick else config["hs_max"], config=config)
    return {"max": body["max"], "min_thick_gap": body["min_thick_gap"]}, body["passed"]


def check_thresholds(quick: bool, config: WorkbenchConfig) -> Outcome:
    results = [check_claim(claim) for claim in threshold_claims()]
    return {"claims": results}, all(r["passed"] for r in results)


def check_oracles(quick: bool, config: WorkbenchConfig) -> Outcome:
    specs = [SimpleGroupSpec("Alt", n) for n in range(5, 9)] + [SimpleGroupSpec("PSL", 3, 2),
                                                                 SimpleGroupSpec("PSL", 3, 3)]
    if not quick:
        specs.append(SimpleGroupSpec("PSp", 2, 3))
    found = {}
    ok = True
    for spec in specs:
        try:
            found[str(spec)] = formula_vs_brute(spec, config)["brute_max"]
        except FormulaMismatch as e:
            found[str(spec)] = e.to_dict()
            ok = False
    try:
        formula_vs_brute(SimpleGroupSpec("PSL", 2, 5), config)
        ok = False
    except NonIntegerFormulaValue as e:
        found["PSL(2,5)"] = e.details["brute"]
    m11, _ = brute_max_centralizer(mathieu11(config))
    found["M11"] = m11
    ok = ok and m11 == 48 and not threshold_class(m11, Fraction(1, 2), 7920) and threshold_class(m11, Fraction(1, 4), 7920)
    return found, ok


def check_candidates(quick: bool, config: WorkbenchConfig) -> Outcome:
    sd = candidate_table("SD_k>=3")["families"]
    cd = candidate_table("CD_r2")["families"]
    psl = candidate_filter("SD_k>=3", [SimpleGroupSpec("PSL", n, 2) for n in range(3, 11)])
    found = {sd["Alt"]["ref"]: sd["Alt"]["max_surviving_n"], cd["Alt"]["ref"]: cd["Alt"]["max_surviving_n"],
             f"{sd['PSL']['ref']}:q=2": max(spec.n for spec in psl)}
    return found, found == {"Table1:SD:Alt": 15, "Table1:CD_r2:Alt": 7, "Table1:SD:PSL:q=2": 7}


def check_relabeling(quick: bool, config: WorkbenchConfig) -> Outcome:
    names = ["w2", "q5m2"] + ([] if quick else ["w3"])
    found = {}
    for offset, name in enumerate(names):
        S = corpus.structure(name)
        relabeled = S.relabel(random_relabeling(S.point_count, config["seed"] + offset))
        found[name] = {"order": list(validate_gq(relabeled)),
                       "aut": automorphism_group(relabeled, config=config).order(),
                       "expected_aut": corpus.automorphisms(name).order()}
    ok = all(entry["aut"] == entry["expected_aut"] and entry["order"] == list(corpus.structure(name).order)
             for name, entry in found.items())
    return found, ok


CHECKS: list[tuple[str, Callable[[bool, WorkbenchConfig], Outcome]]] = [
    ("gq-counts", check_counts),
    ("benson", check_benson),
    ("primitivity", check_primitivity),
    ("singer", check_singer),
    ("multipliers", check_multipliers),
    ("centralizer-bound", check_bound_sweep),
    ("hs-arithmetic", check_hs),
    ("thresholds", check_thresholds),
    ("oracles", check_oracles),
    ("candidates", check_candidates),
    ("relabeling", check_relabeling),
]


def _run_check(tag: str, check: Callable[[bool, WorkbenchConfig], Outcome], quick: bool,
               config: WorkbenchConfig) -> dict:
    try:
        details, passed = check(quick, config)
    except WorkbenchError as e:
        details, passed = e.to_dict(), False
    return {"check": tag, "ref": REFERENCE_TAGS[tag], "passed": passed, "details": details}


def cmd_verify_paper(args: argparse.Namespace, manifest: RunManifest, config: WorkbenchConfig) -> Outcome:
    pool = ThreadPool(processes=config["workers"])
    results = pool.starmap_async(_run_check, [[tag, check, args.quick, config] for tag, check in CHECKS])
    entries = sorted(results.get(), key=lambda entry: entry["check"])
    pool.close()
    pool.join()
    failures = [entry["check"] for entry in entries if not entry["passed"]]
    return {"quick": args.quick, "checks": entries, "failures": failures}, not failures


# ======== ENTRY POINT =========== #

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gq-workbench",
                                     description="Generalized quadrangles, Singer groups and their multipliers.")
    parser.add_argument("--out", default=None, help="Write the report to this file instead of stdout.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--seed", type=int, default=default_config["seed"], help="Seed of randomized searches.")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="Build a named structure.")
    construct.add_argument("name", help="w2, w3, w4, q5m2, q5m3, q4-3, payne-w2..4, grid:a,b or dualgrid:a,b.")
    construct.set_defaults(handler=cmd_construct)

    for name, handler, text in (("validate", cmd_validate, "Validate the GQ axioms and compute the order."),
                                ("aut", cmd_aut, "Compute the automorphism group."),
                                ("singer", cmd_singer, "Find Singer groups.")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("file", help="Structure JSON file, - for stdin, or a corpus name.")
        sub.set_defaults(handler=handler)

    multipliers = commands.add_parser("multipliers", help="Compute and verify the multipliers of a Singer group.")
    multipliers.add_argument("file", help="Structure JSON file, - for stdin, or a corpus name.")
    multipliers.add_argument("--group", type=int, default=0, help="Index of the Singer group found by search.")
    multipliers.add_argument("--elation", type=int, default=None, help="Use the elation group of W(q) instead.")
    multipliers.add_argument("--base", type=int, default=0, help="Base point.")
    multipliers.add_argument("--strategy", choices=("geometry", "group", "both"), default="geometry")
    multipliers.set_defaults(handler=cmd_multipliers)

    sweep = commands.add_parser("sweep-params", aliases=["sweep"], help="Arithmetic parameter sweeps.")
    sweep.add_argument("--check", choices=("feasible", "hs", "hs-final", "cor34", "bound"), required=True,
                       help="cor34 and bound both run the centralizer bound sweep.")
    sweep.add_argument("--min", type=int, default=4, help="Least s and t (bound sweep).")
    sweep.add_argument("--max", type=int, default=100, help="Largest s and t.")
    sweep.add_argument("--csv", action="store_true", help="Emit rows as CSV.")
    sweep.set_defaults(handler=cmd_sweep)

    centralizers = commands.add_parser("centralizers", help="Centralizer formulas and brute force.")
    centralizers.add_argument("--family", required=True)
    centralizers.add_argument("--n", type=int, default=None)
    centralizers.add_argument("--q", type=int, default=None)
    centralizers.add_argument("--eps", type=int, choices=(1, -1), default=None)
    centralizers.add_argument("--threshold", default=None, help="Exponent such as 1/2.")
    centralizers.add_argument("--brute", action="store_true", help="Compare with a brute-force computation.")
    centralizers.set_defaults(handler=cmd_centralizers)

    verify = commands.add_parser("verify-paper", aliases=["verify-all"], help="Run every check on the corpus.")
    verify.add_argument("--quick", action="store_true", help="Skip the exhaustive runs on the larger groups.")
    verify.set_defaults(handler=cmd_verify_paper)
    return parser


def _summary(command: str, passed: bool) -> None:
    verdict = colored("PASS", "green", attrs=["bold"]) if passed else colored("FAIL", "red", attrs=["bold"])
    print(f"{colored(command, attrs=['bold'])}: {verdict}", file=sys.stderr)


def main(argv: list[str] = None) -> int:
    """
    Run one subcommand.

    Returns:
    - int: 0 when every verification passed, 1 on a verification failure, 2 on a usage or input error.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_PASS
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    config = dict(default_config, seed=args.seed)
    flags = {k: v for k, v in vars(args).items() if k not in ("handler", "command", "out", "verbose")}
    manifest = RunManifest(args.command, flags, args.seed, config)
    try:
        body, passed = args.handler(args, manifest, config)
        if args.command != "construct" and args.command in REFERENCE_TAGS:
            body.setdefault("ref", REFERENCE_TAGS[args.command])
    except VERIFICATION_ERRORS as e:
        write_report({"error": e.to_dict(), "passed": False}, args.out, sys.stdout)
        _summary(args.command, False)
        return EXIT_FAIL
    except (WorkbenchError, OSError) as e:
        error = e.to_dict() if isinstance(e, WorkbenchError) else {"error": "IOError", "message": str(e)}
        write_report(error, None, sys.stdout)
        return EXIT_INPUT
    if args.out is not None:
        manifest.outputs.append(args.out)
    if args.command == "construct":
        write_report(body, args.out, sys.stdout)
    elif getattr(args, "csv", False) and "rows" in body:
        write_csv(body["rows"], args.out, sys.stdout)
    else:
        write_report(report(manifest, body), args.out, sys.stdout)
    _summary(args.command, passed)
    return EXIT_PASS if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
