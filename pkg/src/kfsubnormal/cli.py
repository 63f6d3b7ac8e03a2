"""Command-line front end.

Exit codes: 0 success, 1 a ``verify`` run found a counterexample, 2 an
operational error (bad input, cap exceeded, unreadable catalog, ...).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import embeddings as emb
from .catalog import CatalogEntry, CatalogError, default_catalog_path, get_entry, load_catalog, parse_catalog
from .formations import BUILTIN, Formation, fitting_subgroup, is_member, residual, solvable_radical
from .lattice import LatticeError, NotContained, SubgroupLattice, all_subgroups
from .perm import DEFAULT_ORDER_CAP, CapExceeded, PermutationError, exponent, parse_permutation, prime_divisors
from .verifier import DEFAULT_PAIR_BUDGET, RunConfig, Status, run_entries

PREDICATES = ("subnormal", "modular", "submodular", "kfsub")


def _split_gens(text: str | None) -> list[str]:
    if not text:
        return []
    return [g.strip() for g in text.split(";") if g.strip()]


def _max_point(gens: list[str]) -> int:
    pts = [int(t) for g in gens for t in g.replace("(", " ").replace(")", " ").replace(",", " ").split()]
    return max(pts, default=1)


def _entry(args) -> CatalogEntry:
    if args.gens is not None and args.group is not None:
        raise CatalogError("give either --group or --gens, not both")
    if args.gens is not None:
        gens = _split_gens(args.gens)
        return CatalogEntry("inline", args.degree or _max_point(gens), gens)
    if args.group is None:
        raise CatalogError("a group is required (--group or --gens)")
    if args.group.startswith("@"):
        data = json.loads(Path(args.group[1:]).read_text())
        entries = parse_catalog(data if isinstance(data, list) else [data], validate=False)
        if len(entries) != 1:
            raise CatalogError(f"{args.group[1:]}: expected exactly one entry, found {len(entries)}")
        return entries[0]
    return get_entry(args.group, load_catalog(args.catalog or default_catalog_path(), validate=False))


def _lattice(args) -> tuple[CatalogEntry, SubgroupLattice]:
    entry = _entry(args)
    G = entry.to_group(cap=args.cap)
    return entry, all_subgroups(G, cap=args.cap)


def _subgroup(L: SubgroupLattice, text: str | None, default):
    if text is None:
        return default
    return L.resolve(parse_permutation(g, L.group.degree) for g in _split_gens(text))


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=1))
    else:
        print(text)


def cmd_info(args) -> int:
    entry, L = _lattice(args)
    G = L.group
    classes = {F.value: is_member(G, F) for F in BUILTIN}
    payload = {
        "name": entry.name,
        "degree": G.degree,
        "order": G.order,
        "exponent": exponent(G),
        "primes": prime_divisors(G),
        "classes": classes,
        "subgroups": len(L),
        "normal_subgroups": len(L.normal_subgroups()),
        "solvable_radical_order": solvable_radical(L).order,
        "fitting_order": fitting_subgroup(L).order,
    }
    yes = lambda b: "yes" if b else "no"  # noqa: E731
    text = "\n".join([
        f"group {entry.name}: degree {G.degree}, order {G.order}, exponent {payload['exponent']}",
        f"primes: {', '.join(map(str, payload['primes'])) or '-'}",
        "classes: " + ", ".join(f"{k} {yes(classes[k])}" for k in ("S", "U", "U1", "N")),
        f"subgroups: {len(L)} ({payload['normal_subgroups']} normal)",
        f"solvable radical order: {payload['solvable_radical_order']}, Fitting order: {payload['fitting_order']}",
    ])
    _emit(args, payload, text)
    return 0


def cmd_subgroups(args) -> int:
    _, L = _lattice(args)
    if args.format == "dot":
        sys.stdout.write(L.to_dot())
    elif args.format == "json":
        print(L.to_json(sort_keys=True, indent=1))
    else:
        for i in range(len(L)):
            flag = "N" if L.normal_flags[i] else " "
            gens = "; ".join(p.cycle_string() for p in L.generators_of(i)) or "()"
            print(f"{i:4d} {flag} |{L.orders[i]}| {gens}")
    return 0


def _decide(L: SubgroupLattice, predicate: str, H, K, F):
    if predicate == "subnormal":
        chain = emb.subnormal_series(L, H, K)
        return chain is not None, chain
    if predicate == "modular":
        return emb.is_modular(L, H, K), None
    if predicate == "submodular":
        return emb.is_submodular(L, H, K)
    return emb.is_kf_subnormal(L, H, K, F)


def _chain_text(L: SubgroupLattice, chain: emb.WitnessChain) -> str:
    parts = []
    for i, s in enumerate(chain.steps):
        gens = "; ".join(p.cycle_string() for p in L.generators_of(s)) or "()"
        parts.append(f"  |{s.order}| <{gens}>")
        if i < len(chain.kinds):
            parts.append(f"    {chain.kinds[i].value} step")
    return "\n".join(parts)


def cmd_check(args, with_chain: bool = False) -> int:
    _, L = _lattice(args)
    F = Formation.parse(args.formation)
    K = _subgroup(L, args.within, L.whole)
    H = _subgroup(L, args.sub, L.trivial)
    ok, chain = _decide(L, args.predicate, H, K, F)
    label = args.predicate + (f" ({F.value})" if args.predicate == "kfsub" else "")
    payload = {"predicate": args.predicate, "formation": F.value if args.predicate == "kfsub" else None,
               "subgroup_order": H.order, "within_order": K.order, "result": ok,
               "chain": chain.to_dict(L) if chain else None}
    lines = [f"{label}: subgroup of order {H.order} in subgroup of order {K.order}: {str(ok).lower()}"]
    if chain and (with_chain or args.format == "text"):
        lines.append(_chain_text(L, chain))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_residual(args) -> int:
    _, L = _lattice(args)
    K = _subgroup(L, args.within, L.whole)
    orders = {F.value: residual(L, F, K).order for F in BUILTIN}
    _emit(args, {"within_order": K.order, "residual_orders": orders},
          ", ".join(f"{k}: {v}" for k, v in orders.items()))
    return 0


def cmd_verify(args) -> int:
    entries = load_catalog(args.catalog or default_catalog_path(), validate=True, cap=args.cap)
    if args.groups:
        wanted = _split_gens(args.groups.replace(",", ";"))
        entries = [get_entry(n, entries) for n in wanted]
    formations = tuple(Formation.parse(f).value for f in (args.formations.split(",") if args.formations else [f.value for f in BUILTIN]))
    selection = tuple(s for s in args.statements.split(",")) if args.statements else None
    cfg = RunConfig(seed=args.seed, cap=args.cap, pair_budget=args.pair_budget,
                    formations=formations, selection=selection)

    def progress(entry, results):
        if args.format == "text":
            bad = [r for r in results if r.status is not Status.VERIFIED]
            marks = ", ".join(f"{r.statement_id}={r.status.value}" for r in bad) or "all verified"
            print(f"{entry.name}: {len(results)} checks, {marks}", flush=True)

    report = run_entries(entries, cfg, jobs=args.jobs, progress=progress)
    body = report.to_json(timing=not args.no_timing)
    if args.output:
        Path(args.output).write_text(body)
    if args.format == "json" and not args.output:
        sys.stdout.write(body)
    elif args.format == "text":
        s = report.summary()
        print(f"{s['verified']} verified, {s['counterexample']} counterexamples, {s['skipped']} skipped")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfsub", description="Subgroup embedding predicates and theorem checks for small permutation groups.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def group_flags(p, formats=("text", "json")):
        p.add_argument("--group", help="catalog entry name, or @file with a single JSON entry")
        p.add_argument("--gens", help='inline generators, e.g. "(1 2 3);(1 2)"')
        p.add_argument("--degree", type=int, help="degree for --gens (default: largest point)")
        p.add_argument("--catalog", help="catalog JSON (default: $KFSUB_CATALOG or the bundled corpus)")
        p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("info", help="order, exponent, prime divisors, class memberships")
    group_flags(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("subgroups", help="dump the subgroup lattice")
    group_flags(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_subgroups)

    for verb, choices, func in (("check", PREDICATES, cmd_check),
                                ("chain", ("subnormal", "submodular", "kfsub"), lambda a: cmd_check(a, True))):
        p = sub.add_parser(verb, help="evaluate an embedding predicate" if verb == "check" else "print a witness chain")
        p.add_argument("predicate", choices=choices)
        group_flags(p)
        p.add_argument("--sub", help="generators of the subgroup H (default: trivial)")
        p.add_argument("--within", help="generators of the ambient subgroup (default: whole group)")
        p.add_argument("--formation", default="U1", help="N, U, S or U1 (kfsub only)")
        p.set_defaults(func=func)

    p = sub.add_parser("residual", help="residual orders for N, U, S, U1")
    group_flags(p)
    p.add_argument("--within", help="generators of the subgroup whose residuals to compute")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("verify", help="run the theorem checks over a catalog")
    p.add_argument("--catalog", help="catalog JSON (default: $KFSUB_CATALOG or the bundled corpus)")
    p.add_argument("--groups", help="comma-separated entry names to restrict to")
    p.add_argument("--statements", help="comma-separated statement ids or prefixes, e.g. thm1,lem3")
    p.add_argument("--formations", help="comma-separated formations (default: N,U,S,U1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed fields from the report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, PermutationError, CapExceeded, LatticeError, NotContained, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
