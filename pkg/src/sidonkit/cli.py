"""Command-line interface.

Subcommands: theta, encode, rho, classify, verify, extract, ramsey, forest,
oracle, pipeline.  Certificates are emitted as canonical JSON with --format
json, or as short human summaries by default.

Exit codes: 0 when every requested certificate passed or a decision was
reached, 1 on input errors or a failed certificate, 2 when a search guard
refused the instance.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .certs import Certificate, canonical_json, jsonable
from .config import Config, load_config
from .encoder import encode
from .errors import FormatError, GuardRefusal, SidonkitError
from .extract import extract_Bk
from .forest import find_extension, is_forest_of_copies, read_family_file
from .ordgraph import (
    ThetaSpec,
    check_local_structure,
    girth,
    induced_cycles_upto,
    make_theta,
    read_graph_file,
    write_graph_file,
)
from .pipeline import PipelineError, run_pipeline
from .ramsey import arrow_check, arrow_oracle, edge_arrow_check
from .repset import (
    ALL_CLAUSES,
    classify,
    read_set_file,
    rho_count,
    rho_profile,
    verify_theorem_properties,
    write_set_file,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(canonical_json(payload))
    else:
        for line in text_lines:
            print(line)


def _certificate_output(args, cert: Certificate) -> int:
    _emit(args, cert.to_dict(), [cert.summary()])
    return EXIT_OK if cert.passed else EXIT_INPUT


def _cmd_theta(args, cfg: Config) -> int:
    spec = ThetaSpec(k=args.k, ell=args.ell, interleaving=args.interleaving or cfg.interleaving)
    G = make_theta(spec)
    if args.out:
        write_graph_file(args.out, G)
    payload = {
        "k": spec.k,
        "ell": spec.ell,
        "interleaving": spec.interleaving,
        "vertex_count": G.vertex_count,
        "edge_count": G.edge_count,
        "girth": girth(G),
        "edges": [list(e) for e in G.sorted_edges()],
    }
    _emit(args, payload, [
        f"theta k={spec.k} ell={spec.ell} ({spec.interleaving}): "
        f"{G.vertex_count} vertices, {G.edge_count} edges, girth {girth(G)}"
        + (f", written to {args.out}" if args.out else "")
    ])
    return EXIT_OK


def _cmd_encode(args, cfg: Config) -> int:
    G = read_graph_file(args.graph)
    enc = encode(G, args.k, m=args.m)
    if args.out_set:
        write_set_file(args.out_set, enc.elements)
    if args.out_map:
        with open(args.out_map, "w", encoding="utf-8") as fh:
            for x in enc.elements:
                p, q = enc.exponent_pair(x)
                fh.write(f"x {x} {p} {q}\n")
    payload = {
        "k": enc.k,
        "m": enc.m,
        "elements": list(enc.elements.elements),
        "exponent_pairs": {str(x): list(enc.exponent_pair(x)) for x in enc.elements},
    }
    lines = [f"encoded {len(enc.elements)} elements with base m={enc.m}:"]
    lines += [f"  {x} = {enc.m}^{enc.exponent_pair(x)[1]} - {enc.m}^{enc.exponent_pair(x)[0]}"
              for x in enc.elements]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_rho(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    if args.n is not None:
        count, reps = rho_count(X, args.k, args.n)
        payload = {"k": args.k, "target": args.n, "count": count,
                   "representations": [list(t) for t in reps]}
        lines = [f"target {args.n}: {count} representation(s)"]
        lines += [f"  {tuple(t)}" for t in reps]
        _emit(args, payload, lines)
        return EXIT_OK
    profile = rho_profile(X, args.k, witness_cap=cfg.witness_cap)
    payload = {
        "k": args.k,
        "max_count": profile.max_value,
        "histogram": {str(c): n for c, n in sorted(profile.histogram.items())},
        "witnesses": {
            str(c): {"target": w.target, "representations": [list(t) for t in w.representations]}
            for c, w in sorted(profile.witnesses.items())
        },
    }
    lines = [f"max representation count: {profile.max_value}"]
    for c, n in sorted(profile.histogram.items()):
        w = profile.witnesses[c]
        lines.append(f"  count {c}: {n} target(s), e.g. {w.target}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_classify(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    result = classify(X, args.k)
    payload = {"k": args.k, "is_bkl": result.is_bkl, "ell": result.ell}
    if result.is_bkl:
        line = f"B_{{{args.k},{result.ell}}}-set ({len(X)} elements)"
    else:
        line = "empty set: not a B_{k,ell}-set for any ell >= 1"
    _emit(args, payload, [line])
    return EXIT_OK


def _cmd_verify(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    which = args.checks.split(",") if args.checks else None
    cert = verify_theorem_properties(X, args.k, args.ell, which=which)
    lines = [cert.summary()]
    for clause, result in cert.details["clauses"].items():
        lines.append(f"  {clause}: {result['status'].upper()}")
        if result["status"] == "fail":
            lines.append(f"    witness: {result['witness']}")
    _emit(args, cert.to_dict(), lines)
    return EXIT_OK if cert.passed else EXIT_INPUT


def _cmd_extract(args, cfg: Config) -> int:
    G = read_graph_file(args.graph)
    enc = encode(G, args.k, m=args.m)
    Y = read_set_file(args.subset) if args.subset else enc.elements
    result = extract_Bk(Y, enc, args.k)
    if args.out:
        write_set_file(args.out, result.subset)
    w = result.witness
    lines = ["class map:"]
    for v in sorted(w.classes):
        lines.append(f"  {v} -> class {w.classes[v]}")
    lines += [
        f"cross edges |P| = {len(w.cross_edges)}",
        f"ascending-class edges |P_up| = {len(w.up_edges)}",
        f"descending-class edges |P_down| = {len(w.down_edges)}",
        f"chosen side: {w.chosen_side}",
        f"extracted subset ({len(result.subset)} of {len(Y)}): {list(result.subset.elements)}",
        result.certificate.summary(),
    ]
    payload = {
        "witness": {
            "classes": {str(v): c for v, c in sorted(w.classes.items())},
            "cross_edges": len(w.cross_edges),
            "up_edges": len(w.up_edges),
            "down_edges": len(w.down_edges),
            "chosen_side": w.chosen_side,
        },
        "subset": list(result.subset.elements),
        "certificate": result.certificate.to_dict(),
    }
    _emit(args, payload, lines)
    return EXIT_OK if result.certificate.passed else EXIT_INPUT


def _verdict_output(args, verdict) -> int:
    payload = verdict.to_dict()
    lines = [f"arrow relation {'holds' if verdict.holds else 'does not hold'} "
             f"({verdict.colorings_examined} colorings examined, {verdict.pruned} pruned)"]
    if verdict.counterexample is not None:
        classes = verdict.counterexample.classes()
        for q in sorted(classes):
            lines.append(f"  class {q}: {classes[q]}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_ramsey_set(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    verdict = arrow_check(X, args.k, args.ell, args.r, workers=args.workers, config=cfg)
    return _verdict_output(args, verdict)


def _cmd_ramsey_graph(args, cfg: Config) -> int:
    H = read_graph_file(args.graph)
    verdict = edge_arrow_check(H, args.k, args.ell, args.r, workers=args.workers, config=cfg)
    return _verdict_output(args, verdict)


def _cmd_forest_check(args, cfg: Config) -> int:
    family = read_family_file(args.family)
    result = is_forest_of_copies(family, config=cfg)
    payload = {
        "is_forest": result.is_forest,
        "ordering": list(result.ordering) if result.ordering else None,
        "stuck_subset": list(result.stuck_subset) if result.stuck_subset else None,
    }
    if result.is_forest:
        lines = [f"forest of copies: yes (ordering {list(result.ordering)})"]
    else:
        lines = [f"forest of copies: no (minimal stuck subfamily {list(result.stuck_subset)})"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_forest_extend(args, cfg: Config) -> int:
    family = read_family_file(args.family)
    pool = read_family_file(args.pool)
    result = find_extension(family, pool, args.budget, config=cfg)
    payload = {
        "found": result.found,
        "extension": list(result.extension) if result.extension is not None else None,
        "subsets_checked": result.subsets_checked,
    }
    if result.found:
        lines = [f"extension of size {len(result.extension)} found: pool indices "
                 f"{list(result.extension)} ({result.subsets_checked} subsets checked)"]
    else:
        lines = [f"no extension within budget {args.budget} "
                 f"({result.subsets_checked} subsets checked)"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_oracle_sums(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    profile = rho_profile(X, args.k)
    counts: dict[int, int] = {}
    from .repset import _iter_tuple_sums

    for total in _iter_tuple_sums(X, args.k):
        counts[total] = counts.get(total, 0) + 1
    payload = {"k": args.k, "table": {str(n): c for n, c in sorted(counts.items())},
               "max_count": profile.max_value}
    lines = [f"{n}: {c}" for n, c in sorted(counts.items())]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_oracle_cycles(args, cfg: Config) -> int:
    G = read_graph_file(args.graph)
    cycles = induced_cycles_upto(G, args.s)
    payload = {"s": args.s, "cycles": [list(c) for c in cycles]}
    lines = [f"{len(cycles)} induced cycle(s) up to length {args.s}"]
    lines += [f"  {list(c)}" for c in cycles]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_oracle_colorings(args, cfg: Config) -> int:
    X = read_set_file(args.set)
    verdict = arrow_oracle(X, args.k, args.ell, args.r)
    return _verdict_output(args, verdict)


def _cmd_pipeline(args, cfg: Config) -> int:
    graph = read_graph_file(args.graph) if args.graph else None
    source = args.graph if args.graph else "generated-theta"
    run = run_pipeline(
        k=args.k,
        ell=args.ell,
        r=args.r,
        graph=graph,
        graph_source=str(source),
        interleaving=args.interleaving,
        workers=args.workers,
        config=cfg,
        argv=sys.argv[1:],
    )
    outdir = Path(args.outdir) if args.outdir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "bundle.json").write_text(run.bundle_json() + "\n", encoding="utf-8")
        (outdir / "manifest.json").write_text(
            json.dumps(jsonable(run.manifest), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    stages = run.bundle["stages"]
    lines = [
        f"local structure: {'PASS' if stages['local_structure']['passed'] else 'FAIL'}",
        f"classification: ell = {stages['classification']['ell_observed']} "
        f"({'matches' if stages['classification']['matches_requested'] else 'differs from'} requested)",
        f"properties: {'PASS' if stages['properties']['passed'] else 'FAIL'}",
        f"extraction: {'PASS' if stages['extraction']['passed'] else 'FAIL'} "
        f"(subset size {stages['extraction']['params']['subset_size']})",
        f"arrow (r={args.r}): {'holds' if stages['arrow']['holds'] else 'does not hold'}",
        f"bundle: {'PASS' if run.bundle['passed'] else 'FAIL'}",
    ]
    if outdir:
        lines.append(f"bundle written to {outdir / 'bundle.json'}")
    _emit(args, run.bundle, lines)
    return EXIT_OK if run.bundle["passed"] else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidonkit",
        description="Generalised Sidon sets from ordered theta graphs.",
    )
    parser.add_argument("--version", action="version", version=f"sidonkit {__version__}")
    parser.add_argument("--config", help="path to a key = value config file")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="generate a theta graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--interleaving", choices=("level-major", "path-major"))
    p.add_argument("--out", help="write the graph file here")
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("encode", help="encode a graph into an integer set")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, help="odd base >= 2k+1 (default 2k+1)")
    p.add_argument("--out-set", help="write the set file here")
    p.add_argument("--out-map", help="write the exponent-pair sidecar here")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("rho", help="representation counts of a set")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="count representations of this target only")
    p.set_defaults(handler=_cmd_rho)

    p = sub.add_parser("classify", help="report the B_{k,ell} class of a set")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("verify", help="verify the structural set properties")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(ALL_CLAUSES)}")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("extract", help="extract a guaranteed B_k-subset")
    p.add_argument("--graph", required=True, help="source graph of the encoding")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--subset", help="set file with Y (default: the full encoded set)")
    p.add_argument("--out", help="write the extracted subset here")
    p.set_defaults(handler=_cmd_extract)

    p = sub.add_parser("ramsey", help="decide partition relations")
    rsub = p.add_subparsers(dest="ramsey_command", required=True)
    q = rsub.add_parser("check-set", help="set version of the arrow relation")
    q.add_argument("--set", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--ell", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(handler=_cmd_ramsey_set)
    q = rsub.add_parser("check-graph", help="monochromatic theta copies under edge colorings")
    q.add_argument("--graph", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--ell", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(handler=_cmd_ramsey_graph)

    p = sub.add_parser("forest", help="forest-of-copies checks")
    fsub = p.add_subparsers(dest="forest_command", required=True)
    q = fsub.add_parser("check", help="decide the forest property")
    q.add_argument("--family", required=True)
    q.set_defaults(handler=_cmd_forest_check)
    q = fsub.add_parser("extend", help="search for a forest-completing extension")
    q.add_argument("--family", required=True)
    q.add_argument("--pool", required=True)
    q.add_argument("--budget", type=int, required=True)
    q.set_defaults(handler=_cmd_forest_extend)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("sums", help="full k-term sum table")
    q.add_argument("--set", required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(handler=_cmd_oracle_sums)
    q = osub.add_parser("cycles", help="induced cycle list")
    q.add_argument("--graph", required=True)
    q.add_argument("--s", type=int, required=True)
    q.set_defaults(handler=_cmd_oracle_cycles)
    q = osub.add_parser("colorings", help="all-colorings arrow decision")
    q.add_argument("--set", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--ell", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.set_defaults(handler=_cmd_oracle_colorings)

    p = sub.add_parser("pipeline", help="run the full verification chain")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--graph", help="graph file (default: generate the theta graph)")
    p.add_argument("--interleaving", choices=("level-major", "path-major"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--outdir", help="write bundle.json and manifest.json here")
    p.set_defaults(handler=_cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.handler(args, cfg)
    except GuardRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FormatError, SidonkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
