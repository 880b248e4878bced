"""Command line entry point.

Exit codes: 0 success, 2 invalid input, 3 internal verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cist, colorings, harness, lpexport, reductions
from .errors import CistkitError, VerificationFailure
from .model import (
    format_certificate,
    format_coloring,
    format_hypergraph,
    format_split,
    read_certificate,
    read_coloring,
    read_hypergraph,
    read_split,
    split_of_hypergraph,
    write_text,
)

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 2, 3


def _out(args, name: str) -> Path:
    return Path(args.out) / name


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(",".join(f"{k}={v}" for k, v in payload.items()))


# --- color ------------------------------------------------------------------

def cmd_color(args) -> int:
    h = read_hypergraph(args.file)
    stem = Path(args.file).stem
    if args.what == "chi-p":
        value, witness = colorings.panchromatic_number(h)
        label = "chi_p"
    elif args.what == "chi-p2":
        value, witness = colorings.bipanchromatic_number(h)
        label = "chi_p2"
    else:
        k = args.k if args.k is not None else colorings.panchromatic_number(h)[0]
        value, witness = colorings.min_unique_colors(h, k)
        label = "alpha"
    path = write_text(_out(args, f"{stem}.{label}.col"), format_coloring(witness))
    if args.format == "json":
        _emit(args, {label: value, "witness": str(path)})
    else:
        print(value)
    return EXIT_OK


# --- cist -------------------------------------------------------------------

def cmd_cist(args) -> int:
    g = read_split(args.file)
    stem = Path(args.file).stem
    if args.what == "verify":
        verdict = cist.verify_cist(g, read_certificate(args.trees))
        _emit(args, {"valid": verdict.ok, "reason": str(verdict)})
        return EXIT_OK if verdict else EXIT_INVALID
    if args.what == "construct":
        report = cist.cist_report(g, exact_limit=args.exact_limit)
        trees = write_text(_out(args, f"{stem}.trees.json"), format_certificate(report.certificate))
        write_text(_out(args, f"{stem}.report.json"), json.dumps(report.to_json(), indent=2) + "\n")
        _emit(args, {
            "lower_bound": report.lower_bound,
            "upper_bound": report.upper_bound,
            "max_cist": report.max_cist,
            "trees": str(trees),
        })
        return EXIT_OK
    value, partition = cist.max_cist_with_partition(g, args.k_cap)
    cert = cist.trees_from_partition(g, partition)
    path = write_text(_out(args, f"{stem}.exact.trees.json"), format_certificate(cert))
    if args.format == "json":
        _emit(args, {"max_cist": value, "trees": str(path)})
    else:
        print(value)
    return EXIT_OK


# --- reduce -----------------------------------------------------------------

def cmd_reduce(args) -> int:
    h = read_hypergraph(args.file)
    if args.what == "bicp":
        gadget = reductions.build_bicp_gadget(h)
        write_text(args.output, format_hypergraph(gadget.h_prime))
    else:
        gadget = reductions.build_cist_gadget(h)
        write_text(args.output, format_split(gadget.g_prime))
    print(args.output)
    return EXIT_OK


def cmd_map_witness(args) -> int:
    h = read_hypergraph(args.file)
    if args.gadget == "bicp":
        gadget = reductions.build_bicp_gadget(h)
        result = reductions.map_bicp_witness(gadget, read_coloring(args.witness), args.direction)
        text = format_coloring(result)
    else:
        gadget = reductions.build_cist_gadget(h)
        if args.direction == "fwd":
            result = reductions.map_cist_witness(gadget, read_coloring(args.witness), "fwd")
            text = format_certificate(result)
        else:
            result = reductions.map_cist_witness(gadget, read_certificate(args.witness), "bwd")
            text = format_coloring(result)
    write_text(args.output, text)
    print(args.output)
    return EXIT_OK


# --- lp ---------------------------------------------------------------------

def cmd_lp(args) -> int:
    h = read_hypergraph(args.file)
    if args.model == "pan":
        text = lpexport.export_panchromatic_lp(h)
    else:
        chi_p = args.chi_p if args.chi_p is not None else colorings.panchromatic_number(h)[0]
        if args.model == "bipan":
            text = lpexport.export_bipanchromatic_lp(h, chi_p)
        else:
            text = lpexport.export_alpha_lp(h, chi_p)
    write_text(args.output, text)
    print(args.output)
    return EXIT_OK


# --- experiment -------------------------------------------------------------

def cmd_experiment(args) -> int:
    if args.what == "eq3":
        rec = harness.eq3_check(read_hypergraph(args.file))
        _emit(args, rec.row())
        return EXIT_OK
    seed = args.seed if args.seed is not None else 0
    result = harness.run_conjecture_grid(
        harness.parse_range(args.n),
        harness.parse_range(args.m_offset),
        args.samples,
        seed,
        out_dir=args.out,
        jobs=args.jobs,
    )
    paths = harness.write_grid(result, args.out, args.format)
    s = result.summary
    print(f"instances={s['instances']} holds={s['eq3_holds']} violations={s['eq3_violations']}")
    for p in paths:
        print(p)
    return EXIT_OK


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--seed", type=int, default=default, help="master seed (u64)")
    parser.add_argument("--out", default=default if suppress else ".", help="output directory")
    parser.add_argument("--format", choices=["csv", "json"], default=default if suppress else "csv")


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(prog="cistkit", description=__doc__.splitlines()[0])
    _globals(root, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _globals(shared, suppress=True)
    sub = root.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="coloring numbers with witnesses")
    csub = color.add_subparsers(dest="what", required=True)
    for name in ("chi-p", "chi-p2", "alpha"):
        p = csub.add_parser(name, parents=[shared])
        p.add_argument("file")
        if name == "alpha":
            p.add_argument("--k", type=int, default=None, help="number of colors (default chi_p)")
    color.set_defaults(func=cmd_color)

    cst = sub.add_parser("cist", help="completely independent spanning trees")
    ssub = cst.add_subparsers(dest="what", required=True)
    p = ssub.add_parser("verify", parents=[shared])
    p.add_argument("file")
    p.add_argument("trees")
    p = ssub.add_parser("construct", parents=[shared])
    p.add_argument("file")
    p.add_argument("--exact-limit", type=int, default=cist.EXACT_LIMIT)
    p = ssub.add_parser("exact", parents=[shared])
    p.add_argument("file")
    p.add_argument("--k-cap", type=int, default=None)
    cst.set_defaults(func=cmd_cist)

    red = sub.add_parser("reduce", help="hardness gadgets")
    rsub = red.add_subparsers(dest="what", required=True)
    for name in ("bicp", "cist"):
        p = rsub.add_parser(name, parents=[shared])
        p.add_argument("file")
        p.add_argument("-o", "--output", required=True)
        p.set_defaults(func=cmd_reduce)
    p = rsub.add_parser("map-witness", parents=[shared])
    p.add_argument("gadget", choices=["bicp", "cist"])
    p.add_argument("direction", choices=["fwd", "bwd"])
    p.add_argument("file", help="source hypergraph H")
    p.add_argument("witness", help=".col coloring or trees.json certificate")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_map_witness)

    lp = sub.add_parser("lp", help="integer program export")
    lsub = lp.add_subparsers(dest="what", required=True)
    p = lsub.add_parser("export", parents=[shared])
    p.add_argument("model", choices=["pan", "bipan", "alpha"])
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--chi-p", type=int, default=None)
    lp.set_defaults(func=cmd_lp)

    exp = sub.add_parser("experiment", help="chi_p2 = chi_p - ceil(alpha/2) experiments")
    esub = exp.add_subparsers(dest="what", required=True)
    p = esub.add_parser("conjecture", parents=[shared])
    p.add_argument("--n", default="4..13")
    p.add_argument("--m-offset", default="-1..8")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p = esub.add_parser("eq3", parents=[shared])
    p.add_argument("file")
    exp.set_defaults(func=cmd_experiment)
    return root


def _join_negative_ranges(argv: list[str]) -> list[str]:
    # argparse would read "-1..8" as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--m-offset", "--n"):
            nxt = next(it, None)
            if nxt is not None:
                out.append(f"{tok}={nxt}")
                continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_negative_ranges(argv))
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (CistkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
