"""Command-line interface: construct / expand / count / formula /
contains / berge / extremal / verify.

Every subcommand is a thin shell over the library and emits versioned
JSON on stdout.  Exit codes: 0 ok, 1 failed assertion or absent
containment, 2 usage, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions, containment, counting, extremal, verify
from .constructions import ConstructionSpec, build_construction
from .errors import BudgetExceeded, HypergraphError
from .expansion import ensure_hypergraph
from .hypergraph import read_hg, to_hg, write_hg

SCHEMA = 1


def _parse_params(text: str) -> dict:
    """k=v,... with integer values; list values use a+b+c."""
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        key, _, val = item.partition("=")
        if not _:
            raise SystemExit(f"bad parameter {item!r}; expected k=v")
        key = key.strip()
        val = val.strip()
        if "+" in val:
            out[key] = [int(x) for x in val.split("+")]
        else:
            try:
                out[key] = int(val)
            except ValueError:
                out[key] = val
    return out


def _emit(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _cmd_construct(args) -> int:
    params = _parse_params(args.params)
    h, meta = build_construction(ConstructionSpec(args.family, params))
    if args.out:
        write_hg(h, args.out)
        Path(str(args.out) + ".json").write_text(json.dumps(meta, indent=2) + "\n",
                                                 encoding="utf-8")
    _emit({"command": "construct", "meta": meta,
           "out": str(args.out) if args.out else None})
    return 0


def _cmd_expand(args) -> int:
    h = ensure_hypergraph(args.pattern)
    if args.out:
        write_hg(h, args.out)
    else:
        sys.stdout.write(to_hg(h))
    _emit({"command": "expand", "pattern": args.pattern,
           "r": h.r, "n": h.n, "edges": len(h.edges),
           "out": str(args.out) if args.out else None})
    return 0


def _cmd_count(args) -> int:
    h = read_hg(args.input)
    if args.at_vertex is not None:
        value = counting.count_cliques_at_vertex(h, args.s, args.at_vertex)
    else:
        value = counting.count_cliques(h, args.s)
    _emit({"command": "count", "input": str(args.input), "s": args.s,
           "at_vertex": args.at_vertex, "value": value})
    return 0


def _cmd_formula(args) -> int:
    fn = counting.FORMULAS.get(args.id)
    if fn is None:
        raise SystemExit(
            f"unknown formula id {args.id!r}; known: {', '.join(sorted(counting.FORMULAS))}")
    params = _parse_params(args.params)
    if "ells" in params and isinstance(params["ells"], int):
        params["ells"] = [params["ells"]]
    result = fn(**params)
    _emit({"command": "formula", **result.as_json()})
    return 0


def _cmd_contains(args) -> int:
    host = read_hg(args.host)
    cert = containment.find_embedding(args.pattern, host, budget=args.budget)
    payload = {"command": "contains", "host": str(args.host),
               "pattern": args.pattern, "contains": cert is not None}
    if cert is not None and args.certificate:
        payload["certificate"] = cert.as_json()
    _emit(payload)
    return 0 if cert is not None else 1


def _cmd_berge(args) -> int:
    host = read_hg(args.host)
    core = read_hg(args.core)
    cert = containment.contains_berge(host, core, budget=args.budget)
    payload = {"command": "berge", "host": str(args.host),
               "core": str(args.core), "contains": cert is not None}
    if cert is not None and args.certificate:
        payload["certificate"] = cert.as_json()
    _emit(payload)
    return 0 if cert is not None else 1


def _cmd_extremal(args) -> int:
    budget = int(float(args.budget))
    if args.berge_core:
        core = read_hg(args.berge_core)
        result = extremal.brute_berge_ex(args.n, args.r, core, budget=budget)
    elif args.weights:
        weights = {int(k): v for k, v in _parse_params(args.weights).items()}
        result = extremal.weighted_clique_max(
            args.n, args.r, weights, args.forbid or [], budget=budget)
    else:
        s = args.s if args.s is not None else args.r
        result = extremal.brute_ex(
            args.n, args.r, s, args.forbid or [], budget=budget)
    payload = result.as_json()
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        paths = []
        for i, w in enumerate(result.witnesses):
            p = Path(args.witness_dir) / f"witness_{i}.hg"
            write_hg(w, p)
            paths.append(str(p))
        payload["witness_files"] = paths
    _emit({"command": "extremal", **payload})
    return 0 if result.complete else 3


def _cmd_verify(args) -> int:
    scale = _parse_params(args.scale)
    for key in ("ns", "rs"):
        if key in scale and isinstance(scale[key], int):
            scale[key] = (scale[key],)
        elif key in scale:
            scale[key] = tuple(scale[key])
    report = verify.run_verify_suite(args.suite, **scale)
    _emit({"command": "verify", **report})
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperturan",
        description="Workbench for extremal counting problems on uniform "
                    "hypergraph expansions.",
    )
    parser.add_argument("--threads", type=int, default=os.cpu_count(),
                        help="orchestration hint; results are identical at any value")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a named construction")
    p.add_argument("--family", required=True, choices=constructions.FAMILIES)
    p.add_argument("--params", default="", help="k=v,... (lists as a+b)")
    p.add_argument("--out", help="output .hg path; metadata sidecar gets .json")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("expand", help="realize a pattern into a .hg file")
    p.add_argument("--pattern", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("count", help="count complete s-sets in a hypergraph")
    p.add_argument("--input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--at-vertex", type=int, default=None)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("formula", help="evaluate a closed-form or leading term")
    p.add_argument("--id", required=True)
    p.add_argument("--params", default="")
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("contains", help="decide subhypergraph containment")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--budget", type=int, default=containment.DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_contains)

    p = sub.add_parser("berge", help="decide Berge containment")
    p.add_argument("--host", required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--budget", type=int, default=containment.DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_berge)

    p = sub.add_parser("extremal", help="exact small-n extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--forbid", action="append", default=[])
    p.add_argument("--weights", default="", help="size=coeff,...")
    p.add_argument("--berge-core", help=".hg core; host uniformity is --r")
    p.add_argument("--budget", default=str(extremal.DEFAULT_BUDGET))
    p.add_argument("--witness-dir")
    p.set_defaults(fn=_cmd_extremal)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--scale", default="", help="suite scale overrides, k=v,...")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except HypergraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
