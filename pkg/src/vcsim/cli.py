"""``vcsim`` command line: gen, run, oracle, compare."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algorithms import ALGORITHMS, DisconnectedGraphError, make_program
from .graph import TOPOLOGY_KINDS, GraphError, TopologySpec, generate, load_edge_list, stats, write_edge_list
from .kernel import GREEDY_MODES, TRACE_LEVELS, KernelError, SimConfig, run
from .oracle import OracleGuardError, min_vertex_cover
from .report import compare, rows_to_csv, rows_to_json, rows_to_table


class CliError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("VCSIM_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"VCSIM_SEED must be an integer, got {raw!r}") from None


def _sim_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sink", type=int, default=None, help="BFS root (default: smallest node ID)")
    p.add_argument("--greedy-mode", choices=GREEDY_MODES, default="faithful")
    p.add_argument("--max-rounds", type=int, default=None, help="round guard (default: 4n)")
    p.add_argument("--trace", choices=TRACE_LEVELS, default="counts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vcsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a topology and write it as an edge list")
    gen.add_argument("kind", choices=TOPOLOGY_KINDS)
    gen.add_argument("--n", type=int, default=0)
    gen.add_argument("--radius", type=float, default=0.0)
    gen.add_argument("--edge-prob", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=None, help="PRNG seed (default: $VCSIM_SEED or 0)")
    gen.add_argument("--graph", help="input edge list (from_file only)")
    gen.add_argument("--out", required=True)

    r = sub.add_parser("run", help="simulate one algorithm")
    r.add_argument("--graph", required=True)
    r.add_argument("--algo", required=True, help="|".join(ALGORITHMS))
    r.add_argument("--out", help="write the full trace here as JSON lines (with --trace full)")
    _sim_flags(r)

    o = sub.add_parser("oracle", help="exact minimum vertex cover")
    o.add_argument("--graph", required=True)
    o.add_argument("--method", choices=("enumerate", "bnb"), default="enumerate")

    c = sub.add_parser("compare", help="oracle plus all three algorithms")
    c.add_argument("--graph", required=True)
    c.add_argument("--format", choices=("csv", "json", "table"), default="table")
    c.add_argument("--method", choices=("auto", "enumerate", "bnb"), default="auto")
    c.add_argument("--out", help="write the report here instead of stdout")
    _sim_flags(c)
    return parser


def _config(args: argparse.Namespace) -> SimConfig:
    trace = getattr(args, "trace", "counts")
    try:
        return SimConfig(
            max_rounds=args.max_rounds, sink=args.sink, greedy_mode=args.greedy_mode, trace_level=trace
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    spec = TopologySpec(args.kind, args.n, args.radius, args.edge_prob, seed, args.graph)
    g = generate(spec)
    write_edge_list(g, args.out)
    print(json.dumps(stats(g).as_dict(), sort_keys=True))
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    if args.algo not in ALGORITHMS:
        raise CliError(f"unknown algorithm {args.algo!r}; expected one of {', '.join(ALGORITHMS)}")
    g = load_edge_list(args.graph)
    cfg = _config(args)
    res = run(g, make_program(args.algo, cfg), cfg)
    include_trace = cfg.trace_level == "full" and not args.out
    if args.out and cfg.trace_level == "full":
        Path(args.out).write_text(res.trace_jsonl(), encoding="utf-8", newline="\n")
    print(res.to_json(include_trace=include_trace))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    print(json.dumps(min_vertex_cover(g, args.method).as_dict(), sort_keys=True))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    rows, opt = compare(g, _config(args), args.method)
    if args.format == "csv":
        text = rows_to_csv(rows)
    elif args.format == "json":
        text = rows_to_json(rows, opt)
    else:
        text = rows_to_table(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {"gen": cmd_gen, "run": cmd_run, "oracle": cmd_oracle, "compare": cmd_compare}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CliError, GraphError, OracleGuardError, DisconnectedGraphError, KernelError, ValueError, OSError) as exc:
        print(f"vcsim {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
