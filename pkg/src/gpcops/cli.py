"""Command-line front end.

Graphs are given either as a file in the plain edge-list format or inline as
``gp:n,k``.  Subcommands cover classification, exact solves, trap scans,
paired-cycle detection, the family survey, and the table reproduction
harness.
"""

from __future__ import annotations

import argparse
import sys

from . import gp, structure, tables
from .graph import Graph, girth, parse_graph_file, render_dot
from .solver import cop_number, cops_win, optimal_cop_move
from .game import n_trapped, trapped
from .indexing import ROBBER_TO_MOVE


def load_graph(spec: str) -> tuple[str, Graph]:
    """(display id, graph) from 'gp:n,k' or a file path."""
    if spec.startswith("gp:"):
        try:
            n, k = (int(x) for x in spec[3:].split(","))
        except ValueError:
            raise SystemExit(f"bad gp spec {spec!r}; expected gp:n,k")
        return spec, gp.build_gp(n, k)
    with open(spec) as fh:
        return spec, parse_graph_file(fh.read())


def _write_out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    if args.max_n:
        pairs = [
            (n, k) for n in range(5, args.max_n + 1) for k in range(1, (n - 1) // 2 + 1)
        ]
    elif args.n and args.k:
        pairs = [(args.n, args.k)]
    else:
        raise SystemExit("classify needs --n and --k, or --max-n")
    lines = ["n,k,min_k,girth_computed,girth_predicted,tags,cop4_guaranteed"]
    for n, k in pairs:
        rep = gp.classify(n, k)
        tags = ";".join(
            sorted(gp.format_relation(t, n, rep.min_k) for t in rep.full_exception_tags)
        )
        lines.append(
            f"{n},{k},{rep.min_k},{rep.computed_girth},{rep.predicted_girth},"
            f"{tags},{str(rep.cop4_guaranteed).lower()}"
        )
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_solve(args) -> int:
    gid, g = load_graph(args.graph)
    res = cops_win(g, args.cops)
    print(
        f"graph={gid} cops={args.cops} cops_win={str(res.cops_win_overall).lower()} "
        f"states={res.states} time_ms={res.solve_ms:.0f}"
    )
    if args.emit_strategy and res.cops_win_overall:
        placement = res.winning_initial_placements[0]
        print(f"placement={','.join(map(str, placement))}")
        worst_r = max(
            (r for r in range(g.vertex_count)),
            key=lambda r: res.capture_time(placement, r, 0),
        )
        move = optimal_cop_move(res, placement, worst_r)
        print(
            f"worst_robber={worst_r} "
            f"capture_cop_turns={res.capture_time(placement, worst_r, 0, 'cop-turns')} "
            f"first_move={','.join(map(str, move))}"
        )
    return 0


def cmd_copnumber(args) -> int:
    gid, g = load_graph(args.graph)
    c = cop_number(g, args.max_cops)
    print(f"graph={gid} cop_number={c if c is not None else f'>{args.max_cops}'}")
    return 0


def cmd_scan_traps(args) -> int:
    gid, g = load_graph(args.graph)
    if args.cops != 3:
        raise SystemExit("trap scan supports exactly 3 cops")
    if args.depth == 2:
        states = structure.two_trapped_states(g)
        for r, cops in states:
            flag = structure._conforms_to_shape(g, r, cops)
            print(f"robber={r} cops={','.join(map(str, cops))} conforming={str(flag).lower()}")
        print(f"# graph={gid} two_trapped_not_trapped={len(states)}")
        return 0
    # deeper probes: pure-python scan over the distance-(2*depth) ball
    from itertools import combinations_with_replacement
    from .graph import bfs_distances

    count = 0
    for r in range(g.vertex_count):
        dist = bfs_distances(g, r)
        ball = [u for u, d in enumerate(dist) if 1 <= d <= 2 * args.depth]
        for cops in combinations_with_replacement(ball, 3):
            if trapped(g, cops, r):
                continue
            if n_trapped(g, cops, r, args.depth, max_depth=max(4, args.depth)):
                count += 1
                print(f"robber={r} cops={','.join(map(str, cops))} conforming=n/a")
    print(f"# graph={gid} depth={args.depth} states={count}")
    return 0


def cmd_detect(args) -> int:
    gid, g = load_graph(args.graph)
    pairs = structure.two_trap_pairs(g)
    print(f"graph={gid} pairs={len(pairs)}")
    for p in pairs[: args.limit]:
        print(
            f"center={p.center} shared={'-'.join(map(str, p.shared_path))} "
            f"cycle_a={','.join(map(str, p.cycle_a))} cycle_b={','.join(map(str, p.cycle_b))}"
        )
    return 0


def cmd_survey(args) -> int:
    rep = structure.survey_two_trap_families(args.max_n)
    lines = ["n,k,admits,in_family,tags"]
    for r in rep.rows:
        lines.append(
            f"{r.n},{r.k},{str(r.admits).lower()},{str(r.in_family).lower()},"
            f"{';'.join(r.tags)}"
        )
    lines.append(f"# violations={len(rep.violations)}")
    for tag, (total, admits) in rep.family_counts.items():
        lines.append(f"# family {tag}: {admits}/{total} admit")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0 if not rep.violations else 1


def cmd_coincidences(args) -> int:
    rels = (
        structure.candidate_relations(args.side)
        if args.all
        else structure.distance4_coincidences(args.n, args.k, args.side)
    )
    for r in rels:
        pairs = " ".join(
            f"({structure.format_label(a)},{structure.format_label(b)})" for a, b in r.pairs
        )
        print(f"{r.format()}  pairs: {pairs}")
    return 0


def cmd_tables(args) -> int:
    cache = None
    cache_path = args.cache or tables.default_cache_path()
    if cache_path:
        try:
            cache = tables.cache_load(cache_path)
        except FileNotFoundError:
            cache = {}
    rows = tables.full_table(args.max_n, threads=args.threads, cache=cache, slow=args.slow)
    if args.which == "cop4":
        rows = [r for r in rows if r.cop_number == 4]
    text = tables.rows_to_csv(rows)
    _write_out(text, args.out)
    if cache_path:
        tables.cache_store(rows, cache_path)
    return 0 if all(r.cop_number is not None for r in rows) else 1


def cmd_verify_high_girth(args) -> int:
    """Opt-in check: minimum degree delta >= 3 and girth >= 9 force delta
    cops to lose."""
    gid, g = load_graph(args.graph)
    delta = g.min_degree()
    gir = girth(g)
    if delta < 3:
        raise SystemExit(f"minimum degree {delta} < 3; theorem does not apply")
    if gir < 9:
        raise SystemExit(f"girth {gir} < 9; theorem does not apply")
    res = cops_win(g, delta, max_cop_count=max(4, delta))
    print(
        f"graph={gid} min_degree={delta} girth={gir} "
        f"cops_win({delta})={str(res.cops_win_overall).lower()}"
    )
    return 0 if not res.cops_win_overall else 2


def cmd_render(args) -> int:
    gid, g = load_graph(args.graph)
    _write_out(render_dot(g), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gpcops", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="girth classes and exception tags")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="exact game value for a fixed cop count")
    p.add_argument("--graph", required=True)
    p.add_argument("--cops", type=int, required=True)
    p.add_argument("--emit-strategy", action="store_true", dest="emit_strategy")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("copnumber", help="least winning cop count")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-cops", type=int, default=4, dest="max_cops")
    p.set_defaults(func=cmd_copnumber)

    p = sub.add_parser("scan-traps", help="2-trapped-but-not-trapped states")
    p.add_argument("--graph", required=True)
    p.add_argument("--cops", type=int, default=3)
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(func=cmd_scan_traps)

    p = sub.add_parser("detect", help="paired 8-cycles meeting in a 2-edge path")
    p.add_argument("--graph", required=True)
    p.add_argument("--limit", type=int, default=10)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("survey-families", help="paired-cycle detector vs parameter families")
    p.add_argument("--max-n", type=int, default=60, dest="max_n")
    p.add_argument("--out")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("coincidences", help="distance-4 label coincidence relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--side", choices=("A", "B"), required=True)
    p.add_argument("--all", action="store_true", help="full candidate list, not just satisfied")
    p.set_defaults(func=cmd_coincidences)

    p = sub.add_parser("tables", help="reproduce the published girth/cop tables")
    p.add_argument("which", choices=("full", "cop4"))
    p.add_argument("--max-n", type=int, default=30, dest="max_n")
    p.add_argument("--out")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--cache", help=f"cache CSV path (default ${tables.CACHE_ENV_VAR})")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify-girth9", help="high-girth lower bound check (opt-in)")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_verify_high_girth)

    p = sub.add_parser("render-dot", help="DOT export")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
