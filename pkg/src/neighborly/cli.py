"""Command-line interface.

Subcommands:
    construct     emit the generated 2-neighborly code for a width
    verify        check a code file for k-neighborliness
    tables        print a range of the a / b / c sequences
    search        exact n(k, d) by branch-and-bound (d <= 8)
    cover         emit the bipartite covering induced by the generated code
    cover-verify  check a covering file against a multiplicity bound
    game solve    exhaustively score the splitting game
    heatmap       render a code file as SVG or PPM
    serve         run the JSON game service

Exit status: 0 on success / verification pass, 1 on verification failure,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import files
from .covering import code_to_covering, verify_covering
from .game import Move, solve
from .heatmap import FORMATS, render_heatmap
from .search import SearchConfig, max_code
from .sequences import a, b, c
from .strings import is_k_neighborly
from .triples import generate_code


def _write_text(out: str | None, text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_bytes(out: str | None, data: bytes) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _cmd_construct(args) -> int:
    code = generate_code(args.d)
    _write_text(args.out, files.format_code(code, k=2))
    return 0


def _cmd_verify(args) -> int:
    code, header_k, _ = files.load_code(args.file)
    k = args.k if args.k is not None else header_k
    if k is None:
        print("error: no --k given and the file has no k= header", file=sys.stderr)
        return 2
    verdict = is_k_neighborly(code, k)
    if verdict:
        print(f"pass: {len(code)} strings of width {code.width} are {k}-neighborly")
        return 0
    i, j = verdict.pair
    print(
        f"fail: strings {i} ({code[i]}) and {j} ({code[j]}) "
        f"are at distance {verdict.distance}, outside [1, {k}]"
    )
    return 1


def _cmd_tables(args) -> int:
    fn = {"a": a, "b": b, "c": c}[args.seq]
    values = [fn(i) for i in range(args.start, args.end + 1)]
    print(",".join(str(v) for v in values))
    return 0


def _cmd_search(args) -> int:
    seed_code = None
    if args.seed_file:
        seed_code, _, _ = files.load_code(args.seed_file)
    cfg = SearchConfig(
        k=args.k,
        d=args.d,
        time_budget=args.budget,
        symmetry_reduction=not args.no_symmetry,
        lower_bound_seed=seed_code,
    )
    result = max_code(cfg)
    status = "optimal" if result.proven_optimal else "lower bound (budget exhausted)"
    print(f"n({args.k},{args.d}) >= {result.best_size} [{status}]")
    print(f"nodes explored: {result.nodes_explored}, elapsed: {result.elapsed:.2f}s")
    if args.out:
        _write_text(args.out, files.format_code(result.best_code, k=args.k))
    return 0


def _cmd_cover(args) -> int:
    code = generate_code(args.d)
    cov = code_to_covering(code)
    _write_text(args.out, files.format_covering(cov))
    return 0


def _cmd_cover_verify(args) -> int:
    cov = files.load_covering(args.file)
    verdict = verify_covering(cov, args.k)
    if verdict:
        print(
            f"pass: {len(cov.cliques)} cliques form a {args.k}-covering "
            f"of K_{cov.n_vertices}"
        )
        return 0
    print(f"fail: edge {verdict.edge} is covered {verdict.count} times")
    return 1


def _cmd_game_solve(args) -> int:
    result = solve(args.k, args.d, time_budget=args.budget)
    status = "proven" if result.proven else "best found (budget exhausted)"
    print(f"score({args.k},{args.d}) = {result.score} [{status}]")
    line = " ".join(f"({m.index}, {m.position})" for m in result.line)
    print(f"line: {line}")
    return 0


def _cmd_heatmap(args) -> int:
    code, _, _ = files.load_code(args.file)
    data = render_heatmap(code, fmt=args.format, cell_size=args.cell_size)
    _write_bytes(args.out, data)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neighborly", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the generated code for a width")
    p.add_argument("--d", type=int, required=True, help="code width (>= 2)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="check a code file for k-neighborliness")
    p.add_argument("--file", required=True)
    p.add_argument("--k", type=int, help="bound (default: the file's k= header)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("tables", help="print a sequence range")
    p.add_argument("--seq", choices=("a", "b", "c"), required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("search", help="exact n(k, d) by branch-and-bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=float, default=300.0, help="seconds (default 300)")
    p.add_argument("--no-symmetry", action="store_true", help="disable symmetry reduction")
    p.add_argument("--seed-file", help="code file used as the incumbent")
    p.add_argument("--out", help="write the best code found to this file")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("cover", help="emit the covering induced by the generated code")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("cover-verify", help="check a covering file")
    p.add_argument("--file", required=True)
    p.add_argument("--k", type=int, required=True, help="maximum multiplicity")
    p.set_defaults(fn=_cmd_cover_verify)

    p = sub.add_parser("game", help="splitting game commands")
    game_sub = p.add_subparsers(dest="game_command", required=True)
    g = game_sub.add_parser("solve", help="exhaustively score the game")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--budget", type=float, default=300.0, help="seconds (default 300)")
    g.set_defaults(fn=_cmd_game_solve)

    p = sub.add_parser("heatmap", help="render a code file")
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=FORMATS, default="svg")
    p.add_argument("--cell-size", type=int, default=16)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_heatmap)

    p = sub.add_parser("serve", help="run the JSON game service")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
