"""
Command-line front end.

    gvmhom orbit --k 2 --n 7 --emit dot
    gvmhom sk --k 4 --emit json
    gvmhom hasse --k 2 --n 5
    gvmhom verify --grid default --oracle

Exit status: 0 when every declared check holds, 1 when one fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .dirac import DEFAULT_MAX_RANK, analyze_orbit, sk_graph
from .emit import emit_dot, emit_hasse_dot, emit_hasse_json, emit_json, emit_text
from .verify import GRIDS, grading_drop_check, verify_paper_suite
from .weights import ParabolicContext
from .weyl import RankTooLarge, parabolic_hasse

log = logging.getLogger("gvmhom")


@dataclass(frozen=True)
class CliConfig:
    command: str
    k: int | None = None
    n: int | None = None
    emit: str = "text"
    output: Path | None = None
    oracle: bool = False
    max_rank: int = DEFAULT_MAX_RANK
    grid: str = "default"
    max_length: int | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvmhom",
        description="Standard homomorphisms of generalized Verma modules on the Dirac orbit "
                    "of so(n+2k) with node k crossed.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=need_n, default=None if need_n else 3)
        p.add_argument("--emit", choices=("dot", "json", "text"), default="text")
        p.add_argument("-o", "--output", type=Path, help="write here instead of stdout")
        p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)

    common(sub.add_parser("orbit", help="homomorphism graph on the p-dominant orbit weights"))
    common(sub.add_parser("sk", help="the recursively defined graph S_k"), need_n=False)
    hasse = sub.add_parser("hasse", help="parabolic Hasse graph")
    common(hasse)
    hasse.add_argument("--max-length", type=int, default=None)
    verify = sub.add_parser("verify", help="run the check table over a (k, n) grid")
    verify.add_argument("--grid", choices=sorted(GRIDS), default="default")
    verify.add_argument("--oracle", action="store_true", help="also run brute-force cross-checks")
    verify.add_argument("-o", "--output", type=Path)
    return parser


def _config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(
        command=args.command,
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        emit=getattr(args, "emit", "text"),
        output=args.output,
        oracle=getattr(args, "oracle", False),
        max_rank=getattr(args, "max_rank", DEFAULT_MAX_RANK),
        grid=getattr(args, "grid", "default"),
        max_length=getattr(args, "max_length", None),
    )
    if cfg.n is not None and (cfg.n < 3 or cfg.n % 2 == 0):
        parser.error(f"--n must be an odd integer >= 3, got {cfg.n}")
    if cfg.k is not None and cfg.k < 1:
        parser.error(f"--k must be positive, got {cfg.k}")
    return cfg


def _write(cfg: CliConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        cfg.output.write_text(text, encoding="utf-8")


def _run(cfg: CliConfig) -> int:
    if cfg.command == "orbit":
        report = analyze_orbit(cfg.k, cfg.n, max_rank=cfg.max_rank)
        render = {"dot": emit_dot, "json": emit_json, "text": emit_text}[cfg.emit]
        _write(cfg, render(report))
        if not report.matches_sk:
            log.error("the Dirac-family graph does not match S_%d", cfg.k)
            return 1
        return 0

    if cfg.command == "sk":
        ctx = ParabolicContext(cfg.k, cfg.n)
        graph = sk_graph(cfg.k, ctx)
        if cfg.emit == "dot":
            _write(cfg, emit_dot(graph, name="sk"))
        elif cfg.emit == "json":
            import json
            doc = {
                "k": cfg.k, "n": cfg.n,
                "weights": [str(v) for v in graph.vertices],
                "edges": [{"from": a, "to": b, "order": o, "bound": int(d)}
                          for a, b, o, d in graph.arrows],
            }
            _write(cfg, json.dumps(doc, indent=2) + "\n")
        else:
            lines = [f"S_{cfg.k}: {len(graph.vertices)} vertices, {len(graph.arrows)} arrows"]
            lines += [f"  {graph.vertices[a]} -> {graph.vertices[b]}  order {o}"
                      for a, b, o, _ in graph.arrows]
            _write(cfg, "\n".join(lines) + "\n")
        return 0

    if cfg.command == "hasse":
        ctx = ParabolicContext(cfg.k, cfg.n)
        if ctx.m > cfg.max_rank:
            raise RankTooLarge(f"rank {ctx.m} exceeds --max-rank {cfg.max_rank}")
        graph = parabolic_hasse(ctx, cfg.max_length)
        if cfg.emit == "dot":
            _write(cfg, emit_hasse_dot(graph))
        elif cfg.emit == "json":
            _write(cfg, emit_hasse_json(graph))
        else:
            _write(cfg, f"W^p for B_{ctx.m}, k={ctx.k}: {len(graph.vertices)} vertices, "
                        f"{len(graph.arrows)} arrows\n")
        _, bad = grading_drop_check(ctx) if cfg.max_length is None else (0, [])
        return 1 if bad else 0

    results = verify_paper_suite(GRIDS[cfg.grid], oracle=cfg.oracle)
    table = "\n".join(r.line() for r in results)
    failed = sum(not r.passed for r in results)
    _write(cfg, f"{table}\n{len(results) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def run_cli(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(cfg)
    except (RankTooLarge, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"gvmhom: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
