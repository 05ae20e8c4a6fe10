"""Command-line interface: ``spbranch {multiplicity,list,map,graph,verify}``.

Exit codes: 0 success, 1 usage or domain error, 2 mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bijection, cascade, verify
from .branching import BranchingQuery, hw_tableaux, lr_tableaux, report
from .core import DomainError, Partition, SkewShape, Tableau
from .crystal import crystal_graph
from .formats import format_tableau, parse_tableau, tableau_from_json, tableau_to_json

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2
METHODS = ("crystal", "sundaram", "stable", "character")


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if any(p < 0 for p in parts):
        raise UsageError(f"negative part in {text!r}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"partition {text!r} is not weakly decreasing")
    return Partition(parts)


def parse_rank(text: Optional[str]) -> Optional[int]:
    if text is None or text == "inf":
        return None
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"--n must be a positive integer or 'inf', got {text!r}") from None
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    return n


def parse_ranks(text: str) -> tuple:
    ranks = tuple(parse_rank(x) for x in text.split(",") if x.strip())
    if not ranks or any(n is None for n in ranks):
        raise UsageError("--n for verify must be a comma-separated list of positive integers")
    return ranks


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_multiplicity(args) -> int:
    lam, mu, n = parse_partition(args.lam), parse_partition(args.mu), parse_rank(args.n)
    methods = METHODS if args.method == "all" else (args.method,)
    if n is None and "sundaram" in methods and args.method != "all":
        raise DomainError("the sundaram method needs a finite --n; use --method stable")
    if n is None and "character" in methods and args.method != "all":
        raise DomainError("the character method needs a finite --n")
    rep = report(lam, mu, n, methods)
    if args.format == "json":
        _out(rep.to_json())
    else:
        for k, v in rep.methods().items():
            _out(f"{k}={v}")
    if not rep.consistent():
        sys.stderr.write(f"methods disagree: {rep.methods()}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_list(args) -> int:
    lam, mu, n = parse_partition(args.lam), parse_partition(args.mu), parse_rank(args.n)
    q = BranchingQuery(lam, mu, n)
    items = list(hw_tableaux(q) if args.kind == "hwt" else lr_tableaux(q))
    if args.format == "json":
        _out(json.dumps([tableau_to_json(t) for t in items]))
        return EXIT_OK
    # blank-line separated, so the listing parses back with parse_tableaux
    for t in items:
        _out(format_tableau(t) or "(empty)")
        _out("")
    _out(f"# {len(items)} tableau{'x' if len(items) != 1 else ''}")
    return EXIT_OK


def _read_input(args) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _load_tableau(text: str, fmt: str, lam: Optional[Partition], mu: Optional[Partition], direction: str) -> Tableau:
    if fmt == "json":
        t = tableau_from_json(text)
    else:
        t = parse_tableau(text)
        if t.shape.size == 0 and lam is not None and not t.rows:
            t = Tableau.empty(SkewShape(lam, mu if mu is not None else lam))
    if lam is not None and t.shape.outer != lam:
        raise DomainError(f"input has outer shape {tuple(t.shape.outer)}, expected {tuple(lam)}")
    if mu is not None and direction == "forward" and t.shape.inner != mu:
        raise DomainError(f"input has inner shape {tuple(t.shape.inner)}, expected {tuple(mu)}")
    return t


def cmd_map(args) -> int:
    lam = parse_partition(args.lam) if args.lam is not None else None
    mu = parse_partition(args.mu) if args.mu is not None else None
    t = _load_tableau(_read_input(args), args.format, lam, mu, args.direction)
    if args.direction == "forward":
        pair = bijection.F_traced(t)
        result = pair.hw
    else:
        pair = bijection.F_inverse_traced(t)
        result = pair.lr
        if mu is not None and result.shape.inner != mu:
            raise DomainError(f"input has sp weight {tuple(result.shape.inner)}, expected {tuple(mu)}")
    if args.trace:
        _print_trace(pair)
    if args.format == "json":
        _out(json.dumps(tableau_to_json(result)))
    else:
        text = format_tableau(result)
        _out(text if text else "(empty)")
    return EXIT_OK


def _print_trace(pair: bijection.BranchPair) -> None:
    """Each step line followed by the tableau it produced, then a blank line."""
    lr, hw = pair.lr, pair.hw
    for rec in pair.lr_steps:
        lr, _ = cascade.iota_lr(lr)
        _out(rec.trace_line())
        _out(format_tableau(lr) or "(empty)")
    for rec in pair.sp_steps:
        hw = cascade.iota_sp(hw)
        _out(rec.trace_line())
        _out(format_tableau(hw) or "(empty)")
    _out("")


def cmd_graph(args) -> int:
    lam, n = parse_partition(args.lam), parse_rank(args.n)
    if n is None:
        raise UsageError("graph needs a finite --n")
    g = crystal_graph(lam, n, args.algebra)
    _out(g.to_dot() if args.format == "dot" else g.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_cells < 0 or args.max_rows < 0:
        raise UsageError("bounds must be nonnegative")
    b = verify.Bounds(args.max_cells, args.max_rows, parse_ranks(args.n))
    results = verify.run_all(b, seed=args.seed)
    for r in results:
        _out(r.summary_line())
    bad = [r for r in results if not r.ok]
    for r in bad:
        if r.failures:
            _out(r.dump())
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spbranch", description="Symplectic branching via crystals.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("multiplicity", help="branching multiplicity [V_gl(lambda) : V_sp(mu)]")
    m.add_argument("--lambda", dest="lam", required=True)
    m.add_argument("--mu", required=True)
    m.add_argument("--n", default="inf")
    m.add_argument("--method", choices=METHODS + ("all",), default="crystal")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_multiplicity)

    ls = sub.add_parser("list", help="list sp-highest or LR tableaux")
    ls.add_argument("--kind", choices=("hwt", "lr"), required=True)
    ls.add_argument("--lambda", dest="lam", required=True)
    ls.add_argument("--mu", required=True)
    ls.add_argument("--n", default="inf")
    ls.add_argument("--format", choices=("text", "json"), default="text")
    ls.set_defaults(func=cmd_list)

    mp = sub.add_parser("map", help="apply the bijection or its inverse")
    mp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    mp.add_argument("--lambda", dest="lam")
    mp.add_argument("--mu")
    mp.add_argument("--trace", action="store_true")
    mp.add_argument("--file")
    mp.add_argument("--format", choices=("text", "json"), default="text")
    mp.set_defaults(func=cmd_map)

    g = sub.add_parser("graph", help="emit a crystal graph")
    g.add_argument("--lambda", dest="lam", required=True)
    g.add_argument("--n", required=True)
    g.add_argument("--algebra", choices=("gl", "sp"), default="gl")
    g.add_argument("--format", choices=("dot", "json"), default="dot")
    g.set_defaults(func=cmd_graph)

    v = sub.add_parser("verify", help="run the exhaustive cross-checks")
    v.add_argument("--max-cells", type=int, default=8)
    v.add_argument("--max-rows", type=int, default=5)
    v.add_argument("--n", default="2,3")
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
