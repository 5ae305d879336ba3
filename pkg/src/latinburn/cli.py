"""Command-line front end.

    latinburn gen cyclic 5 -o c5.ls
    latinburn analyze c5.ls --oracle --json
    latinburn burn c3.ls HL "0,0;0,1;1,0"
    latinburn verify --all

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as suites
from .burning import build_H3L, build_HL, lazy_burn
from .errors import LatinBurnError
from .groups import cayley_square, group_from_table, min_generating_size, named_group
from .latin import (
    Entry,
    LatinSquare,
    LineRef,
    cyclic,
    intercalate_power,
    parse,
    product,
    random_square,
    serialize,
)
from .report import AnalysisReport, analyze

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    # Subcommands re-declare the global flags with SUPPRESS defaults so they
    # may appear on either side of the subcommand name.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    parser.add_argument(
        "--human", action="store_true", default=d(False), help="1-based labels in text output"
    )
    parser.add_argument("--max-order", type=int, default=d(None), help="order guard for oracles")
    parser.add_argument("--seed", type=int, default=d(0), help="RNG seed")
    parser.add_argument(
        "--override-guard", action="store_true", default=d(False), help="lift order guards"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latinburn", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a generated square as .ls")
    gen.add_argument("kind", choices=["cyclic", "ipow", "product", "cayley", "random"])
    gen.add_argument("params", nargs="+")
    gen.add_argument("-o", "--out", help="output file (default stdout)")

    an = sub.add_parser("analyze", parents=[common], help="scc, mcs and lazy burning numbers")
    an.add_argument("file")
    an.add_argument("--oracle", action="store_true", help="also run exhaustive oracles")
    an.add_argument("--as-group", action="store_true", help="treat the grid as a group table")

    burn = sub.add_parser("burn", parents=[common], help="trace lazy burning from a seed")
    burn.add_argument("file")
    burn.add_argument("mode", choices=["HL", "H3L"])
    burn.add_argument("seed_spec", nargs="?", default="", help='"r,c;r,c" (HL) or "R0;C2;S1" (H3L)')

    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--all", action="store_true")
    for name in suites.SUITES:
        ver.add_argument(f"--{name}", action="store_true")
    ver.add_argument("--n-max", type=int, default=16, help="largest cyclic order")
    ver.add_argument("--samples", type=int, default=1000, help="characterization samples")
    ver.add_argument("--dump-dir", help="write counterexamples here as .ls + .json")
    return parser


def _generator_square(spec: str) -> LatinSquare:
    """``cyclic:5``, ``ipow:2``, ``cayley:s3`` or a path to a .ls file."""
    kind, _, arg = spec.partition(":")
    if kind == "cyclic" and arg:
        return cyclic(int(arg))
    if kind == "ipow" and arg:
        return intercalate_power(int(arg))
    if kind == "cayley" and arg:
        return cayley_square(named_group(arg))
    return _read_square(spec)


def _read_square(path: str) -> LatinSquare:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def cmd_gen(args) -> int:
    p = args.params
    if args.kind == "cyclic":
        square = cyclic(int(p[0]))
    elif args.kind == "ipow":
        square = intercalate_power(int(p[0]))
    elif args.kind == "product":
        if len(p) != 2:
            raise UsageError("product takes two squares, e.g. cyclic:2 cyclic:3")
        square = product(_generator_square(p[0]), _generator_square(p[1]))
    elif args.kind == "cayley":
        square = cayley_square(named_group(p[0]))
    else:
        square = random_square(int(p[0]), int(p[1]) if len(p) > 1 else args.seed)
    text = serialize(square)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _fmt_entry(e: Entry, shift: int) -> str:
    return f"({e.row + shift},{e.col + shift},{e.sym + shift})"


def _fmt_label(label, shift: int) -> str:
    if isinstance(label, Entry):
        return _fmt_entry(label, shift)
    if isinstance(label, LineRef):
        return f"{label.kind.tag}{label.index + shift}"
    return str(label)


def _print_report(rep: AnalysisReport, shift: int):
    def show(name, formula, oracle):
        extra = "" if oracle is None else f"  (oracle {oracle})"
        print(f"{name:<8} {formula}{extra}")

    print(f"order    {rep.order}")
    show("scc", rep.scc, None)
    show("mcs", rep.mcs, rep.mcs_exhaustive)
    show("bl_HL", rep.bl_HL, rep.bl_HL_oracle)
    show("bl_H3L", rep.bl_H3L, rep.bl_H3L_oracle)
    if rep.chain is not None:
        steps = ", ".join(_fmt_label(l, shift) for l in rep.chain.witness_lines)
        cell = rep.chain.squares[1]
        print(f"chain    cell r{min(cell.rows) + shift} c{min(cell.cols) + shift}; lines [{steps}]")
    if rep.bl_H3L_witness:
        print("H^L seed " + " ".join(_fmt_label(l, shift) for l in rep.bl_H3L_witness))
    for flag in ("duality_ok", "bounds_ok", "witnesses_ok"):
        value = getattr(rep, flag)
        print(f"{flag:<12} {'n/a' if value is None else str(value).lower()}")
    for w in rep.warnings:
        print(f"warning: {w}")
    for m in rep.mismatches:
        print(f"MISMATCH: {m}")


def cmd_analyze(args) -> int:
    square = _read_square(args.file)
    alpha = None
    if args.as_group:
        group = group_from_table(square.grid)
        alpha = min_generating_size(group, guard=max(64, group.order) if args.override_guard else 64)[0]
    max_order = args.max_order if args.max_order is not None else 5
    rep = analyze(square, oracle=args.oracle, max_order=max_order, allow_large=args.override_guard)
    if alpha is not None and rep.scc != alpha + 1 and not rep.degenerate:
        rep.warnings.append(f"scc {rep.scc} != generators+1 = {alpha + 1}")
        rep.witnesses_ok = False
    if args.json:
        out = rep.to_json()
        if alpha is not None:
            out["generators"] = alpha
        print(json.dumps(out, indent=2))
    else:
        _print_report(rep, 1 if args.human else 0)
        if alpha is not None:
            print(f"generators {alpha}")
    return EXIT_OK if rep.consistent else EXIT_FAIL


def parse_seed(spec: str, mode: str, n: int) -> list:
    spec = spec.strip()
    if not spec:
        return []
    out = []
    for part in spec.split(";"):
        part = part.strip()
        try:
            if mode == "HL":
                r, c = (int(x) for x in part.split(","))
                if not (0 <= r < n and 0 <= c < n):
                    raise ValueError
                out.append((r, c))
            else:
                line = LineRef.parse(part)
                if not 0 <= line.index < n:
                    raise ValueError
                out.append(line)
        except ValueError:
            raise UsageError(f"malformed seed element {part!r} for mode {mode}") from None
    return out


def cmd_burn(args) -> int:
    square = _read_square(args.file)
    n = square.order
    seed = parse_seed(args.seed_spec, args.mode, n)
    if args.mode == "HL":
        hyper = build_HL(square)
        labels = [square.entry(r, c) for r, c in seed]
    else:
        hyper = build_H3L(square)
        labels = seed
    trace = lazy_burn(hyper, labels)
    if args.json:
        print(json.dumps(trace.to_json(hyper)))
        return EXIT_OK
    shift = 1 if args.human else 0
    print("seed: " + " ".join(_fmt_label(hyper.label(v), shift) for v in sorted(trace.seed)))
    for t, layer in enumerate(trace.layers(), start=1):
        print(f"round {t}: " + " ".join(_fmt_label(hyper.label(v), shift) for v in layer))
    print(f"rounds {trace.rounds}, complete {str(trace.complete).lower()}")
    return EXIT_OK


def _dump(result, dump_dir: str | None):
    if result.counterexample is None:
        return
    stem = result.name.split()[0]
    if dump_dir:
        folder = Path(dump_dir)
        folder.mkdir(parents=True, exist_ok=True)
        (folder / f"{stem}.ls").write_text(serialize(result.counterexample))
        (folder / f"{stem}.json").write_text(json.dumps(result.witness, indent=2, default=str))
    else:
        print(serialize(result.counterexample), end="", file=sys.stderr)
        print(json.dumps(result.witness, default=str), file=sys.stderr)


def cmd_verify(args) -> int:
    chosen = [name for name in suites.SUITES if getattr(args, name)]
    if args.all or not chosen:
        chosen = list(suites.SUITES)
    max_order = args.max_order if args.max_order is not None else 4
    if max_order > 4 and not args.override_guard:
        raise UsageError("exhaustive enumeration above order 4 needs --override-guard")
    kwargs = {
        "exhaustive": {"max_order": max_order},
        "order5": {"seed": args.seed},
        "cyclic": {"n_max": args.n_max},
        "characterization": {"samples": args.samples, "seed": args.seed},
        "groups": {"seed": args.seed},
        "roundtrip": {"n_max": args.n_max},
    }
    results = []
    for name in chosen:
        res = suites.SUITES[name](**kwargs.get(name, {}))
        results.append(res)
        if not args.json:
            print(res.summary())
        if not res.passed:
            _dump(res, args.dump_dir)
    if args.json:
        print(
            json.dumps(
                [
                    {"suite": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures}
                    for r in results
                ],
                indent=2,
            )
        )
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "burn": cmd_burn, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, LatinBurnError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
