"""Command-line interface: ``injcolor <command> ...``.

Exit codes: 0 success, 1 verification failure or generic error, 2 hypothesis
violated, 3 solver stalled, 4 reducible configuration present, 64 usage,
65 malformed input data, 66 unreadable input, 70 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import gen
from .density import mad_exact
from .discharge import discharge
from .errors import (CaseMismatch, ConfigPresent, DeficitFound, GenerationFailed, GraphError,
                     HypothesisViolated, InjColorError, Stalled, UncoloredVertex)
from .formats import FORMATS, coloring_from_json, coloring_to_json, emit_graph, guess_format, parse_graph
from .graph import neighboring_graph, verify_injective
from .listcolor import chi_exact
from .reduce import Case, case_for
from .solver import BOUND_DELTA3, BOUND_GENERAL, color_injective

EX_OK, EX_FAIL, EX_HYPOTHESIS, EX_STALLED, EX_CONFIG = 0, 1, 2, 3, 4
EX_USAGE, EX_DATAERR, EX_NOINPUT, EX_SOFTWARE = 64, 65, 66, 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _load(path: str, fmt: str | None):
    return parse_graph(path, fmt or guess_format(path))


def _inputs(path: str) -> list[str]:
    if os.path.isdir(path):
        return sorted(os.path.join(path, f) for f in os.listdir(path)
                      if os.path.isfile(os.path.join(path, f)) and not f.endswith(".json"))
    return [path]


def _fan_out(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _analyze_one(arg):
    path, fmt = arg
    g = _load(path, fmt)
    lines = [f"file: {path}", f"n: {g.n}", f"m: {g.m}", f"max_degree: {g.max_degree if g.n else 0}"]
    if g.n == 0:
        lines.append("mad: undefined")
    else:
        mad = mad_exact(g).density
        lines.append(f"mad: {frac(mad)} ({float(mad):.6f})")
        lines.append(f"mad < 36/13: {'yes' if mad < BOUND_DELTA3 else 'no'}")
        lines.append(f"mad < 14/5: {'yes' if mad < BOUND_GENERAL else 'no'}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    out = _fan_out(_analyze_one, [(p, args.format) for p in _inputs(args.file)], args.jobs)
    print("\n\n".join(out))
    return EX_OK


# ---------------------------------------------------------------------------
# color
# ---------------------------------------------------------------------------


def _color_one(arg):
    path, fmt, mode = arg
    g = _load(path, fmt)
    try:
        col, rep = color_injective(g, mode)
    except HypothesisViolated as exc:
        return path, EX_HYPOTHESIS, f"hypothesis violated: mad = {frac(exc.mad)} is not < {frac(exc.bound)}", None
    except Stalled as exc:
        return path, EX_STALLED, f"stalled: {exc}", None
    mad = rep.mad
    msg = (f"palette: {col.palette}\ncolors_used: {col.used}\nmax_degree: {rep.delta}\n"
           f"mad: {frac(mad) if mad is not None else '-'}\nreductions: {len(rep.trace)}\n"
           f"seconds: {rep.seconds:.4f}")
    return path, EX_OK, msg, coloring_to_json(col)


def cmd_color(args) -> int:
    paths = _inputs(args.file)
    results = _fan_out(_color_one, [(p, args.format, args.mode) for p in paths], args.jobs)
    code = EX_OK
    for path, rc, msg, doc in results:
        if len(paths) > 1:
            print(f"file: {path}")
        print(msg, file=sys.stdout if rc == EX_OK else sys.stderr)
        if doc is not None:
            if args.out and len(paths) == 1:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(doc + "\n")
            elif args.out:
                os.makedirs(args.out, exist_ok=True)
                target = os.path.join(args.out, os.path.basename(path) + ".json")
                with open(target, "w", encoding="utf-8") as fh:
                    fh.write(doc + "\n")
            elif args.json:
                print(doc)
        code = max(code, rc)
    return code


# ---------------------------------------------------------------------------
# verify / exact
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load(args.graph, args.format)
    with open(args.coloring, encoding="utf-8") as fh:
        col = coloring_from_json(fh.read())
    if len(col) != g.n:
        print(f"coloring has {len(col)} entries for {g.n} vertices")
        return EX_FAIL
    try:
        bad = verify_injective(g, col)
    except UncoloredVertex as exc:
        print(f"vertex {exc.vertex} is uncolored")
        return EX_FAIL
    if bad is None:
        print(f"ok: injective coloring with {col.used} colors")
        return EX_OK
    print(f"violation: vertices {bad.u} and {bad.v} share neighbour {bad.shared_neighbor} "
          f"and both have color {col[bad.u]} (0-based ids)")
    return EX_FAIL


def cmd_exact(args) -> int:
    g = _load(args.file, args.format)
    ub = args.ub if args.ub is not None else max(1, g.n)
    res = chi_exact(neighboring_graph(g), ub)
    if res is None:
        print(f"chi_i > {ub}")
        return EX_FAIL
    k, col = res
    print(f"chi_i: {k}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(coloring_to_json(col) + "\n")
    return EX_OK


# ---------------------------------------------------------------------------
# discharge
# ---------------------------------------------------------------------------

_CASES = {"d3": Case.D3, "d4": Case.D4, "d5": Case.D5, "d6": Case.D6PLUS}


def _party(x):
    return x if isinstance(x, str) else int(x)


def ledger_document(ledger, case: Case) -> dict:
    return {
        "case": case.value,
        "n": len(ledger.final),
        "conserved": ledger.conserved(),
        "bank": frac(ledger.bank),
        "min_final": frac(ledger.min_final()) if ledger.final else None,
        "surplus": [frac(s) for s in ledger.surplus],
        "final": [frac(c) for c in ledger.final],
        "log": [[rule, _party(d), _party(r), frac(a)] for rule, d, r, a in ledger.log],
    }


def cmd_discharge(args) -> int:
    g = _load(args.file, args.format)
    delta = g.max_degree if g.n else 0
    case = case_for(max(delta, 3)) if args.case == "auto" else _CASES[args.case]
    try:
        ledger = discharge(g, case, max(delta, 6) if case is Case.D6PLUS else None)
    except ConfigPresent as exc:
        print(f"reducible configuration present: {exc.config}", file=sys.stderr)
        return EX_CONFIG
    except CaseMismatch as exc:
        print(f"case mismatch: {exc}", file=sys.stderr)
        return EX_USAGE
    except DeficitFound as exc:
        print(f"deficit: {exc}", file=sys.stderr)
        return EX_SOFTWARE
    print(json.dumps(ledger_document(ledger, case), indent=1))
    return EX_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def cmd_generate(args) -> int:
    fam = args.family
    try:
        if fam == "random":
            if args.n is None or args.delta is None:
                print("random needs --n and --delta", file=sys.stderr)
                return EX_USAGE
            bound = Fraction(args.bound) if args.bound else (BOUND_DELTA3 if args.delta == 3 else BOUND_GENERAL)
            g = gen.random_sparse(args.n, args.delta, bound, args.seed)
        elif fam == "k-gadget":
            g = gen.k_gadget(args.seed)
        elif fam == "quartic-girth5":
            g = gen.quartic_girth5(args.seed)
        else:
            g = gen.classics(fam, args.size if args.size is not None else args.n)
    except GenerationFailed as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return EX_FAIL
    except (InjColorError, ValueError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EX_USAGE
    if args.subdivide:
        g = gen.subdivide(g, args.subdivide)
    text = emit_graph(g, args.format or "dimacs")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


FAMILIES = sorted(list(gen.CLASSICS) + ["random", "k-gadget", "quartic-girth5"])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="injcolor", description="Injective colorings of sparse graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_fmt(sp):
        sp.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (default: by extension, dimacs otherwise)")

    a = sub.add_parser("analyze", help="size, maximum degree and exact mad")
    a.add_argument("file")
    add_fmt(a)
    a.add_argument("--jobs", type=int, default=1)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("color", help="injective coloring with Delta + 2 colors")
    c.add_argument("file")
    add_fmt(c)
    c.add_argument("--mode", choices=("strict", "force"), default="strict")
    c.add_argument("--out", help="coloring JSON (a directory when FILE is one)")
    c.add_argument("--json", action="store_true", help="print the coloring JSON")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring is injective")
    v.add_argument("graph")
    v.add_argument("coloring")
    add_fmt(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="exact injective chromatic number")
    e.add_argument("file")
    add_fmt(e)
    e.add_argument("--ub", type=int, default=None)
    e.add_argument("--out")
    e.set_defaults(func=cmd_exact)

    d = sub.add_parser("discharge", help="charge ledger as JSON")
    d.add_argument("file")
    add_fmt(d)
    d.add_argument("--case", choices=("auto", "d3", "d4", "d5", "d6"), default="auto")
    d.set_defaults(func=cmd_discharge)

    gp = sub.add_parser("generate", help="write a graph")
    gp.add_argument("family", choices=FAMILIES)
    gp.add_argument("size", nargs="?", type=int)
    gp.add_argument("--n", type=int)
    gp.add_argument("--delta", type=int)
    gp.add_argument("--bound", help="mad bound as p/q (random family)")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--subdivide", type=int, default=0, metavar="K")
    gp.add_argument("--format", choices=FORMATS, default=None)
    gp.add_argument("--out")
    gp.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except GraphError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
