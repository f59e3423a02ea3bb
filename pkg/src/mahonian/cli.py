"""Command-line front end.

Usage:
    mahonian enumerate --n 3 --k 1 [--as digraph]
    mahonian stats --word "3 2 5 * 1 8 6 *"
    mahonian stats --digraph '{"n":1,"succ":{"1":1}}'
    mahonian poly distribution --n 4 --k 2 --stat maj
    mahonian verify thm2.1 --n-max 6
    mahonian verify --all --n-max 5

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from mahonian import carlitz, digraphs, jacobi_rogers as jr, permstats
from mahonian.polyring import Poly, registry
from mahonian.verify import TASKS, run_task

FORMATS = ("text", "json", "csv", "dot")
POLY_KINDS = ("distribution", "closed-form", "hrw", "wilson", "ld", "cyc", "lin",
              "zhu", "mu", "cf", "ortho")


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("MAHONIAN_MAX_N", "9")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MAHONIAN_MAX_N must be an integer, got {raw!r}") from None


def _check_bound(value: int, what: str = "n") -> int:
    if value < 0:
        raise UsageError(f"{what} must be nonnegative")
    ceiling = max_n()
    if value > ceiling:
        raise UsageError(f"{what}={value} exceeds the ceiling MAHONIAN_MAX_N={ceiling}")
    return value


def _check_nk(n: int, k: int) -> None:
    _check_bound(n)
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _csv_text(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _poly_csv(p: Poly) -> str:
    names = [v for v in registry() if v in p.variables()]
    rows = [["coef", *names]]
    for mono, c in p.sorted_terms():
        d = dict(mono)
        rows.append([c, *(d.get(v, 0) for v in names)])
    return _csv_text(rows)


# -- subcommands ------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    _check_nk(args.n, args.k)
    fmt = args.format
    if fmt == "dot" and args.as_ != "digraph":
        raise UsageError("--format dot needs --as digraph")
    if fmt == "csv":
        out.write("index,word\n")
    for i, w in enumerate(permstats.enumerate_words(args.n, args.k)):
        if args.as_ == "digraph":
            G = digraphs.word_digraph(w)
            if fmt == "json":
                line = json.dumps(G.to_json(), separators=(",", ":"))
            elif fmt == "dot":
                line = G.to_dot()
            elif fmt == "csv":
                line = f'{i},"{G}"'
            else:
                line = str(G)
        else:
            if fmt == "json":
                line = json.dumps(w.to_json())
            elif fmt == "csv":
                line = f"{i},{w}"
            else:
                line = str(w)
        _emit(out, line)
    return 0


def _flat_rows(record: dict) -> list[list]:
    rows = [["stat", "value"]]
    for key, value in record.items():
        if isinstance(value, (list, tuple)):
            value = " ".join(map(str, value))
        elif isinstance(value, dict):
            value = json.dumps(value, sort_keys=True)
        rows.append([key, value])
    return rows


def cmd_stats(args, out) -> int:
    chosen = [x for x in (args.word, args.digraph, args.multiset) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --word, --digraph, --multiset")
    try:
        if args.word is not None:
            w = permstats.LaguerreWord.parse(args.word)
            record = {"word": str(w), **permstats.full_stats(w).to_json()}
            classes, ds = digraphs.classify(digraphs.word_digraph(w))
            record.update(ds.to_json())
            G = digraphs.word_digraph(w)
        elif args.digraph is not None:
            G = digraphs.LaguerreDigraph.from_json(args.digraph)
            classes, ds = digraphs.classify(G)
            record = {"digraph": G.to_json(), **ds.to_json(),
                      "classes": {str(i): c for i, c in classes.items()}}
        else:
            m = tuple(int(t) for t in args.multiset.replace(",", " ").split())
            if any(x < 1 for x in m):
                raise ValueError("multiset letters must be positive")
            G = None
            psi = carlitz.carlitz_psi(m)
            record = {
                "word": " ".join(map(str, m)), "alphabet": list(carlitz.alphabet_of(m)),
                "des_set": sorted(permstats.descent_set(m)),
                "inv": permstats.inversions(m), "maj": permstats.major_index(m),
                "b_code": list(carlitz.b_code(m)),
                "rlmin_set": sorted(carlitz.rlmin_multiset(m)),
                "psi": " ".join(map(str, psi)),
            }
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse object: {exc}") from None

    fmt = args.format
    if fmt == "json":
        _emit(out, json.dumps(record, sort_keys=False))
    elif fmt == "csv":
        out.write(_csv_text(_flat_rows(record)))
    elif fmt == "dot":
        if G is None:
            raise UsageError("--format dot needs a word or digraph")
        _emit(out, G.to_dot())
    else:
        for key, value in record.items():
            if isinstance(value, (list, tuple)):
                value = "{" + ",".join(map(str, value)) + "}" if key.endswith("_set") else " ".join(map(str, value))
            elif isinstance(value, dict):
                value = json.dumps(value, separators=(",", ":"))
            out.write(f"{key}={value}\n")
    return 0


def _poly_result(args):
    kind = args.kind
    jobs = args.jobs
    if kind in ("distribution", "closed-form", "hrw", "ld"):
        if args.n is None or args.k is None:
            raise UsageError(f"{kind} needs --n and --k")
        _check_nk(args.n, args.k)
    if kind in ("cyc", "lin", "zhu"):
        if args.n is None:
            raise UsageError(f"{kind} needs --n")
        _check_bound(args.n)
    if kind in ("mu", "cf", "ortho"):
        if args.N is None:
            raise UsageError(f"{kind} needs --N")
        _check_bound(args.N, "N")
    if kind == "distribution":
        holes = None
        if args.holes:
            holes = tuple(int(t) for t in args.holes.split(","))
            if len(holes) != args.k or any(not 1 <= h <= args.n for h in holes):
                raise UsageError("--holes must list k positions in [1, n]")
        return permstats.distribution(args.n, args.k, args.stat, rlmin=not args.no_rlmin,
                                      holes=holes, jobs=jobs)
    if kind == "closed-form":
        from mahonian.verify import closed_form_thm21
        return closed_form_thm21(args.n, args.k)
    if kind == "hrw":
        return permstats.hrw_sides(args.n, args.k, jobs=jobs)
    if kind == "wilson":
        if not args.alphabet:
            raise UsageError("wilson needs --alphabet")
        try:
            alphabet = carlitz.parse_alphabet(args.alphabet)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _check_bound(sum(alphabet))
        return carlitz.wilson_sides(alphabet, jobs=jobs)
    if kind == "ld":
        return digraphs.ld_enumerator(args.n, args.k, jobs=jobs)
    if kind == "cyc":
        return digraphs.perm_cycle_poly(args.n)
    if kind == "lin":
        if args.n < 1:
            raise UsageError("lin needs n >= 1")
        return digraphs.perm_linear_poly(args.n)
    if kind == "zhu":
        return digraphs.zhu_sides(args.n)
    try:
        params = jr.generic_params(args.N + 2) if args.preset == "generic" else jr.preset(args.preset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if kind == "mu":
        return jr.mu_table(params, args.N)
    if kind == "cf":
        return list(jr.cf_taylor(params, args.N).coeffs)
    return [jr.ortho_seq(params, args.N).as_poly(n) for n in range(args.N + 1)]


def cmd_poly(args, out) -> int:
    result = _poly_result(args)
    fmt = args.format
    if fmt == "dot":
        raise UsageError("--format dot applies to digraphs only")
    if isinstance(result, Poly):
        if fmt == "json":
            _emit(out, json.dumps(result.to_json()))
        elif fmt == "csv":
            out.write(_poly_csv(result))
        else:
            _emit(out, result.to_text())
        return 0
    if isinstance(result, jr.MuTable):
        if fmt == "json":
            _emit(out, json.dumps(result.to_json()))
        elif fmt == "csv":
            rows = [["n", "k", "mu"]]
            rows += [[n, k, p.to_text()] for n, row in enumerate(result.entries) for k, p in enumerate(row)]
            out.write(_csv_text(rows))
        else:
            for n, row in enumerate(result.entries):
                out.write(f"{n}: " + " | ".join(p.to_text() for p in row) + "\n")
        return 0
    # a pair of sides, or a list indexed by n
    labels = ["lhs", "rhs"] if isinstance(result, tuple) else [str(i) for i in range(len(result))]
    if fmt == "json":
        _emit(out, json.dumps({lab: p.to_json() for lab, p in zip(labels, result)}))
    elif fmt == "csv":
        out.write(_csv_text([["index", "poly"], *([lab, p.to_text()] for lab, p in zip(labels, result))]))
    else:
        for lab, p in zip(labels, result):
            out.write(f"{lab}: {p.to_text()}\n")
        if isinstance(result, tuple):
            out.write(f"equal: {result[0] == result[1]}\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.all:
        if args.ids:
            raise UsageError("give task ids or --all, not both")
        ids = list(TASKS)
    else:
        if not args.ids:
            raise UsageError("name at least one task id, or pass --all")
        ids = args.ids
    unknown = [i for i in ids if i not in TASKS]
    if unknown:
        raise UsageError(f"unknown task id(s): {', '.join(unknown)}; known: {', '.join(TASKS)}")
    plan = []
    for i in ids:
        if args.n_max is None:
            bound = TASKS[i].default
        elif args.all:
            bound = min(TASKS[i].default, args.n_max)
        else:
            bound = args.n_max
        plan.append((i, _check_bound(bound, "n-max")))

    reports = [run_task(i, bound, jobs=args.jobs) for i, bound in plan]
    fmt = args.format
    if fmt == "dot":
        raise UsageError("--format dot applies to digraphs only")
    if fmt == "json":
        data = [r.to_json(args.timing) for r in reports]
        _emit(out, json.dumps(data if len(data) > 1 or args.all else data[0], indent=2))
    elif fmt == "csv":
        head = ["id", "bounds", "status", "checked", "counterexample"] + (["seconds"] if args.timing else [])
        rows = [head]
        for r in reports:
            bounds = " ".join(f"{k}={v}" for k, v in r.bounds.items())
            ce = json.dumps(r.counterexample, sort_keys=True) if r.counterexample else ""
            rows.append([r.id, bounds, r.status, r.checked, ce] + ([f"{r.seconds:.3f}"] if args.timing else []))
        out.write(_csv_text(rows))
    else:
        for r in reports:
            bounds = " ".join(f"{k}={v}" for k, v in r.bounds.items())
            line = f"{r.status.upper():4} {r.id:<18} {bounds:<8} checks={r.checked}"
            if args.timing:
                line += f" time={r.seconds:.2f}s"
            out.write(line + "\n")
            if r.counterexample:
                out.write("     counterexample: " + json.dumps(r.counterexample, sort_keys=True) + "\n")
        if len(reports) > 1:
            failed = sum(r.status != "pass" for r in reports)
            out.write(f"{len(reports) - failed}/{len(reports)} passed\n")
    return 0 if all(r.status == "pass" for r in reports) else 1


# -- parser -----------------------------------------------------------------

def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=FORMATS, default=default("text"))
    p.add_argument("--jobs", type=int, default=default(1), help="worker processes for enumerations")
    p.add_argument("--seed", type=int, default=default(None), help="accepted and ignored; all output is deterministic")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mahonian", description=__doc__.split("\n\n")[0])
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("enumerate", help="stream S_n^k (or LD_{n,k})")
    _add_global(p, suppress=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--as", dest="as_", choices=("word", "digraph"), default="word")

    p = sub.add_parser("stats", help="all statistics of one object")
    _add_global(p, suppress=True)
    p.add_argument("--word", help='Laguerre word, "*" for a hole, e.g. "3 2 5 * 1 8 6 *"')
    p.add_argument("--digraph", help='JSON, e.g. {"n":1,"succ":{"1":1}}')
    p.add_argument("--multiset", help='multiset word, e.g. "2 1 2 6 5 4 4 3"')

    p = sub.add_parser("poly", help="print a generating polynomial")
    _add_global(p, suppress=True)
    p.add_argument("kind", choices=POLY_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--stat", choices=permstats.STATISTICS, default="maj")
    p.add_argument("--no-rlmin", action="store_true", help="drop the b^rlmin factor")
    p.add_argument("--holes", help="comma-separated hole positions")
    p.add_argument("--alphabet", help="multiplicities, e.g. 2,1,3")
    p.add_argument("--preset", default="euler", choices=(*jr.PRESETS, "generic"))

    p = sub.add_parser("verify", help="verify identities by exhaustive enumeration")
    _add_global(p, suppress=True)
    p.add_argument("ids", nargs="*", metavar="ID", help=", ".join(TASKS))
    p.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int)
    p.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    return parser


COMMANDS = {"enumerate": cmd_enumerate, "stats": cmd_stats, "poly": cmd_poly, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand: " + ", ".join(COMMANDS))
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"mahonian: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
