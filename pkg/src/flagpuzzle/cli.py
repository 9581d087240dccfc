"""The `puzzle` command line tool."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import lattice, oracle, puzzle
from .exactring import LaurentElem
from .labels import FlagShape, ParseError, as_string, print_multinumber, shapes, string_str
from .pieces import THEORIES, CatalogError, catalog

GRAM_TABLE = {1: "(a - 3)**2", 2: "3*(a - 2)**2", 3: "(2*a - 3)**2", 4: "3*(a - 1)**2", 5: "a**2", 6: "3*a**2"}


class UsageError(Exception):
    pass


def _threads(args) -> int:
    env = os.environ.get("PUZZLE_THREADS")
    if env:
        return max(1, int(env))
    if getattr(args, "threads", None):
        return max(1, args.threads)
    return os.cpu_count() or 1


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _strings(args, *names):
    out = []
    for name in names:
        val = getattr(args, name)
        if val is None:
            out.append(None)
            continue
        try:
            out.append(as_string(val))
        except ValueError as e:
            raise UsageError(f"--{name.rstrip('_')}: {e}") from None
    lens = {len(s) for s in out if s is not None}
    if len(lens) > 1:
        raise UsageError("boundary strings must have equal length")
    return out


def _shape_and_d(args, strings):
    shape = FlagShape.parse(args.shape) if args.shape else None
    d = args.d
    if d is None:
        d = shape.d if shape else max(1, max(max(s) for s in strings if s))
    if shape is None:
        shape = FlagShape.of(strings[0], d)
    if shape.d != d:
        raise UsageError(f"shape {shape} is not a {d}-step content")
    for s in strings:
        if s is not None and s not in shape:
            raise UsageError(f"{string_str(s)} does not have content {shape}")
    return shape, d


# subcommands ----------------------------------------------------------------------------------

def cmd_mul(args) -> int:
    lam, mu, nu = _strings(args, "lambda_", "mu", "nu")
    if lam is None or mu is None:
        raise UsageError("mul needs --lambda and --mu")
    shape, d = _shape_and_d(args, [lam, mu, nu])
    theory = args.theory
    if theory == "Kdual":
        table = puzzle.dual_expand_product(lam, mu, d)
    else:
        table = puzzle.expand_product(theory, lam, mu, d)
    if nu is not None:
        table = {nu: table.get(nu, LaurentElem.zero())}
    ok = True
    other = None
    if args.oracle:
        if theory == "Kdual":
            raw = oracle.pairing_dual_constants(shape, lam, mu)
            other = {k: LaurentElem.const(v) for k, v in raw.items() if v}
        else:
            other = oracle.oracle_product(shape, theory, lam, mu)
        if nu is not None:
            other = {nu: other.get(nu, LaurentElem.zero())}
        ok = {k: v for k, v in table.items() if v} == {k: v for k, v in other.items() if v}
    lines = []
    if nu is not None:
        c = table[nu]
        if args.oracle:
            lines += [f"puzzle: {c}", f"oracle: {other[nu]}"]
        else:
            lines.append(str(c))
    else:
        for k, c in table.items():
            line = f"{string_str(k)}: {c}"
            if args.oracle:
                line += f"    oracle: {other.get(k, LaurentElem.zero())}"
            lines.append(line)
        if args.oracle:
            for k, c in other.items():
                if k not in table and c:
                    lines.append(f"{string_str(k)}: 0    oracle: {c}")
    if args.oracle:
        lines.append("AGREE" if ok else "DISAGREE")
    if args.show_puzzles:
        if theory == "Kdual":
            fills = puzzle.enumerate_puzzles("Kdual", lam[::-1], mu[::-1], None if nu is None else nu[::-1], d)
        else:
            fills = puzzle.enumerate_puzzles(theory, lam, mu, nu, d)
        for f in fills:
            lines += ["", puzzle.render(f)]
    payload = {
        "theory": theory, "d": d, "shape": str(shape), "lambda": string_str(lam), "mu": string_str(mu),
        "constants": {string_str(k): v.to_json() for k, v in table.items()},
    }
    if args.oracle:
        payload["oracle"] = {string_str(k): v.to_json() for k, v in other.items()}
        payload["agree"] = ok
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_restrict(args) -> int:
    (lam,) = _strings(args, "lambda_")
    if lam is None or args.sigma is None:
        raise UsageError("restrict needs --lambda and --sigma")
    sigma = args.sigma
    if "," in sigma:
        sigma = tuple(int(x) for x in sigma.split(","))
    val = oracle.restrict(lam, sigma, args.d)
    _emit(args, {"lambda": string_str(lam), "sigma": args.sigma, "value": val.to_json()}, str(val))
    return 0


def cmd_labels(args) -> int:
    labels = sorted((print_multinumber(x) for x in lattice.enumerate_valid_labels(args.d)),
                    key=lambda s: (sum(ch.isdigit() for ch in s), s))
    _emit(args, {"d": args.d, "labels": labels}, " ".join(labels))
    return 0


def cmd_pieces(args) -> int:
    try:
        cat = catalog(args.d, args.theory)
    except CatalogError as e:
        raise UsageError(str(e)) from None
    rows = []
    for p in cat.all_pieces():
        rows.append({"kind": p.kind, "labels": list(p.labels), "inversion": p.inversion,
                     "k_piece": p.k_piece, "rotatable": p.rotatable})
    text = [f"{len(cat)} pieces (d={args.d}, {args.theory})"]
    for p in cat.all_pieces():
        tag = " K" if p.k_piece else (" eq" if p.kind == "rhombus" else "")
        text.append(f"{str(p):32s} inv={p.inversion}{tag}")
    _emit(args, {"d": args.d, "theory": args.theory, "pieces": rows}, "\n".join(text))
    return 0


def _verify_gram(args):
    import sympy
    out = []
    for d, want in GRAM_TABLE.items():
        got = lattice.gram_det_check(d)
        ok = sympy.simplify(got - sympy.sympify(want, locals={"a": sympy.Symbol("a")})) == 0
        out.append((f"gram d={d}", ok, f"{got} (table {want})"))
    return out


def _verify_crystal(args):
    ok, bad, _ = lattice.verify_crystal()
    out = [("crystal edges", ok, f"{len(lattice.CRYSTAL_EDGES)} edges" + (f", bad: {bad}" if bad else ""))]
    for d in range(1, 5):
        got = lattice.dynkin_adjacency(d)
        out.append((f"dynkin d={d}", got == lattice.expected_dynkin(d), f"{len(got)} edges"))
    return out


def _verify_oracle(args):
    out = []
    for d in (1, 2):
        for theory in ("H", "HT", "K", "KT"):
            bad = tot = 0
            for sh in shapes(d, args.n_max):
                for lam in sh.strings:
                    for mu in sh.strings:
                        tot += 1
                        if puzzle.expand_product(theory, lam, mu, d) != oracle.oracle_product(sh, theory, lam, mu):
                            bad += 1
            out.append((f"oracle d={d} {theory}", bad == 0, f"{tot} products, {bad} mismatches"))
    return out


def _verify_d4(names):
    from . import d4verify

    def run(args):
        out = []
        for n in names:
            fn = d4verify.SUITES[n]
            if n == "ud":
                rep = fn(d4verify.random_points(20, seed=args.seed + 1))
            elif n == "runi":
                rep = fn(d4verify.random_points(20, seed=args.seed + 2, names=("q", "u1", "u2", "u3")))
            else:
                rep = fn()
            out.append((rep.name, rep.ok, f"{rep.checked} checks"))
        return out
    return run


VERIFY = {
    "appendixA": _verify_d4(("weights", "ud", "runi", "limits")),
    "runi": _verify_d4(("runi",)),
    "limits": _verify_d4(("limits",)),
    "gram": _verify_gram,
    "crystal": _verify_crystal,
    "oracle": _verify_oracle,
}


def cmd_verify(args) -> int:
    results = VERIFY[args.suite](args)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {info}" for name, ok, info in results]
    payload = {"suite": args.suite, "results": [{"name": n, "ok": ok, "info": i} for n, ok, i in results]}
    _emit(args, payload, "\n".join(lines))
    return 0 if all(ok for _, ok, _ in results) else 1


def cmd_discover(args) -> int:
    from .discovery import DiscoveryError, default_corpus, discover_pieces
    corpus = default_corpus(args.d, args.n_max)
    try:
        res = discover_pieces(args.d, corpus=corpus, budget=args.budget, threads=_threads(args))
    except DiscoveryError as e:
        print(f"discovery failed: {e}", file=sys.stderr)
        return 1
    payload = {"d": args.d, "pieces": [{"kind": p.kind, "labels": list(p.labels), "inversion": p.inversion}
                                       for p in res.pieces], "report": res.report}
    text = [f"{len(res)} K-pieces (d={args.d})"] + [f"  {p}  inv={p.inversion}" for p in res.pieces]
    text += [f"{k}: {v}" for k, v in res.report.items() if k != "alternatives"]
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_render(args) -> int:
    lam, mu, nu = _strings(args, "lambda_", "mu", "nu")
    if lam is None or mu is None:
        raise UsageError("render needs --lambda and --mu")
    _, d = _shape_and_d(args, [lam, mu, nu])
    fills = puzzle.enumerate_puzzles(args.theory, lam, mu, nu, d)
    if args.json:
        payload = [{"nu": string_str(f.nu), "fugacity": f.fugacity.to_json(), "inversions": f.inversion_sum,
                    "cells": {f"{k[0]} {k[1]} {k[2]}": str(p) for k, p in sorted(f.cells.items())}} for f in fills]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n\n".join(puzzle.render(f) for f in fills) if fills else "no puzzles")
    return 0


# parser ---------------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="puzzle", description="Schubert calculus on d-step flag manifolds by puzzles.")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    def common(sp, strings=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--threads", type=int, default=None)
        if strings:
            sp.add_argument("--d", type=int, default=None)
            sp.add_argument("--shape", default=None, help="content p_0,...,p_d")
            sp.add_argument("--lambda", dest="lambda_", default=None)
            sp.add_argument("--mu", default=None)
            sp.add_argument("--nu", default=None)

    m = sub.add_parser("mul", help="structure constants of S^lambda S^mu")
    common(m)
    m.add_argument("--theory", choices=THEORIES, default="H")
    m.add_argument("--oracle", action="store_true", help="also compute with the independent oracle")
    m.add_argument("--show-puzzles", action="store_true")
    m.set_defaults(fn=cmd_mul)

    r = sub.add_parser("restrict", help="S^lambda at a torus-fixed point")
    common(r)
    r.add_argument("--sigma", default=None, help="string of the same content, or a comma-separated permutation")
    r.set_defaults(fn=cmd_restrict)

    lb = sub.add_parser("labels", help="valid edge labels")
    common(lb, strings=False)
    lb.add_argument("--d", type=int, required=True)
    lb.set_defaults(fn=cmd_labels)

    pc = sub.add_parser("pieces", help="dump a piece catalog")
    common(pc, strings=False)
    pc.add_argument("--d", type=int, required=True)
    pc.add_argument("--theory", choices=THEORIES, default="H")
    pc.set_defaults(fn=cmd_pieces)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v, strings=False)
    v.add_argument("suite", choices=sorted(VERIFY))
    v.add_argument("--n-max", type=int, default=3, help="largest n for the oracle suite")
    v.set_defaults(fn=cmd_verify)

    ds = sub.add_parser("discover", help="search for K-pieces")
    common(ds, strings=False)
    ds.add_argument("--d", type=int, required=True)
    ds.add_argument("--n-max", type=int, default=None)
    ds.add_argument("--budget", type=int, default=2_000_000)
    ds.set_defaults(fn=cmd_discover)

    rd = sub.add_parser("render", help="draw the puzzles")
    common(rd)
    rd.add_argument("--theory", choices=THEORIES, default="H")
    rd.set_defaults(fn=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "cmd", None):
            raise UsageError("a subcommand is required")
        return args.fn(args)
    except (UsageError, ParseError, CatalogError, ValueError) as e:
        print(f"puzzle: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
