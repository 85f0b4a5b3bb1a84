"""Command-line interface: ``resbinar <command> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bundled, frames, poset, verify
from .algebra import AlgebraError, algebra_predicates, dumps_algebra, load_algebra, save_algebra
from .lattice import LatticeError
from .laws import (ALL_LAWS, DISPLAY, RULES, SOURCE, LawProfile, UnknownLaw, check_law,
                   law_profile, parse_tags, sort_tags)
from .search import ConfigError, SearchConfig, TimeBudgetExceeded, explore_open_problem, search
from .terms import ParseError, check_statement, parse_statement

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _load(ref: str):
    """A path to an algebra file, or a bundled model id such as ``A1``."""
    path = Path(ref)
    if path.exists():
        return load_algebra(path)
    try:
        return bundled.load_bundled(ref)
    except KeyError:
        raise FileNotFoundError(f"no such file or bundled model: {ref}") from None


def _table(alg, table) -> str:
    names = alg.names
    w = max(len(s) for s in names)
    head = " " * w + " | " + " ".join(s.rjust(w) for s in names)
    rows = [head, "-" * len(head)]
    for i, s in enumerate(names):
        rows.append(s.rjust(w) + " | " + " ".join(names[v].rjust(w) for v in table[i]))
    return "\n".join(rows)


def cmd_check(args) -> int:
    alg = _load(args.file)
    statements = [(tag, parse_statement(SOURCE[tag]) if tag in SOURCE else None)
                  for tag in args.law]
    statements += [(src, parse_statement(src)) for src in args.expr]
    if not statements:
        raise ConfigError("give at least one --law or --expr")
    status = EXIT_OK
    for label, stmt in statements:
        if stmt is None:
            raise UnknownLaw(label)
        res = check_statement(stmt, alg)
        print(f"{label}: {res.describe(alg)}")
        if not res:
            status = EXIT_FAIL
    return status


def cmd_laws(args) -> int:
    if args.list or not args.file:
        for tag in ALL_LAWS:
            print(f"{tag:<3} {DISPLAY[tag]:<6} {SOURCE[tag]}")
        print()
        for r in RULES:
            print(f"rule {r}")
        return EXIT_OK
    alg = _load(args.file)
    prof: LawProfile = law_profile(alg)
    flags = algebra_predicates(alg)
    print(f"{alg.name or args.file}: n={alg.n}")
    for tag in ALL_LAWS:
        if tag in ("lp", "rp", "ed") and alg.unit is None:
            print(f"  {tag:<3} n/a (no unit)")
            continue
        print(f"  {tag:<3} {'holds' if check_law(tag, alg) else 'fails'}")
    print(f"profile {prof}")
    for name, val in vars(flags).items():
        print(f"  {name}: {val}")
    return EXIT_OK


def cmd_residuals(args) -> int:
    alg = _load(args.file)
    for title, table in (("mult", alg.mult), ("ldiv  x\\z (row x, column z)", alg.ldiv),
                         ("rdiv  z/y (row z, column y)", alg.rdiv)):
        print(title)
        print(_table(alg, table))
        print()
    if args.out:
        save_algebra(alg, args.out, residuals=True)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_frame(args) -> int:
    alg = _load(args.file)
    fr = frames.build_frame(alg, args.variant)
    names = alg.names
    print(f"variant {fr.variant}; {len(fr.points)} points")
    for i in range(len(fr.points)):
        print(f"  P{i} = {{{','.join(names[e] for e in fr.point_elements(i))}}}")
    print("R = " + " ".join(f"(P{f},P{g},P{h})" for f, g, h in fr.triples))
    status = EXIT_OK
    for which in ([args.condition] if args.condition else frames.CONDITIONS):
        res = frames.frame_condition(fr, which)
        law = bool(check_law(which, alg))
        line = f"{which}: frame {'holds' if res else 'fails'}, algebra {'holds' if law else 'fails'}"
        if res.witness:
            line += " (x,y,p,q,j)=" + ",".join(f"P{i}" for i in res.witness)
        print(line)
        if bool(res) != law:
            status = EXIT_FAIL
    return status


def _config(args) -> SearchConfig:
    return SearchConfig(
        max_size=args.size, distributive_lattice=args.distributive,
        associative=args.associative, commutative=args.commutative, unital=args.unital,
        integral=args.integral, complemented=args.complemented, boolean=args.boolean,
        satisfies=parse_tags(args.satisfies), fails=parse_tags(args.fails),
        limit=args.limit, time_budget=args.budget)


def _write_models(models, out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for k, alg in enumerate(models, 1):
        path = out / f"model{k:03d}.alg"
        path.write_text(dumps_algebra(alg), encoding="utf-8")
        print(f"wrote {path}")


def cmd_search(args) -> int:
    cfg = _config(args)
    try:
        rep = search(cfg)
    except TimeBudgetExceeded as exc:
        print(str(exc))
        print(exc.partial.summary())
        return EXIT_ERROR
    print(f"search {cfg.describe()}")
    print(rep.summary())
    for alg in rep.models:
        prof = law_profile(alg)
        print(f"  {alg.name}: n={alg.n} elements {','.join(alg.names)} profile {prof}")
    if args.out and rep.models:
        _write_models(rep.models, args.out)
    return EXIT_OK


def cmd_explore(args) -> int:
    try:
        verdicts = explore_open_problem(args.size, args.budget)
    except TimeBudgetExceeded as exc:
        print(str(exc))
        return EXIT_ERROR
    for v in verdicts:
        print(v.line())
    return EXIT_OK


def cmd_poset(args) -> int:
    d = poset.build_poset(args.commutative)
    print(f"nodes: {len(d.nodes)}")
    print("top: " + poset.label(d.nodes[d.top]))
    print("bottom: " + poset.label(d.nodes[d.bottom]))
    print("coatoms: " + " ".join(poset.label(c) for c in d.coatoms))
    print("atoms: " + " ".join(poset.label(a) for a in d.atoms))
    if args.dot:
        Path(args.dot).write_text(poset.export_dot(d), encoding="utf-8")
        print(f"wrote {args.dot}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = verify.run(args.max_size, bundle_dir=args.bundle_dir, budget=args.budget)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bundle_export(args) -> int:
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for mid in args.ids or bundled.MODEL_IDS:
        mid = bundled.normalize_id(mid)
        path = out / f"{mid}.alg"
        path.write_text(bundled.bundle_text(mid), encoding="utf-8")
        print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resbinar", description="Finite residuated binars.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check laws or statements on an algebra")
    c.add_argument("file", help="algebra file or bundled id (A1..A7)")
    c.add_argument("--law", action="append", default=[], help="law tag, repeatable")
    c.add_argument("--expr", action="append", default=[], help="statement, e.g. 'x*y = y*x'")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("laws", help="law profile of an algebra, or the catalog")
    c.add_argument("file", nargs="?")
    c.add_argument("--list", action="store_true")
    c.set_defaults(func=cmd_laws)

    c = sub.add_parser("residuals", help="print residual tables")
    c.add_argument("file")
    c.add_argument("--out", help="write the algebra with residual tables")
    c.set_defaults(func=cmd_residuals)

    c = sub.add_parser("frame", help="prime-filter frame and its conditions")
    c.add_argument("file")
    c.add_argument("--condition", choices=frames.CONDITIONS)
    c.add_argument("--variant", choices=frames.VARIANTS, default=frames.DEFAULT_VARIANT)
    c.set_defaults(func=cmd_frame)

    c = sub.add_parser("search", help="search for models")
    c.add_argument("--size", type=int, required=True)
    for flag in ("distributive", "associative", "commutative", "unital", "integral",
                 "complemented", "boolean"):
        c.add_argument(f"--{flag}", action="store_true")
    c.add_argument("--satisfies", default="")
    c.add_argument("--fails", default="")
    c.add_argument("--limit", type=int)
    c.add_argument("--budget", type=float, help="seconds")
    c.add_argument("--out", help="directory for found models")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("explore", help="implication rules over all lattices")
    c.add_argument("--size", type=int, default=4)
    c.add_argument("--budget", type=float)
    c.set_defaults(func=cmd_explore)

    c = sub.add_parser("poset", help="poset of closed law sets")
    c.add_argument("--commutative", action="store_true")
    c.add_argument("--dot", help="write DOT text to this file")
    c.set_defaults(func=cmd_poset)

    c = sub.add_parser("verify-paper", help="run the reproduction suite")
    c.add_argument("--max-size", type=int, default=4)
    c.add_argument("--budget", type=float)
    c.add_argument("--bundle-dir", help="read A1..A7 from this directory instead")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("bundle", help="bundled models")
    bsub = c.add_subparsers(dest="action", required=True)
    e = bsub.add_parser("export", help="write bundled model files")
    e.add_argument("dir")
    e.add_argument("ids", nargs="*")
    e.set_defaults(func=cmd_bundle_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, UnknownLaw, ParseError, AlgebraError, LatticeError,
            frames.NotDistributive, frames.MonotonicityViolation, FileNotFoundError,
            KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
