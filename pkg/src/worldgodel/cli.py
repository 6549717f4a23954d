"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (malformed numbers, parse
errors, denied access, a hybrid verdict under ``--strict``), 2 on usage
errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classifier, numbering, syntax, worlds
from .errors import WorldGodelError

_BOOLS = {"true": True, "false": False, "1": True, "0": False, "yes": True, "no": False}


def _bool(text: str) -> bool:
    try:
        return _BOOLS[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}") from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("world indices start at 1")
    return value


class _UsageError(Exception):
    pass


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_frame(path: str):
    text = _read_file(path)
    try:
        return worlds.frame_from_json(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: invalid JSON: {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, WorldGodelError):
            raise
        raise _UsageError(f"{path}: {exc}") from None


# ---------- subcommands ----------

def _encoded(s: syntax.TaggedSentence, fam) -> dict:
    e = numbering.encode(s, fam)
    return {
        "formula": syntax.render(s.formula),
        "world": s.world,
        "length": numbering.length_of(e),
        "decimal": str(int(e)),
        "factored": numbering.to_factored(e),
    }


def cmd_encode(args, out):
    if (args.formula is None) == (args.file is None):
        raise _UsageError("encode takes exactly one of FORMULA or --file")
    if args.formula is not None:
        sentences = [syntax.TaggedSentence(syntax.parse(args.formula), args.world)]
    else:
        sentences = syntax.read_expressions(_read_file(args.file), default_world=args.world)
    fam = None
    if args.frame:
        if args.owner is None:
            raise _UsageError("--frame requires --owner")
        frame, _ = _load_frame(args.frame)
        fam = numbering.family_from_frame(frame, args.owner)
    results = [_encoded(s, fam) for s in sentences]
    if args.format == "json":
        out.write(classifier.dumps(results[0] if args.formula is not None else results))
        return 0
    for r in results:
        if args.file is not None:
            out.write(f"{r['formula']}@{r['world']}\n")
        out.write(f"{r['decimal']}\n{r['factored']}\n")
    return 0


def cmd_decode(args, out):
    if (args.number is None) == (args.file is None):
        raise _UsageError("decode takes exactly one of NUMBER or --file")
    if args.number is not None:
        texts = [args.number]
    else:
        texts = [line for _, line in syntax.content_lines(_read_file(args.file))]
    results = []
    for text in texts:
        s = numbering.decode(numbering.parse_number(text))
        results.append({"formula": syntax.render(s.formula), "world": s.world,
                        "length": len(syntax.linearize(s.formula))})
    if args.format == "json":
        out.write(classifier.dumps(results[0] if args.number is not None else results))
    else:
        for r in results:
            out.write(f"{r['formula']}@{r['world']}\n")
    return 0


def cmd_lo(args, out):
    z = numbering.lo(args.x, args.y)
    if args.format == "json":
        out.write(classifier.dumps({"x": args.x, "y": args.y, "lo": z}))
    else:
        out.write(f"{z}\n")
    return 0


def cmd_classify(args, out):
    report = classifier.classify(classifier.AccessConfig(args.ii, args.kk, args.ik, args.ki))
    if args.format == "json":
        out.write(classifier.dumps(classifier.report_to_dict(report)))
    else:
        out.write(classifier.format_report(report) + "\n")
    return 0


def cmd_table(args, out):
    if args.format == "json":
        out.write(classifier.table_json())
    else:
        out.write("\n\n".join(classifier.format_report(r) for r in classifier.full_table()) + "\n")
    return 0


def cmd_frame(args, out):
    frame, _ = _load_frame(args.file)
    props = worlds.relation_properties(frame)
    families = {}
    for w in sorted(frame.worlds):
        fam = numbering.family_from_frame(frame, w)
        families[str(w)] = {
            str(k): "Present" if numbering.accessible(fam, k) else "Absent" for k in sorted(frame.worlds)
        }
    if args.format == "json":
        out.write(classifier.dumps({
            "reflexive": props.reflexive,
            "symmetric": props.symmetric,
            "transitive": props.transitive,
            "families": families,
        }))
        return 0
    out.write(f"reflexive:  {str(props.reflexive).lower()}\n")
    out.write(f"symmetric:  {str(props.symmetric).lower()}\n")
    out.write(f"transitive: {str(props.transitive).lower()}\n")
    for w, comps in families.items():
        present = [k for k, status in comps.items() if status == "Present"]
        out.write(f"g_{w}: non-empty components for worlds {', '.join(present) or 'none'}\n")
    return 0


def cmd_modal(args, out):
    frame, valuation = _load_frame(args.file)
    phi = worlds.parse_modal(args.formula)
    targets = [args.world] if args.world is not None else sorted(frame.worlds)
    values = {w: worlds.eval_modal(frame, valuation, phi, w) for w in targets}
    if args.format == "json":
        out.write(classifier.dumps({
            "formula": worlds.render_modal(phi),
            "values": {str(w): v for w, v in values.items()},
        }))
    elif args.world is not None:
        out.write(f"{str(values[args.world]).lower()}\n")
    else:
        for w, v in values.items():
            out.write(f"{w}: {str(v).lower()}\n")
    return 0


def cmd_hybrid(args, out):
    expr = syntax.read_meta(_read_file(args.file))
    verdict = syntax.world_membership(expr)
    hybrid = isinstance(verdict, syntax.Hybrid)
    if args.format == "json":
        if hybrid:
            payload = {"membership": "Hybrid", "worlds": sorted(verdict.worlds)}
        else:
            payload = {"membership": "World", "worlds": [verdict.k]}
        out.write(classifier.dumps(payload))
    else:
        out.write(f"{verdict}\n")
    return 1 if hybrid and args.strict else 0


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="worldgodel",
        description="World-tagged Gödel numbering and two-world system classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("encode", cmd_encode, "Gödel-number a formula of a world.")
    p.add_argument("formula", nargs="?")
    p.add_argument("--world", type=_positive, default=1, help="owning world (default 1)")
    p.add_argument("--file", help="expression file: one formula[@world] per line")
    p.add_argument("--frame", help="frame file; encode with the numbering of --owner")
    p.add_argument("--owner", type=_positive, help="world whose numbering family is used")

    p = add("decode", cmd_decode, "Recover a tagged formula from its Gödel number.")
    p.add_argument("number", nargs="?", help="decimal or factored form 2^a * 3^b * ...")
    p.add_argument("--file", help="file with one number per line")

    p = add("lo", cmd_lo, "Exponent of y in the factorization of x.")
    p.add_argument("x", type=_natural)
    p.add_argument("y", type=_natural)

    p = add("classify", cmd_classify, "Classify a two-world accessibility configuration.")
    for flag, what in (("ii", "i R i"), ("kk", "k R k"), ("ik", "i R k"), ("ki", "k R i")):
        p.add_argument(f"--{flag}", type=_bool, default=False, metavar="BOOL", help=what)

    add("table", cmd_table, "Print the ten two-world system types.")

    p = add("frame", cmd_frame, "Relation properties and numbering families of a frame file.")
    p.add_argument("file")

    p = add("modal", cmd_modal, "Evaluate a modal formula on a frame file.")
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--world", type=_positive)

    p = add("hybrid", cmd_hybrid, "Report the world membership of a meta-expression file.")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="exit 1 when the expression is hybrid")

    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, stdout)
    except _UsageError as exc:
        stderr.write(f"worldgodel {args.command}: {exc}\n")
        return 2
    except WorldGodelError as exc:
        stderr.write(f"error: {exc.kind}: {exc}\n")
        return 1


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
