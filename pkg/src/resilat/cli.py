"""Command-line front end.

Exit codes: 0 success, 1 the structure fails validation (or a round trip
fails), 2 usage or input-format problems, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import os
import sys

from . import congruence as con
from .corpus import BUILTINS, builtin
from .enumeration import KINDS as ENUM_KINDS, census, enumerate_kind
from .errors import AlgebraError, ParseError, UnknownKind, UnreachableTarget
from .fileformat import FILE_KINDS, AlgebraFile, dumps_doc, kind_of, parse, serialize, to_doc
from .lattice import FiniteLattice, Involution, is_boolean, is_distributive
from .logics import check_orthomodular
from .residuation import check_biconditionals, classify
from .sections import is_sectionally_pseudocomplemented
from .transforms import round_trips, route, transform

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _read(path: str) -> str:
    """File contents; ``-`` is stdin, and a missing path naming a built-in example loads that example."""
    if path == "-":
        return sys.stdin.read()
    if path in BUILTINS and not os.path.exists(path):
        kind, s = builtin(path)
        return serialize(AlgebraFile(kind, s))
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str, kind: str | None = None) -> AlgebraFile:
    return parse(_read(path), kind)


def _json(obj) -> str:
    return dumps_doc(obj)


def _table(rows) -> str:
    width = max((len(str(k)) for k, _ in rows), default=0)
    return "".join(f"{str(k).ljust(width)}  {v}\n" for k, v in rows)


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


# commands

def cmd_check(args) -> int:
    f = _load(args.file, args.as_kind)
    print(f"ok: valid {f.kind}")
    return EXIT_OK


def _lattice_report(s) -> dict:
    L = s.host if isinstance(s, Involution) else s
    out = {
        "distributive": is_distributive(L),
        "boolean": is_boolean(L),
        "sectionally_pseudocomplemented": is_sectionally_pseudocomplemented(L),
    }
    if isinstance(s, Involution):
        out.update(check_orthomodular(L, s).as_dict())
    return out


def cmd_classify(args) -> int:
    f = _load(args.file)
    if f.kind == "lattice":
        report = {"kind": f.kind, "flags": _lattice_report(f.structure)}
    else:
        path = route(f.kind, "rrl-groupoid") if f.kind != "rrl-groupoid" else ["rrl-groupoid"]
        G = transform(f.structure, f.kind, "rrl-groupoid")
        rep = classify(G)
        d = rep.as_dict()
        report = {
            "kind": f.kind,
            "via": path,
            "flags": rep.flags(),
            "lemma1_items": d["lemma1_items"],
            "witnesses": d["witnesses"],
            "biconditional_violations": check_biconditionals(G).violations,
        }
    if args.json:
        sys.stdout.write(_json(report))
    else:
        rows = [(k, _fmt(v)) for k, v in report["flags"].items()]
        if "lemma1_items" in report:
            rows.append(("lemma1_items", " ".join(_fmt(v) for v in report["lemma1_items"])))
            for k, w in report["witnesses"].items():
                rows.append((f"witness[{k}]", ", ".join(w)))
        sys.stdout.write(_table(rows))
    return EXIT_OK


def cmd_transform(args) -> int:
    text = _read(args.file)
    f = parse(text)
    if args.to not in FILE_KINDS:
        raise UnknownKind(f"unknown target kind {args.to!r}", (args.to,))
    path = route(f.kind, args.to)
    out = transform(f.structure, f.kind, args.to)
    provenance = {
        "constructions": [f"{a}->{b}" for a, b in zip(path, path[1:])],
        "input_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
    }
    _write(args.output, serialize(AlgebraFile(args.to, out, provenance)))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    f = _load(args.file)
    cycles = round_trips(f.structure, f.kind)
    applied = [c for c in cycles if c.applicable]
    ok = bool(applied) and all(c.ok for c in applied)
    if args.json:
        sys.stdout.write(_json({"kind": f.kind, "ok": ok, "cycles": [c.as_dict() for c in cycles]}))
    else:
        for c in cycles:
            status = "skip" if not c.applicable else ("pass" if c.ok else "FAIL")
            print(f"{status}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        if not applied:
            print(f"no round trip applies to this {f.kind}")
    return EXIT_OK if ok else EXIT_INVALID


class _Ops:
    def __init__(self, ops):
        self._ops = ops

    def operations(self):
        return self._ops


def _congruence_subject(kind: str, s):
    """(algebra, element names, named constants) for congruence work."""
    if kind == "lattice":
        if isinstance(s, Involution):
            L = s.host
            alg = _Ops(L.operations() + [(1, s.map)])
        else:
            L = alg = s
        return alg, L.elements, {"0": L.bottom, "1": L.top}
    if kind in ("basic-algebra", "implication-reduct"):
        return s, s.elements, {"0": s.zero, "1": s.one}
    L = s.lattice
    return s, L.elements, {"0": L.bottom, "1": L.top}


def cmd_congruence(args) -> int:
    f = _load(args.file)
    alg, names, consts = _congruence_subject(f.kind, f.structure)
    CL = con.all_congruences(alg)
    parts = [[[names[x] for x in cls] for cls in c.classes()] for c in CL.congruences]
    report: dict = {"kind": f.kind, "size": CL.size, "congruences": parts}
    if args.report == "permutability":
        report["permutable"] = con.check_permutable(CL)
    elif args.report == "distributivity":
        report["distributive"] = con.check_distributive_con(CL)
    elif args.report == "regularity":
        report["regularity"] = {
            c: {k: v for k, v in con.check_regularity(alg, CL, idx).as_dict().items() if k != "constant"}
            for c, idx in consts.items()
        }
    elif args.report == "terms":
        G = transform(f.structure, f.kind, "rrl-groupoid") if f.kind != "rrl-groupoid" else f.structure
        report["terms"] = con.check_terms(G, strict=False).as_dict()
    if args.json:
        sys.stdout.write(_json(report))
        return EXIT_OK
    print(f"{CL.size} congruences")
    for p in parts:
        print("  " + " | ".join(" ".join(cls) for cls in p))
    rows = []
    for key in ("permutable", "distributive"):
        if key in report:
            rows.append((key, _fmt(report[key])))
    for c, r in report.get("regularity", {}).items():
        rows.extend((f"{k}[{c}]", _fmt(v)) for k, v in r.items())
    for k, v in report.get("terms", {}).items():
        if k != "witnesses":
            rows.append((k, _fmt(v)))
    sys.stdout.write(_table(rows))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.census:
        rows = [census(args.kind, n, args.jobs) for n in args.size]
        if args.json:
            sys.stdout.write(_json([r.as_dict() for r in rows]))
        else:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["kind", "size", "flag", "count"])
            for r in rows:
                w.writerows(r.csv_rows())
            sys.stdout.write(buf.getvalue())
        return EXIT_OK
    if args.count_only:
        counts = {n: len(enumerate_kind(args.kind, n, args.jobs)) for n in args.size}
        if args.json:
            sys.stdout.write(_json([{"kind": args.kind, "size": n, "count": c} for n, c in counts.items()]))
        else:
            for n, c in counts.items():
                print(f"{args.kind} {n} {c}")
        return EXIT_OK
    docs = []
    for n in args.size:
        for item in enumerate_kind(args.kind, n, args.jobs):
            docs.append(to_doc(kind_of(item), item))
    sys.stdout.write(dumps_doc(docs))
    return EXIT_OK


def cmd_examples(args) -> int:
    if not args.name:
        for name, (kind, _) in BUILTINS.items():
            print(f"{name}  {kind}")
        return EXIT_OK
    kind, s = builtin(args.name)
    _write(args.output, serialize(AlgebraFile(kind, s)))
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must be N or LO..HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resilat", description="Finite residuated l-groupoid workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate an algebra file")
    c.add_argument("file", help="algebra file, or - for stdin")
    c.add_argument("--as", dest="as_kind", choices=FILE_KINDS, help="validate as this kind")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("classify", help="report structural identities")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("transform", help="convert to another structure kind")
    c.add_argument("file")
    c.add_argument("--to", required=True, help="target kind")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("roundtrip", help="check that composed constructions reproduce the input")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_roundtrip)

    c = sub.add_parser("congruence", help="congruence lattice reports")
    c.add_argument("file")
    c.add_argument("--report", choices=("regularity", "permutability", "distributivity", "terms"),
                   default="permutability")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_congruence)

    c = sub.add_parser("enumerate", help="enumerate small models up to isomorphism")
    c.add_argument("--kind", required=True, choices=ENUM_KINDS)
    c.add_argument("--size", required=True, type=_sizes, help="N or LO..HI")
    c.add_argument("--census", action="store_true", help="aggregate flag counts (CSV, or JSON with --json)")
    c.add_argument("--count-only", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("examples", help="write a built-in example (list them without a name)")
    c.add_argument("name", nargs="?")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownKind, UnreachableTarget) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        w = f" [witness: {', '.join(map(str, exc.witness))}]" if exc.witness else ""
        print(f"invalid: {type(exc).__name__}: {exc}{w}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
