"""Command line: ``modpjl <command> --p P --f F [options]``.

Exit codes: 0 success, 2 a verification suite failed, 3 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bmfunc import (
    IotaFunctional,
    TameTypeError,
    iota_transport,
    normalize_type,
    serre_weights,
    type_from_args,
)
from .chars import (
    BrauerIrredLabel,
    CharError,
    GrothElt,
    brauer_irred,
    brauer_labels,
    check_label,
    decompose,
    label_to_json,
    ord_char_to_json,
    ordinary_char,
    ordinary_chars,
)
from .classfn import GL2, LX, ClassFn, ClassFnError, enumerate_ss_classes
from .jl import dl_character, jl_basis, jl_classfn, jl_star
from .scalars import FieldError, field_ctx
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--f", type=int, default=1, help="residue degree, q = p^f")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modpjl", description="Mod-p Jacquet-Langlands for GL2(F_q) and F_{q^2}^x.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [
        ("classes", "list the semisimple conjugacy classes of GL2(k)"),
        ("brauer-table", "irreducible Brauer characters of GL2(k)"),
        ("ordinary-table", "ordinary irreducible characters on semisimple classes"),
    ]:
        _add_common(sub.add_parser(name, help=help_))

    p = sub.add_parser("jl", help="JL of an l^x-character or of a GrothElt")
    _add_common(p)
    p.add_argument("--char-exp", type=int, help="exponent m of the character gamma^t -> zeta^(m t)")
    p.add_argument("--in", dest="inp", help="GrothElt JSON over LX")
    p.add_argument("--as", dest="as_", choices=("grothendieck", "classfn"), default="grothendieck")

    p = sub.add_parser("jl-star", help="adjoint JL* of a GrothElt over GL2")
    _add_common(p)
    p.add_argument("--in", dest="inp", help="GrothElt JSON over GL2")
    p.add_argument("--label", help="single irreducible, written r0,r1,...:m")

    p = sub.add_parser("dl", help="Deligne-Lusztig character R_{T,theta}")
    _add_common(p)
    p.add_argument("--char-exp", type=int, required=True)

    p = sub.add_parser("decompose", help="decompose a ClassFn JSON into irreducibles")
    _add_common(p)
    p.add_argument("--in", dest="inp", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _add_common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--lambda-box", type=int, default=None, help="weights with entries in [0, B] (default p-1)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--type", dest="type_", choices=("scalar", "ps", "cuspidal"), help="restrict thm42 to one type")
    p.add_argument("--char-exp", type=int, nargs="+", help="character exponent(s) for --type")

    p = sub.add_parser("transport-iota", help="iota_D = iota o JL")
    _add_common(p)
    p.add_argument("--in", dest="inp", required=True, help="IotaFunctional JSON over GL2")

    p = sub.add_parser("serre-weights", help="labels where a functional is positive")
    _add_common(p)
    p.add_argument("--in", dest="inp", required=True, help="IotaFunctional JSON")
    return parser


# ---------------------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _parse_label(text: str) -> BrauerIrredLabel:
    try:
        r, m = text.split(":")
        return BrauerIrredLabel(tuple(int(v) for v in r.split(",")), int(m))
    except ValueError:
        raise InputError(f"bad label {text!r}; expected r0,r1,...:m") from None


def _coeff_text(v) -> str:
    return "(" + ";".join(str(c) for c in v.coeffs) + ")"


def _class_text(c) -> str:
    return json.dumps(c.to_json(), separators=(",", ":"))


def _table_csv(ctx, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["character"] + [_class_text(c) for c in enumerate_ss_classes(ctx)])
    for name, chi in rows:
        w.writerow([name] + [_coeff_text(v) for _, v in chi.items()])
    return buf.getvalue()


def _classfn_csv(chi: ClassFn) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "value"])
    for lab, v in chi.items():
        w.writerow([_class_text(lab) if chi.group == GL2 else lab.dlog, _coeff_text(v)])
    return buf.getvalue()


def _entries_csv(group, pairs) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "value"])
    for lab, v in pairs:
        w.writerow([json.dumps(label_to_json(group, lab), separators=(",", ":")), v])
    return buf.getvalue()


def _render(obj, fmt: str) -> str:
    if fmt == "csv" and isinstance(obj, str):
        return obj
    return json.dumps(obj, indent=2) + "\n"


def _run(args) -> tuple[object, int]:
    """Return (payload, exit code); payload is JSON-able or preformatted CSV text."""
    ctx = field_ctx(args.p, args.f)
    fmt = args.format
    cmd = args.command

    if cmd == "classes":
        classes = enumerate_ss_classes(ctx)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["kind", "x", "y", "z"])
            for c in classes:
                d = c.to_json()
                w.writerow([d["kind"], d.get("x", ""), d.get("y", ""), d.get("z", "")])
            return buf.getvalue(), EXIT_OK
        return {"q": ctx.q, "classes": [c.to_json() for c in classes]}, EXIT_OK

    if cmd == "brauer-table":
        rows = [(lab, brauer_irred(ctx, lab)) for lab in brauer_labels(ctx)]
        if fmt == "csv":
            return _table_csv(ctx, [(str(lab), chi) for lab, chi in rows]), EXIT_OK
        return {"q": ctx.q, "characters": [{"label": lab.to_json(), "classfn": chi.to_json()} for lab, chi in rows]}, EXIT_OK

    if cmd == "ordinary-table":
        rows = [(c, ordinary_char(ctx, c)) for c in ordinary_chars(ctx)]
        if fmt == "csv":
            return _table_csv(ctx, [(json.dumps(ord_char_to_json(c)), chi) for c, chi in rows]), EXIT_OK
        return {"q": ctx.q, "characters": [{"char": ord_char_to_json(c), "classfn": chi.to_json()} for c, chi in rows]}, EXIT_OK

    if cmd == "jl":
        if (args.char_exp is None) == (args.inp is None):
            raise InputError("give exactly one of --char-exp and --in")
        if args.inp:
            v = GrothElt.from_json(ctx, _read_json(args.inp))
            if v.group != LX:
                raise InputError("jl expects a GrothElt over LX")
        else:
            v = GrothElt.unit(ctx, LX, args.char_exp % ctx.n)
        if args.as_ == "classfn":
            out = jl_classfn(ctx, v.class_function())
            return (_classfn_csv(out) if fmt == "csv" else out.to_json()), EXIT_OK
        out = jl_basis(ctx, v)
        return (_entries_csv(GL2, out.support().items()) if fmt == "csv" else out.to_json()), EXIT_OK

    if cmd == "jl-star":
        if (args.label is None) == (args.inp is None):
            raise InputError("give exactly one of --label and --in")
        if args.inp:
            w = GrothElt.from_json(ctx, _read_json(args.inp))
            if w.group != GL2:
                raise InputError("jl-star expects a GrothElt over GL2")
        else:
            w = GrothElt.unit(ctx, GL2, check_label(ctx, _parse_label(args.label)))
        out = jl_star(ctx, w)
        return (_entries_csv(LX, out.support().items()) if fmt == "csv" else out.to_json()), EXIT_OK

    if cmd == "dl":
        out = dl_character(ctx, args.char_exp)
        return (_classfn_csv(out) if fmt == "csv" else out.to_json()), EXIT_OK

    if cmd == "decompose":
        chi = ClassFn.from_json(ctx, _read_json(args.inp))
        out = decompose(ctx, chi)
        return (_entries_csv(out.group, out.support().items()) if fmt == "csv" else out.to_json()), EXIT_OK

    if cmd == "verify":
        options = {"bound": args.lambda_box, "threads": max(1, args.threads), "seed": args.seed}
        if args.type_:
            if args.suite != "thm42":
                raise InputError("--type only applies to --suite thm42")
            tau = normalize_type(ctx, type_from_args(args.type_, args.char_exp or []))
            options["types"] = [tau]
        results = run_suite(ctx, args.suite, **options)
        code = EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "q", "passed", "checked", "details"])
            for r in results:
                w.writerow([r.name, r.q, r.passed, r.checked, " | ".join(r.details)])
            return buf.getvalue(), code
        return {"q": ctx.q, "passed": code == EXIT_OK, "suites": [r.to_json() for r in results]}, code

    if cmd == "transport-iota":
        iota = IotaFunctional.from_json(ctx, _read_json(args.inp))
        if iota.group != GL2:
            raise InputError("transport-iota expects a functional over GL2")
        out = iota_transport(ctx, iota)
        if fmt == "csv":
            return _entries_csv(LX, [(lab, int(v)) for lab, v in enumerate(out.values) if v]), EXIT_OK
        return out.to_json(), EXIT_OK

    if cmd == "serre-weights":
        iota = IotaFunctional.from_json(ctx, _read_json(args.inp))
        weights = serre_weights(iota)
        if fmt == "csv":
            return _entries_csv(iota.group, [(lab, 1) for lab in weights]), EXIT_OK
        return {"group": iota.group, "q": ctx.q, "weights": [label_to_json(iota.group, lab) for lab in weights]}, EXIT_OK

    raise InputError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = _run(args)
    except (InputError, FieldError, ClassFnError, CharError, TameTypeError, KeyError, ValueError) as exc:
        print(f"modpjl: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = _render(payload, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
