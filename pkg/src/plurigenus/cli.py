"""Command-line front end.

Threefold data is read from UTF-8 JSON documents of the form

    {"chi_O": 1, "K3": "1/26", "basket": [{"r": 26, "a": 1, "count": 1}]}

where rationals are always strings (exactness) and basket entries are
canonicalized on load.  Every subcommand renders as plain text or, with
--format machine, as a single JSON object {command, inputs, result,
errors}; exact values appear as decimal strings there.

Exit codes: 0 success / all checks pass, 1 domain or validation error,
2 malformed input.
"""

import argparse
import json
import sys

from . import bounds as _bounds
from . import oracle as _oracle
from .basket import Basket, QuotientSingularity, l_closed, l_direct, l_onewave
from .errors import DocumentError, DomainError
from .exact import digit_count, parse_rational
from .riemann_roch import ThreefoldData, chi_mK, hilbert_coefficients, plurigenus, validate


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror or exc}") from exc


def load_document(path: str) -> ThreefoldData:
    """Parse a threefold document, reporting errors by line or field."""
    text = _read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise DocumentError(f"{path}: top level must be a JSON object")

    def fail(field, message):
        raise DocumentError(f"{path}: {field}: {message}")

    chi_O = doc.get("chi_O")
    if not isinstance(chi_O, int) or isinstance(chi_O, bool):
        fail("chi_O", "required integer")
    raw_k3 = doc.get("K3")
    if isinstance(raw_k3, str):
        try:
            k3 = parse_rational(raw_k3)
        except DocumentError as exc:
            fail("K3", str(exc))
    elif isinstance(raw_k3, int) and not isinstance(raw_k3, bool):
        k3 = raw_k3
    else:
        fail("K3", 'required rational string like "1/26"')
    records = doc.get("basket", [])
    if not isinstance(records, list):
        fail("basket", "must be a list of {r, a, count} records")
    entries = []
    for idx, rec in enumerate(records):
        if not isinstance(rec, dict):
            fail(f"basket[{idx}]", "must be a {r, a, count} record")
        for key in ("r", "a"):
            if not isinstance(rec.get(key), int) or isinstance(rec.get(key), bool):
                fail(f"basket[{idx}].{key}", "required integer")
        count = rec.get("count", 1)
        if not isinstance(count, int) or isinstance(count, bool):
            fail(f"basket[{idx}].count", "must be an integer")
        try:
            entries.append((QuotientSingularity(rec["r"], rec["a"]), count))
        except DomainError as exc:
            fail(f"basket[{idx}]", str(exc))
    try:
        return ThreefoldData(chi_O, k3, Basket(entries))
    except DomainError as exc:
        raise DocumentError(f"{path}: {exc}") from exc


def _csv_ints(text: str, option: str) -> list[int]:
    try:
        return [int(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise DocumentError(f"{option}: expected comma-separated integers, got {text!r}") from exc


# -- subcommand handlers; each returns (inputs, result, text, exit_code) --

def _cmd_chi(args):
    X = load_document(args.input)
    value = chi_mK(X, args.m)
    return (
        {"input": args.input, "m": args.m},
        {"chi": str(value)},
        f"chi({args.m}K) = {value}",
        0,
    )


def _cmd_plurigenus(args):
    X = load_document(args.input)
    value = plurigenus(X, args.m)
    return (
        {"input": args.input, "m": args.m},
        {"plurigenus": str(value)},
        f"P_{args.m} = {value}",
        0,
    )


def _cmd_index(args):
    X = load_document(args.input)
    value = X.basket.index()
    return ({"input": args.input}, {"index": str(value)}, f"index = {value}", 0)


def _cmd_l(args):
    if args.form == "onewave":
        if args.a != 1:
            raise DomainError("--form onewave is only defined for weight a = 1")
        value = l_onewave(args.r, args.m)
    else:
        q = QuotientSingularity(args.r, args.a)
        value = l_direct(q, args.m) if args.form == "direct" else l_closed(q, args.m)
    return (
        {"r": args.r, "a": args.a, "m": args.m, "form": args.form},
        {"l": str(value)},
        str(value),
        0,
    )


def _cmd_validate(args):
    X = load_document(args.input)
    report = validate(X)
    return (
        {"input": args.input},
        {"ok": report.ok, "check": report.check, "detail": report.detail},
        str(report),
        0 if report.ok else 1,
    )


def _cmd_hilbert(args):
    X = load_document(args.input)
    c3, c2, c1, c0 = hilbert_coefficients(X)
    return (
        {"input": args.input},
        {"c3": str(c3), "c2": str(c2), "c1": str(c1), "c0": str(c0)},
        "\n".join(f"{name} = {value}" for name, value in [("c3", c3), ("c2", c2), ("c1", c1), ("c0", c0)]),
        0,
    )


def _cmd_hanamura(args):
    value = _bounds.hanamura_m0(args.r)
    return ({"r": args.r}, {"m0": str(value)}, f"m0 = {value}", 0)


def _cmd_kollar(args):
    value = _bounds.kollar_exponent(args.l)
    return ({"l": args.l}, {"exponent": str(value)}, f"exponent = {value}", 0)


def _cmd_birationality(args):
    R, m = _bounds.birationality_exponent(args.C)
    digits = digit_count(m)
    return (
        {"C": args.C},
        {"R": str(R), "m": str(m), "m_digits": digits},
        f"R = {R}\nm = {m} ({digits} digits)",
        0,
    )


def _cmd_certificate(args):
    lower, ok = _bounds.birationality_certificate(args.C)
    return (
        {"C": args.C},
        {"lower_bound": str(lower), "ok": ok},
        f"lower_bound = {lower}, {'ok' if ok else 'NOT ok'}",
        0 if ok else 1,
    )


def _cmd_defranchis(args):
    report = _bounds.defranchis_threefold_bound(
        args.s,
        parse_rational(args.K3),
        args.c1c2,
        args.c3,
        args.chi,
        expand_threshold=args.expand_threshold,
    )
    return (
        {"s": args.s, "K3": args.K3, "c1c2": args.c1c2, "c3": args.c3, "chi": args.chi},
        report.record(),
        report.text(),
        0,
    )


def _cmd_dual_degree(args):
    v = _csv_ints(args.v, "--v")
    value = _bounds.dual_degree(_bounds.ChernData(args.n, tuple(v)))
    warning = None if value > 0 else "dual degree is not positive; Chern data is degenerate"
    return (
        {"n": args.n, "v": v},
        {"dual_degree": str(value), "warning": warning},
        str(value),
        0,
    )


def _cmd_bezout(args):
    value = _bounds.bezout_bound(args.a, args.d, args.i)
    return ({"a": args.a, "d": args.d, "i": args.i}, {"bezout_bound": str(value)}, str(value), 0)


def _cmd_chi_bound(args):
    h = _csv_ints(args.h, "--h")
    value = _bounds.chi_upper_bound(_bounds.HodgeData(args.n, tuple(h)))
    return ({"n": args.n, "h": h}, {"chi_upper_bound": str(value)}, str(value), 0)


def _cmd_section4(args):
    result = _bounds.section4_bounds(args.r, parse_rational(args.K3), args.p)
    fields = [
        ("N_max", result.N_max),
        ("degX_max", result.degX_max),
        ("degY_max", result.degY_max),
        ("graph_deg_max", result.graph_deg_max),
    ]
    return (
        {"r": args.r, "K3": args.K3, "p": args.p},
        {name: str(value) for name, value in fields},
        "\n".join(f"{name} = {value}" for name, value in fields),
        0,
    )


def _cmd_verify(args):
    names = [args.check] if args.check else None
    reports = _oracle.run_checks(names, seed=args.seed)
    ok = all(report.passed for report in reports)
    return (
        {"check": args.check, "seed": args.seed},
        {"reports": [report.record() for report in reports], "ok": ok},
        "\n".join(report.describe() for report in reports),
        0 if ok else 1,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "machine"],
        default=argparse.SUPPRESS,
        help="output mode: human text (default) or one JSON object",
    )

    parser = argparse.ArgumentParser(
        prog="plurigenus",
        description="Exact plurigenera of canonical threefolds and effective birationality bounds.",
        epilog="Exit codes: 0 success/all checks pass, 1 domain or validation error, 2 malformed input.",
    )
    parser.add_argument("--format", choices=["text", "machine"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, command_name=None, parent=sub, **kwargs):
        p = parent.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler, command_name=command_name or name)
        return p

    p = add("chi", _cmd_chi, help="chi(mK) for a threefold document")
    p.add_argument("--input", required=True, help="document path or - for stdin")
    p.add_argument("--m", type=int, required=True)

    p = add("plurigenus", _cmd_plurigenus, help="h^0(mK) for m >= 2")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("index", _cmd_index, help="lcm of the basket orders")
    p.add_argument("--input", required=True)

    p = add("l", _cmd_l, help="local contribution l((1/r)(a,-a,1), m)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--form", choices=["direct", "closed", "onewave"], default="closed")

    p = add("validate", _cmd_validate, help="consistency checks for a threefold document")
    p.add_argument("--input", required=True)

    p = add("hilbert", _cmd_hilbert, help="coefficients of the cubic t -> chi(t rK)")
    p.add_argument("--input", required=True)

    bounds_parser = sub.add_parser("bounds", help="birationality exponents and certificates")
    bounds_sub = bounds_parser.add_subparsers(dest="bounds_command", required=True)

    p = add("hanamura", _cmd_hanamura, "bounds hanamura", parent=bounds_sub,
            help="stability threshold m0(r)")
    p.add_argument("--r", type=int, required=True)

    p = add("kollar", _cmd_kollar, "bounds kollar", parent=bounds_sub,
            help="birational exponent 11l+5")
    p.add_argument("--l", type=int, required=True)

    p = add("birationality", _cmd_birationality, "bounds birationality", parent=bounds_sub,
            help="(R, m) for all threefolds with chi(O) <= C")
    p.add_argument("--C", type=int, required=True)

    p = add("certificate", _cmd_certificate, "bounds certificate", parent=bounds_sub,
            help="exact lower bound certifying h^0(13C K) >= 2")
    p.add_argument("--C", type=int, required=True)

    p = add("defranchis", _cmd_defranchis, help="map-count bound for a smooth threefold")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--K3", required=True)
    p.add_argument("--c1c2", type=int, required=True)
    p.add_argument("--c3", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--expand-threshold", type=int, default=0,
                   help="materialize the power when its digit count is at most this (default: never)")

    p = add("dual-degree", _cmd_dual_degree, help="dual-variety degree from Chern numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", required=True, help="comma-separated c1^i(L).c_{n-i}(Z), i = 0..n")

    p = add("bezout", _cmd_bezout, help="total-degree bound a * d^i")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = add("chi-bound", _cmd_chi_bound, help="chi(O) bound from Hodge numbers of the domain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True, help="comma-separated h^i(X, O_X) for 2i <= n")

    p = add("section4", _cmd_section4, help="embedding and degree bounds from (r, K^3, p)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--K3", required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("verify", _cmd_verify, help="run the brute-force verification sweeps")
    p.add_argument("--check", choices=sorted(_oracle.CHECKS))
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(fmt, command, inputs, result, text, errors=()):
    if fmt == "machine":
        record = {"command": command, "inputs": inputs, "result": result, "errors": list(errors)}
        print(json.dumps(record))
    else:
        if text:
            print(text)
        for message in errors:
            print(message, file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    command = getattr(args, "command_name", None)
    try:
        inputs, result, text, code = args.handler(args)
    except DocumentError as exc:
        _emit(fmt, command, {}, None, "", [str(exc)])
        return 2
    except DomainError as exc:
        _emit(fmt, command, {}, None, "", [str(exc)])
        return 1
    _emit(fmt, command, inputs, result, text)
    if fmt == "text" and result and result.get("warning"):
        print(f"warning: {result['warning']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
