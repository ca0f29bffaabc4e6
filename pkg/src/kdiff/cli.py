"""Command-line entry point: ``kdiff <command> ...``.

Every command is a pure function of argv.  Exit codes: 0 on success, 1 on a
domain error (the error class name is printed), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from kdiff.catalog import load_catalog, verify_all
from kdiff.certificates import Certificate, certify_auto, certify_with_divisor
from kdiff.divisor import MarkingMap, parse_class, split_linear
from kdiff.errors import KdiffError
from kdiff.extremality import extremality_report
from kdiff.signature import (
    Signature,
    dimension,
    format_rational,
    format_signature,
    is_infinite_area,
    kappa_mu,
    parse_rational,
    parse_signature,
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _q(x) -> str | None:
    return None if x is None else format_rational(Fraction(x))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _sig(tokens) -> Signature:
    return parse_signature(" ".join(tokens))


# -- stratum ---------------------------------------------------------------


def cmd_stratum_info(args) -> str:
    s = _sig(args.signature)
    infinite = is_infinite_area(s)
    try:
        km = _q(kappa_mu(s))
    except KdiffError:
        km = None
    info = {
        "stratum": format_signature(s),
        "g": s.g,
        "k": s.k,
        "n": s.n,
        "kappa_mu": km,
        "dimension": dimension(s),
        "area": "infinite" if infinite else "finite",
    }
    if args.json:
        return _dump(info)
    return "\n".join(f"{key}: {'undefined' if val is None else val}" for key, val in info.items())


# -- certify ---------------------------------------------------------------


def _format_certificate(c: Certificate) -> str:
    d = c.to_dict()
    lines = [f"stratum: {d['stratum']}", f"verdict: {d['verdict']}", f"witness: {d['witness']['kind']}"]
    for key, val in d["witness"].items():
        if key != "kind":
            lines.append(f"  {key}: {val}")
    if d["reference"]:
        lines.append(f"reference: {d['reference']}")
    lines += [f"assumes: {a}" for a in d["assumptions"]]
    lines += [f"note: {n}" for n in d["notes"]]
    return "\n".join(lines)


def cmd_certify(args) -> str:
    s = _sig(args.signature)
    if args.class_text is not None:
        a, b = split_linear(parse_class(args.class_text))
        if args.marking is None:
            marking = MarkingMap.all_points(s.n)
        else:
            try:
                marking = MarkingMap(tuple(int(p) for p in args.marking.split(",")))
            except ValueError:
                raise UsageError(f"bad marking {args.marking!r}") from None
        b = b + (Fraction(0),) * (marking.arity - len(b))
        cert = certify_with_divisor(s, args.name, a, b, marking)
    else:
        L = None if args.L is None else parse_rational(args.L)
        cert = certify_auto(s, L)
    return cert.to_json() if args.json else _format_certificate(cert)


# -- catalog ---------------------------------------------------------------


def cmd_catalog_list(args) -> str:
    entries = load_catalog()
    if args.json:
        return _dump([
            {
                "section": e.section,
                "stratum": format_signature(e.stratum),
                "kind": e.kind,
                "divisor": e.divisor_name or None,
                "class": e.class_text() if not e.is_hn else None,
                "marking": list(e.marking.positions) if not e.is_hn else None,
                "ambient": str(e.ambient) if e.ambient else None,
            }
            for e in entries
        ])
    lines = []
    for e in entries:
        if e.is_hn:
            lines.append(f"{e.section:5} {e.stratum.pretty():24} hn")
        else:
            lines.append(
                f"{e.section:5} {e.stratum.pretty():24} {e.divisor_name} = {e.class_text()}  [marking {e.marking}]"
            )
    return "\n".join(lines)


def cmd_catalog_verify(args) -> str:
    certs = verify_all()
    if args.json:
        return _dump([c.to_dict() for c in certs])
    lines = []
    for c in certs:
        value = c.coefficient if c.coefficient is not None else getattr(c.witness, "kappa_over_12", None)
        lines.append(f"{c.reference:5} {c.stratum.pretty():24} {c.verdict.value:24} {c.witness.kind} {_q(value)}")
    return "\n".join(lines)


# -- extremal --------------------------------------------------------------


def cmd_extremal_report(args) -> str:
    reports = extremality_report(_sig(args.signature))
    rows = [
        {
            "pair": list(r.pair),
            "merged": format_signature(r.merged),
            "coefficient": _q(r.coefficient),
            "kappa_difference": _q(r.kappa_difference),
            "ratio": _q(r.ratio),
            "extremal_hypothesis": r.extremal_hypothesis,
        }
        for r in reports
    ]
    if args.json:
        return _dump(rows)
    if not rows:
        return "no pairs to merge"
    out = []
    for r in rows:
        flag = "extremal" if r["extremal_hypothesis"] else "hypotheses fail"
        out.append(
            f"({r['pair'][0]},{r['pair'][1]}) -> {r['merged']}  coefficient={r['coefficient']}"
            f"  dkappa={r['kappa_difference']}  ratio={r['ratio']}  {flag}"
        )
    return "\n".join(out)


# -- origami ---------------------------------------------------------------


def _origami(args):
    from kdiff.origami.surface import Origami

    o = Origami.from_cycles(args.h, args.v, args.squares)
    o.check_connected()
    return o


def _origami_dict(o) -> dict:
    h, v = o.cycle_strings()
    return {"h": h, "v": v}


def cmd_origami_enumerate(args) -> str:
    from kdiff.origami.enumeration import enumerate_origamis

    found = enumerate_origamis(args.squares, parse_signature(args.stratum), jobs=args.jobs)
    if args.json:
        return _dump({"count": len(found), "origamis": [_origami_dict(o) for o in found]})
    return "\n".join([f"count: {len(found)}"] + [str(o) for o in found])


def cmd_origami_orbit(args) -> str:
    from kdiff.origami.orbits import sl2_orbit
    from kdiff.origami.surface import horizontal_cylinders, stratum_of

    o = _origami(args)
    orbit = sl2_orbit(o)
    members = []
    for rep in orbit.representatives:
        cyl = horizontal_cylinders(rep)
        members.append({**_origami_dict(rep), "cylinders": [list(c) for c in cyl.cylinders],
                        "modulus_sum": _q(cyl.modulus_sum())})
    data = {"stratum": format_signature(stratum_of(o)), "size": orbit.size, "members": members}
    if args.json:
        return _dump(data)
    lines = [f"stratum: {data['stratum']}", f"size: {orbit.size}"]
    for m in members:
        cyl = " ".join(f"{w}x{h}" for w, h in m["cylinders"])
        lines.append(f"h={m['h']} v={m['v']}  cylinders {cyl}  sum h/w = {m['modulus_sum']}")
    return "\n".join(lines)


def cmd_origami_lyapunov(args) -> str:
    from kdiff.origami.lyapunov import lyapunov_sum

    rep = lyapunov_sum(_origami(args))
    data = {
        "stratum": format_signature(rep.stratum),
        "orbit_size": rep.orbit_size,
        "L": _q(rep.L),
        "kappa_term": _q(rep.kappa_term),
        "sv_term": _q(rep.sv_term),
    }
    if args.json:
        return _dump(data)
    return "\n".join(f"{key}: {val}" for key, val in data.items())


def cmd_origami_varying(args) -> str:
    from kdiff.origami.lyapunov import varying_test

    rep = varying_test(parse_signature(args.stratum), args.max_squares, jobs=args.jobs)
    data = {
        "stratum": format_signature(rep.target),
        "max_squares": rep.max_squares,
        "orbits": [
            {"N": o.N, "component": o.component.value, **_origami_dict(o.key), "size": o.size, "L": _q(o.L)}
            for o in rep.orbits
        ],
        "values": {c.value: [_q(x) for x in v] for c, v in rep.values().items()},
        "certificates": [c.to_dict() for c in rep.certificates],
    }
    if args.json:
        return _dump(data)
    lines = [f"stratum: {data['stratum']}  squares <= {rep.max_squares}  orbits: {len(rep.orbits)}"]
    for o in data["orbits"]:
        lines.append(f"N={o['N']} {o['component']:8} size={o['size']:<5} L={o['L']}  h={o['h']} v={o['v']}")
    for comp, vals in data["values"].items():
        lines.append(f"{comp}: L in {{{', '.join(vals)}}}")
    for c in rep.certificates:
        lines.append(f"{c.stratum.pretty()}: {c.verdict.value} ({'; '.join(c.notes)})")
    return "\n".join(lines)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kdiff", description="Divisor classes and certificates on strata of k-differentials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(parent, name, func, help_text):
        sp = parent.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    st = sub.add_parser("stratum", help="stratum invariants").add_subparsers(dest="action", required=True)
    sp = add(st, "info", cmd_stratum_info, "n, kappa_mu, dimension, area type")
    sp.add_argument("signature", nargs="+", help="e.g. k=1 g=3 mu=2,1,1  or  H(4)^odd")

    sp = add(sub, "certify", cmd_certify, "certify triviality or affinity")
    sp.add_argument("signature", nargs="+")
    sp.add_argument("--class", dest="class_text", help="divisor class a*lambda + b1*psi1 + ...")
    sp.add_argument("--marking", help="positions of the marked points, e.g. 1,2")
    sp.add_argument("--name", default="D", help="divisor name for --class")
    sp.add_argument("--L", help="Lyapunov sum L_mu, used for Harder-Narasimhan strata")

    cat = sub.add_parser("catalog", help="the nonvarying catalog").add_subparsers(dest="action", required=True)
    add(cat, "list", cmd_catalog_list, "list catalog entries")
    add(cat, "verify", cmd_catalog_verify, "certify every catalog entry")

    ex = sub.add_parser("extremal", help="merging two zeros").add_subparsers(dest="action", required=True)
    sp = add(ex, "report", cmd_extremal_report, "one row per pair of zeros")
    sp.add_argument("signature", nargs="+")

    og = sub.add_parser("origami", help="square-tiled surfaces").add_subparsers(dest="action", required=True)
    sp = add(og, "enumerate", cmd_origami_enumerate, "all origamis in a stratum")
    sp.add_argument("--squares", type=int, required=True)
    sp.add_argument("--stratum", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    for name, func, help_text in (
        ("orbit", cmd_origami_orbit, "SL(2,Z)-orbit and cylinders"),
        ("lyapunov", cmd_origami_lyapunov, "exact sum of Lyapunov exponents"),
    ):
        sp = add(og, name, func, help_text)
        sp.add_argument("h", help="horizontal gluing in cycle notation, e.g. (1,2)")
        sp.add_argument("v", help="vertical gluing in cycle notation")
        sp.add_argument("--squares", type=int, help="number of squares (default: largest label)")
    sp = add(og, "varying", cmd_origami_varying, "compare L across orbits")
    sp.add_argument("--stratum", required=True)
    sp.add_argument("--max-squares", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def run(argv) -> CommandResult:
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            args = parser.parse_args(list(argv))
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return CommandResult(0, args.func(args))
    except SystemExit as exc:  # --help
        return CommandResult(int(exc.code or 0), buf.getvalue().rstrip("\n"))
    except UsageError as exc:
        return CommandResult(2, f"usage error: {exc}")
    except KdiffError as exc:
        return CommandResult(1, f"error: {type(exc).__name__}: {exc}")


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    if result.output:
        print(result.output, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
