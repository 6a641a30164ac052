"""Command-line surface.

Subcommands
-----------
algebra   check a JSON algebra presentation (file or ``builtin:name``)
resolve   build a resolution and report generator counts, optionally verified
hh        cohomology dimensions and representatives in one degree
cup       cup product of two cochain expressions
bracket   Gerstenhaber bracket of two cochain expressions
qci       bracket table / theorem verification for the quantum plane
verify    property suites: homotopy, conditions, awez

All reports are JSON with a top-level ``"format": 1`` and sorted keys, so
two runs of the same command produce byte-identical output.  Exit codes:
0 on success and verified-equal results, 1 on a verification difference,
2 on a usage or input error (reported as JSON on standard error).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .algebra import AlgebraError, parse_algebra, truncated_poly
from .complexes import (bar_resolution, koszul_dual_numbers,
                        normalized_bar_resolution, tensor_over_algebra,
                        twisted_tensor_resolution)
from .cohomology import verify_main_theorem
from .diagonals import (aw_twisted, check_coassociative, diagonal_bar,
                        diagonal_qci, ez_twisted, iota_qci,
                        tensor_square_map)
from .fields import Twist
from .homotopies import (f_total, phi_bar, phi_koszul_dual_numbers,
                         phi_normalized_bar, phi_qci, phi_twisted)
from .qci import QciBuild, case_from_options

BUILTINS = ("lambda_q_generic",)


class CommandError(Exception):
    pass


def _emit(obj, text=None, as_text=False):
    if as_text and text is not None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _load_algebra(ref):
    """Load an algebra from a file path or ``builtin:name``."""
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        if name not in BUILTINS:
            raise CommandError(f"unknown builtin algebra {name!r}; "
                               f"available: {', '.join(BUILTINS)}")
        data = resources.files("hhtwist.data").joinpath(
            name + ".json").read_text()
    else:
        try:
            with open(ref) as fh:
                data = fh.read()
        except OSError as exc:
            raise CommandError(f"cannot read algebra file: {exc}")
    try:
        return parse_algebra(data)
    except (AlgebraError, ValueError, json.JSONDecodeError) as exc:
        raise CommandError(str(exc))


def _qci_build(args, default_degree=None):
    try:
        case = case_from_options(args.q, char=args.char)
    except ValueError as exc:
        raise CommandError(str(exc))
    n = args.max_degree
    if n is None:
        n = default_degree if default_degree is not None \
            else case.default_degree
    phi = getattr(args, "phi", "qci")
    return QciBuild(case, max_degree=n, phi=phi)


# ----------------------------------------------------------------------
# subcommands

def cmd_algebra(args):
    if args.action != "check":
        raise CommandError(f"unknown algebra action {args.action!r}")
    alg, _field = _load_algebra(args.algebra)
    out = {
        "format": 1,
        "name": alg.name,
        "basis_size": alg.dim,
        "grading_rank": alg.grading_rank,
        "unit": alg.labels[alg.unit_idx],
        "ok": True,
    }
    text = f"algebra {alg.name}: {alg.dim} basis elements, verified"
    _emit(out, text, args.text)
    return 0


def cmd_resolve(args):
    n = args.max_degree
    if args.type in ("bar", "nbar"):
        alg, _f = _load_algebra(args.algebra)
        cx = (normalized_bar_resolution(alg, n) if args.type == "nbar"
              else bar_resolution(alg, n))
    elif args.type == "koszul":
        b = _qci_build(args, default_degree=n)
        cx = b.Kx
    elif args.type == "twisted":
        b = _qci_build(args, default_degree=n)
        cx = b.K
    else:
        raise CommandError(f"unknown resolution type {args.type!r}")
    counts = {str(d): cx.num_gens(d) for d in range(0, n + 1)}
    out = {"format": 1, "type": args.type, "name": cx.name,
           "max_degree": n, "generators": counts}
    if args.verify:
        cx.check_d_squared(n)
        cx.check_augmented()
        out["verified"] = {"d_squared_zero": True, "augmentation_exact": True}
    lines = [f"{cx.name} ({args.type}) through degree {n}"]
    lines += [f"  degree {d}: {counts[str(d)]} generators"
              for d in range(0, n + 1)]
    if args.verify:
        lines.append("  verified: d^2 = 0, augmented complex exact")
    _emit(out, "\n".join(lines), args.text)
    return 0


def cmd_hh(args):
    b = _qci_build(args)
    coh = b.ctx.cohomology
    n = args.n
    if n > b.N - 1:
        raise CommandError(
            f"degree {n} needs --max-degree at least {n + 1}")
    spaces = []
    lines = [f"HH^{n} of {b.algebra.name} (case {b.case.key})"]
    for a in coh.internal_degrees(n):
        sp = coh.space(n, a)
        if not sp["dim"]:
            continue
        reps = [b.render_cochain(f) for f in sp["reps"]]
        spaces.append({"internal_degree": list(a), "dimension": sp["dim"],
                       "representatives": reps})
        lines.append(f"  internal degree {list(a)}: dimension {sp['dim']}, "
                     f"representatives {', '.join(reps)}")
    out = {"format": 1, "degree": n, "case": b.case.key,
           "total_dimension": sum(s["dimension"] for s in spaces),
           "spaces": spaces}
    _emit(out, "\n".join(lines), args.text)
    return 0


def _binary_op(args, op):
    b = _qci_build(args)
    try:
        f = b.parse_cochain(args.f)
        g = b.parse_cochain(args.g)
    except ValueError as exc:
        raise CommandError(str(exc))
    h = b.ctx.cup(f, g) if op == "cup" else b.ctx.bracket(f, g)
    coh = b.ctx.cohomology
    if not coh.is_cocycle(h):
        raise CommandError(f"{op} of non-cocycles is not a cocycle; "
                           "inputs must be cocycles")
    cls = [repr(c) for c in coh.reduce_to_class(h)]
    out = {
        "format": 1,
        "input": {"f": args.f, "g": args.g, "op": op},
        "case": b.case.key,
        "chain_level": b.render_cochain(h),
        "class": cls,
        "internal_degree": list(h.a),
    }
    sym = "f cup g" if op == "cup" else "[f, g]"
    text = (f"{sym} = {b.render_cochain(h)}  "
            f"(class coordinates [{', '.join(cls)}])")
    _emit(out, text, args.text)
    return 0


def cmd_cup(args):
    return _binary_op(args, "cup")


def cmd_bracket(args):
    return _binary_op(args, "bracket")


def _display(expr):
    """Render e(i,j) as e*(i,j) for the human-readable tables."""
    return expr.replace("e(", "e*(")


def cmd_qci(args):
    if not args.table and not args.verify_theorem:
        raise CommandError("qci needs --table and/or --verify-theorem")
    b = _qci_build(args)
    out = {"format": 1, "case": b.case.key, "q": repr(b.q),
           "max_degree": b.N}
    if b.r is not None:
        out["r"] = b.r
    lines = [f"Lambda_q, case {b.case.key}, q = {repr(b.q)}, "
             f"max degree {b.N}"]
    code = 0
    if args.table:
        rows = b.bracket_table()
        out["table"] = [
            {"f": r["f"], "g": r["g"], "chain_level": r["chain_level"],
             "expected": r["expected"], "match": r["match"]}
            for r in rows]
        out["table_ok"] = all(r["match"] for r in rows)
        if not out["table_ok"]:
            code = 1
        lines.append("")
        lines.append("bracket table (nonzero and mismatched rows):")
        width = max(len(_display(r["f"])) + len(_display(r["g"]))
                    for r in rows) + 4
        for r in rows:
            if r["chain_level"] == "0" and r["expected"] == "0" \
                    and r["match"]:
                continue
            pair = f"[{_display(r['f'])}, {_display(r['g'])}]"
            flag = "" if r["match"] else \
                f"   MISMATCH (expected {_display(r['expected'])})"
            lines.append(f"  {pair:<{width}} = "
                         f"{_display(r['chain_level'])}{flag}")
        lines.append(f"table verified: {out['table_ok']}")
    if args.verify_theorem:
        field = b.field
        R = truncated_poly(field, "x", 2)
        S = truncated_poly(field, "y", 2)
        tw = Twist([[field.one() / (-b.q)]])
        n = min(b.N, 8)
        rep = verify_main_theorem(R, S, tw, n)
        out["theorem"] = {"max_degree": n, "checked": rep["checked"],
                          "classes": rep["classes"],
                          "failures": len(rep["failures"]),
                          "ok": rep["ok"]}
        if not rep["ok"]:
            code = 1
        lines.append(f"theorem check through degree {n}: "
                     f"{rep['checked']} bracket pairs over {rep['classes']} "
                     f"classes, {len(rep['failures'])} failures")
    _emit(out, "\n".join(lines), args.text)
    return code


def _homotopy_report(label, phi, upto, reports):
    from .complexes import elem_add_into, elem_sub
    F = f_total(phi.source)
    src, tgt = phi.source, phi.target
    entries = []
    ok = True
    for n in range(0, upto + 1):
        good = 0
        bad = 0
        for g in src.gen_keys(n):
            total = {}
            elem_add_into(total, tgt.apply_diff(n + 1, phi.on_gen(n, g)))
            if n > 0:
                elem_add_into(total, phi.apply(n - 1, src.diff_gen(n, g)))
            if elem_sub(total, F.on_gen(n, g)):
                bad += 1
            else:
                good += 1
        entries.append({"degree": n, "generators": good + bad,
                        "residual_zero": bad == 0})
        ok = ok and bad == 0
    reports.append({"homotopy": label, "degrees": entries, "ok": ok})
    return ok


def _suite_homotopy(b, upto):
    reports = []
    ok = True
    ok &= _homotopy_report("phi_qci", phi_qci(b.K, b.q), upto, reports)
    phx = phi_koszul_dual_numbers(b.Kx)
    phy = phi_koszul_dual_numbers(b.Ky)
    ok &= _homotopy_report("phi_koszul_x", phx, upto, reports)
    ok &= _homotopy_report("phi_koszul_y", phy, upto, reports)
    ok &= _homotopy_report("phi_twisted", phi_twisted(b.K, phx, phy),
                           upto, reports)
    B = bar_resolution(b.algebra, min(upto + 1, 5))
    ok &= _homotopy_report("phi_bar", phi_bar(B), min(upto, 4), reports)
    NB = normalized_bar_resolution(b.algebra, min(upto + 1, 5))
    ok &= _homotopy_report("phi_normalized_bar", phi_normalized_bar(NB),
                           min(upto, 4), reports)
    return ok, reports


def _suite_conditions(b, upto):
    """The comparison maps between the Koszul-type and bar resolutions."""
    from .complexes import elem_sub

    reports = []
    ok = True
    n_bar = min(upto, 3)
    B = bar_resolution(b.algebra, n_bar + 1)
    iota = iota_qci(b.K, B, b.q)
    try:
        iota.check_chain_map(n_bar)
        reports.append({"check": "iota_chain_map", "max_degree": n_bar,
                        "ok": True})
    except AssertionError:
        reports.append({"check": "iota_chain_map", "max_degree": n_bar,
                        "ok": False})
        ok = False
    # Delta_B iota = (iota (x) iota) Delta_K, degree by degree
    dB = diagonal_bar(B)
    dK = diagonal_qci(b.K, b.q)
    sq_B = tensor_over_algebra(B)
    ii = tensor_square_map(iota, square_target=sq_B)
    entries = []
    for n in range(0, n_bar + 1):
        good = True
        for g in b.K.gen_keys(n):
            lhs = dB.apply(n, iota.on_gen(n, g))
            rhs = ii.apply(n, dK.on_gen(n, g))
            if elem_sub(lhs, rhs):
                good = False
        entries.append({"degree": n, "ok": good})
        ok = ok and good
    reports.append({"check": "diagonal_compatibility", "degrees": entries,
                    "ok": all(e["ok"] for e in entries)})
    # coassociativity of the closed diagonal
    entries = check_coassociative(dK, min(upto, b.N - 1))
    ok = ok and all(e["ok"] for e in entries)
    reports.append({"check": "coassociativity", "degrees": entries,
                    "ok": all(e["ok"] for e in entries)})
    return ok, reports


def _suite_awez(b, upto):
    reports = []
    ok = True
    n = min(upto, 4)
    NB = normalized_bar_resolution(b.algebra, n + 1)
    # nbar factors for the total complex
    fR = normalized_bar_resolution(b.R, n + 1)
    fS = normalized_bar_resolution(b.S, n + 1)
    tot = twisted_tensor_resolution(fR, fS, b.twist, n + 1,
                                    algebra=b.algebra)
    aw = aw_twisted(NB, tot)
    ez = ez_twisted(tot, NB)
    for label, gm in (("aw_chain_map", aw), ("ez_chain_map", ez)):
        try:
            gm.check_chain_map(n)
            reports.append({"check": label, "max_degree": n, "ok": True})
        except AssertionError:
            reports.append({"check": label, "max_degree": n, "ok": False})
            ok = False
    from .complexes import elem_sub
    entries = []
    for d in range(0, n + 1):
        good = True
        for g in tot.gen_keys(d):
            back = aw.apply(d, ez.on_gen(d, g))
            if elem_sub(back, tot.gen_elem(g)):
                good = False
        entries.append({"degree": d, "ok": good})
        ok = ok and good
    reports.append({"check": "aw_ez_identity", "degrees": entries,
                    "ok": all(e["ok"] for e in entries)})
    return ok, reports


def cmd_verify(args):
    default_n = {"homotopy": 5, "conditions": 4, "awez": 4}[args.suite]
    n = args.max_degree if args.max_degree is not None else default_n
    b = _qci_build(args, default_degree=max(n + 2, 6))
    if args.suite == "homotopy":
        ok, reports = _suite_homotopy(b, n)
    elif args.suite == "conditions":
        ok, reports = _suite_conditions(b, n)
    elif args.suite == "awez":
        ok, reports = _suite_awez(b, n)
    else:
        raise CommandError(f"unknown suite {args.suite!r}")
    out = {"format": 1, "suite": args.suite, "case": b.case.key,
           "max_degree": n, "reports": reports, "ok": ok}
    lines = [f"suite {args.suite} (case {b.case.key}, degree <= {n}): "
             f"{'all pass' if ok else 'FAILURES'}"]
    for r in reports:
        label = r.get("homotopy") or r.get("check")
        lines.append(f"  {label}: {'ok' if r['ok'] else 'FAIL'}")
    _emit(out, "\n".join(lines), args.text)
    return 0 if ok else 1


# ----------------------------------------------------------------------
# argument parsing

def _add_common(p, qci=True):
    p.add_argument("--max-degree", type=int, default=None,
                   help="top homological degree (default per command)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false",
                     default=False, help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true",
                     help="human-readable output")
    if qci:
        p.add_argument("--q", default="generic",
                       help="q: 'generic', 'root:r', or a scalar literal")
        p.add_argument("--char", type=int, default=0,
                       help="field characteristic (0 or a prime)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hhtwist",
        description="Hochschild cohomology, cup products, and Gerstenhaber "
                    "brackets of graded algebras and twisted tensor products")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="validate an algebra presentation")
    p.add_argument("action", choices=["check"])
    p.add_argument("--algebra", default="builtin:lambda_q_generic")
    _add_common(p, qci=False)
    p.set_defaults(fn=cmd_algebra)

    p = sub.add_parser("resolve", help="build and check a resolution")
    p.add_argument("--type", required=True,
                   choices=["bar", "nbar", "koszul", "twisted"])
    p.add_argument("--algebra", default="builtin:lambda_q_generic")
    p.add_argument("--verify", action="store_true")
    _add_common(p)
    p.set_defaults(fn=cmd_resolve, max_degree_default=4)

    p = sub.add_parser("hh", help="cohomology in one degree")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_hh)

    p = sub.add_parser("cup", help="cup product of two cochains")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cup)

    p = sub.add_parser("bracket", help="Gerstenhaber bracket of two cochains")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_bracket)

    p = sub.add_parser("qci", help="quantum-plane bracket table and theorem")
    p.add_argument("--table", action="store_true")
    p.add_argument("--verify-theorem", action="store_true")
    p.add_argument("--phi", choices=["qci", "twisted"], default="qci",
                   help="which contracting homotopy to use")
    _add_common(p)
    p.set_defaults(fn=cmd_qci)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True,
                   choices=["homotopy", "conditions", "awez"])
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "max_degree", None) is None and \
            hasattr(args, "max_degree_default"):
        args.max_degree = args.max_degree_default
    if args.command == "resolve" and args.max_degree is None:
        args.max_degree = 4
    try:
        return args.fn(args)
    except CommandError as exc:
        sys.stderr.write(json.dumps(
            {"format": 1, "error": str(exc)}, sort_keys=True) + "\n")
        return 2
    except (AssertionError, ValueError) as exc:
        sys.stderr.write(json.dumps(
            {"format": 1, "error": str(exc)}, sort_keys=True) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
