"""Command-line surface: single-semigroup queries, family scans, identity
verification, and quasipolynomial fitting, with deterministic human / JSON /
CSV output.

Exit status: 0 on success, 1 on usage or data errors, 2 when a verification
subcommand finds a mismatch inside its guaranteed regime (a mismatch below the
regime bound is reported but exits 0).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .factorizations import (
    betti_elements,
    delta_set_up_to,
    minimal_presentation,
)
from .parametric import (
    LinearFamily,
    SCAN_INVARIANTS,
    family_from_spec,
    pf_transport,
    scan,
    transport_presentation,
    verify_fast_apery,
    betti_bijection,
)
from .quasipoly import FitMismatch, fit, leading_coefficient
from .semigroup import Semigroup
from .weighted import (
    delta_w_of_element,
    max_delta_w,
    min_delta_w,
    weighted_delta_union_up_to,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REGIME_MISMATCH = 2


def _jsonable(value):
    """Recursively turn Fractions into exact strings; everything else stays."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(payload: dict, rows, args) -> None:
    """payload: full structured result (JSON mode); rows: list of (key, value)
    pairs for the human table and CSV."""
    if args.json:
        print(json.dumps(_jsonable(payload), indent=2))
        return
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for key, value in rows:
            writer.writerow([key, _csv_cell(value)])
        sys.stdout.write(buf.getvalue())
        return
    width = max((len(str(k)) for k, _ in rows), default=0)
    for key, value in rows:
        print(f"{str(key):<{width}}  {_human_cell(value)}")


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return ";".join(str(_csv_cell(v)) for v in value)
    return value


def _human_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(_human_cell(v)) for v in value)
    if value is None:
        return "-"
    return value


def _relation_row(rel):
    left = "(" + ",".join(map(str, rel.left)) + ")"
    right = "(" + ",".join(map(str, rel.right)) + ")"
    return f"{left} = {right}"


def _add_format_flags(p):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable JSON output")
    fmt.add_argument("--csv", action="store_true", help="CSV output (vectors and sets joined with ';')")


def cmd_invariants(args) -> int:
    S = Semigroup(args.generators)
    base = args.apery if args.apery is not None else S.multiplicity
    ap = S.apery_set(base)
    payload = {
        "generators": list(S.generators),
        "gcd": S.d,
        "minimal_generators": list(S.minimal_generators()),
        "frobenius": S.frobenius(),
        "genus": S.genus(),
    }
    if S.d == 1:
        payload["type"] = S.type()
        payload["pseudo_frobenius"] = list(S.pseudo_frobenius())
        payload["wilf_standard"] = S.wilf_number("standard")
        payload["wilf_variant"] = S.wilf_number("variant")
    else:
        payload["type"] = None
        payload["pseudo_frobenius"] = None
        payload["wilf_standard"] = None
        payload["wilf_variant"] = None
    payload["apery"] = {"base": base, "elements": list(ap.elements)}
    rows = [(k, v) for k, v in payload.items() if k != "apery"]
    rows.append(("apery base", base))
    rows.append(("apery", list(ap.elements)))
    _emit(payload, rows, args)
    return EXIT_OK


def cmd_minpres(args) -> int:
    S = Semigroup(args.generators)
    rels = minimal_presentation(S)
    payload = {
        "generators": list(S.generators),
        "relations": [
            {"degree": r.degree, "left": list(r.left), "right": list(r.right)} for r in rels
        ],
    }
    rows = [("relations", len(rels))]
    rows += [(f"degree {r.degree}", _relation_row(r)) for r in rels]
    _emit(payload, rows, args)
    return EXIT_OK


def cmd_delta(args) -> int:
    S = Semigroup(args.generators)
    w = (
        tuple(Fraction(x) for x in args.weights)
        if args.weights
        else (Fraction(1),) * S.k
    )
    dmin = min_delta_w(S, w)
    dmax = max_delta_w(S, w)
    betti_union = sorted(
        {g for b in betti_elements(S) for g in delta_w_of_element(S, b, w)}
    )
    payload = {
        "generators": list(S.generators),
        "weights": list(w),
        "min_delta": dmin,
        "max_delta": dmax,
        "union_over_betti_elements": betti_union,
    }
    rows = [
        ("min delta", dmin if dmin != 0 else "0 (empty delta set)"),
        ("max delta", dmax),
        ("union over Betti elements", betti_union),
    ]
    if args.max_element is not None:
        if all(x == 1 for x in w):
            brute = list(delta_set_up_to(S, args.max_element))
        else:
            brute = list(weighted_delta_union_up_to(S, w, args.max_element))
        payload["brute_force"] = {"max_element": args.max_element, "deltas": brute}
        rows.append((f"brute force up to {args.max_element}", brute))
    _emit(payload, rows, args)
    return EXIT_OK


def _load_family(args):
    if args.spec == "-":
        doc = json.load(sys.stdin)
    else:
        with open(args.spec, encoding="utf-8") as fh:
            doc = json.load(fh)
    return family_from_spec(doc), doc


def _family_range(args, doc):
    if getattr(args, "range", None):
        lo, hi = args.range
    elif "range" in doc:
        lo, hi = doc["range"]
    else:
        raise ValueError('no parameter range: pass --range A B or put "range" in the spec file')
    return range(lo, hi + 1, getattr(args, "step", 1) or 1)


def _user_to_internal(family, n: int) -> int:
    # linear family specs are normalized on load; "shift" converts the
    # user-facing parameter of the original (w, r) into the normalized one
    if isinstance(family, LinearFamily) and family.shift:
        return n - family.shift
    return n


def cmd_family_scan(args) -> int:
    family, doc = _load_family(args)
    ns = _family_range(args, doc)
    rows = scan(family, [_user_to_internal(family, n) for n in ns], args.invariant)
    rows = [(u, v) for u, (_, v) in zip(ns, rows)]
    payload = {"invariant": args.invariant, "rows": [[n, _jsonable(v)] for n, v in rows]}
    table = [("n", args.invariant)] + rows if not (args.json or args.csv) else rows
    if args.json:
        _emit(payload, rows, args)
    else:
        _emit(payload, table, args)
    return EXIT_OK


def cmd_family_verify_phi(args) -> int:
    family, _ = _load_family(args)
    rep = transport_presentation(family, _user_to_internal(family, args.n))
    payload = {
        "n": args.n,
        "period": rep.period,
        "in_guaranteed_regime": rep.in_guaranteed_regime,
        "ok": rep.ok,
        "problems": list(rep.problems),
        "image": [
            {"degree": r.degree, "left": list(r.left), "right": list(r.right)} for r in rep.image
        ],
    }
    rows = [
        ("verify-phi", "PASS" if rep.ok else "FAIL"),
        ("n", args.n),
        ("period", rep.period),
        ("guaranteed regime", rep.in_guaranteed_regime),
    ]
    rows += [(f"image degree {r.degree}", _relation_row(r)) for r in rep.image]
    rows += [("problem", p) for p in rep.problems]
    _emit(payload, rows, args)
    return EXIT_REGIME_MISMATCH if (not rep.ok and rep.in_guaranteed_regime) else EXIT_OK


def cmd_family_verify_betti(args) -> int:
    family, _ = _load_family(args)
    rep = betti_bijection(family, _user_to_internal(family, args.n))
    ok = rep.is_bijection
    payload = {
        "n": args.n,
        "period": rep.period,
        "delta": rep.delta,
        "in_guaranteed_regime": rep.in_guaranteed_regime,
        "ok": ok,
        "mapping": [list(p) for p in rep.mapping],
        "anomalies": [[b, [str(x) for x in ls]] for b, ls in rep.anomalies],
    }
    rows = [
        ("verify-betti-bijection", "PASS" if ok else "FAIL"),
        ("n", args.n),
        ("delta", rep.delta),
        ("guaranteed regime", rep.in_guaranteed_regime),
    ] + [(f"{src}", f"-> {dst}") for src, dst in rep.mapping]
    _emit(payload, rows, args)
    return EXIT_REGIME_MISMATCH if (not ok and rep.in_guaranteed_regime) else EXIT_OK


def cmd_family_verify_apery(args) -> int:
    family, doc = _load_family(args)
    if args.n is not None:
        ns = [args.n]
    else:
        ns = list(_family_range(args, doc))
    any_regime_fail = False
    rows = []
    results = []
    for n in ns:
        chk = verify_fast_apery(family, _user_to_internal(family, n))
        ok = chk.ok
        if not ok and chk.in_guaranteed_regime:
            any_regime_fail = True
        results.append(
            {
                "n": n,
                "ok": ok,
                "matches_direct": chk.matches,
                "singletons_ok": not chk.singleton_failures,
                "in_guaranteed_regime": chk.in_guaranteed_regime,
            }
        )
        rows.append((f"n={n}", "PASS" if ok else "FAIL"))
    _emit({"results": results}, rows, args)
    return EXIT_REGIME_MISMATCH if any_regime_fail else EXIT_OK


def cmd_family_verify_pf(args) -> int:
    family, _ = _load_family(args)
    rep = pf_transport(family, _user_to_internal(family, args.n))
    ok = rep.is_bijection and rep.types_equal
    payload = {
        "n": args.n,
        "step": rep.step,
        "in_guaranteed_regime": rep.in_guaranteed_regime,
        "ok": ok,
        "type_n": rep.type_n,
        "type_next": rep.type_next,
        "mapping": [list(p) for p in rep.mapping],
    }
    rows = [
        ("verify-pf", "PASS" if ok else "FAIL"),
        ("n", args.n),
        ("type at n", rep.type_n),
        (f"type at n+{rep.step}", rep.type_next),
        ("guaranteed regime", rep.in_guaranteed_regime),
    ] + [(f"{a}", f"-> {b}") for a, b in rep.mapping]
    _emit(payload, rows, args)
    return EXIT_REGIME_MISMATCH if (not ok and rep.in_guaranteed_regime) else EXIT_OK


def _read_scan_rows(source) -> dict:
    """Parse a previously emitted scan (JSON payload or CSV n,value rows)."""
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    text = text.strip()
    if text.startswith("{"):
        return {int(n): Fraction(str(v)) for n, v in json.loads(text)["rows"]}
    samples = {}
    for line in text.splitlines():
        n, value = line.split(",", 1)
        samples[int(n)] = Fraction(value)
    return samples


def cmd_family_fit(args) -> int:
    family, doc = _load_family(args)
    if getattr(args, "from_scan", None):
        samples = _read_scan_rows(args.from_scan)
    else:
        ns = _family_range(args, doc)
        rows = scan(family, [_user_to_internal(family, n) for n in ns], args.invariant)
        samples = {u: v for u, (_, v) in zip(ns, rows)}
    result = fit(samples, args.period, args.degree)
    if isinstance(result, FitMismatch):
        payload = {"fit": None, "mismatch_n": result.mismatch_n, "reason": result.reason}
        _emit(payload, [("fit", "MISMATCH"), ("at n", result.mismatch_n), ("reason", result.reason)], args)
        return EXIT_ERROR
    lead = leading_coefficient(result)
    payload = {
        "invariant": args.invariant,
        "period": result.period,
        "degree": result.degree,
        "n_min": result.n_min,
        "leading_coefficient": lead,
        "coefficients": [[c for c in row] for row in result.coeffs],
    }
    rows_out = [
        ("invariant", args.invariant),
        ("period", result.period),
        ("degree", result.degree),
        ("n_min", result.n_min),
        ("leading coefficient", lead),
    ]
    for j, row in enumerate(result.coeffs):
        rows_out.append((f"coeff n^{j}", list(row)))
    _emit(payload, rows_out, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Factorization invariants of numerical semigroups and parametrized families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="Frobenius, genus, type, Wilf numbers, Apery set")
    p_inv.add_argument("generators", nargs="+", type=int)
    p_inv.add_argument("--apery", type=int, metavar="M",
                       help="base element for the Apery set (default: smallest generator)")
    _add_format_flags(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_mp = sub.add_parser("minpres", help="canonical minimal presentation with degrees")
    p_mp.add_argument("generators", nargs="+", type=int)
    _add_format_flags(p_mp)
    p_mp.set_defaults(func=cmd_minpres)

    p_d = sub.add_parser("delta", help="(weighted) delta set: min, max, union over Betti elements")
    p_d.add_argument("generators", nargs="+", type=int)
    p_d.add_argument("--weights", nargs="+", metavar="W",
                     help="rational weights, e.g. 3 1/2 -1 (default: all 1)")
    p_d.add_argument("--max-element", type=int, metavar="N",
                     help="also brute-force the delta sets of all elements <= N")
    _add_format_flags(p_d)
    p_d.set_defaults(func=cmd_delta)

    p_f = sub.add_parser("family", help="parametrized family operations")
    p_f.add_argument("--spec", required=True, metavar="FILE",
                     help='JSON family spec: {"w": [...], "r": [...]} or {"polys": [[c0,c1,...], ...]},'
                          ' optional {"range": [a, b]}; "-" reads stdin')
    fsub = p_f.add_subparsers(dest="subcommand", required=True)

    p_scan = fsub.add_parser(
        "scan",
        help="exact invariant table over a parameter range",
        description="Exact invariant values per parameter. CSV columns: n,value "
        "(multiset values are ';'-joined).",
    )
    p_scan.add_argument("--invariant", required=True, choices=SCAN_INVARIANTS)
    p_scan.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    p_scan.add_argument("--step", type=int, default=1)
    _add_format_flags(p_scan)
    p_scan.set_defaults(func=cmd_family_scan)

    p_phi = fsub.add_parser("verify-phi", help="transport the minimal presentation to n+p and check it")
    p_phi.add_argument("--n", type=int, required=True)
    _add_format_flags(p_phi)
    p_phi.set_defaults(func=cmd_family_verify_phi)

    p_bb = fsub.add_parser("verify-betti-bijection", help="map Betti elements to n+p and compare")
    p_bb.add_argument("--n", type=int, required=True)
    _add_format_flags(p_bb)
    p_bb.set_defaults(func=cmd_family_verify_betti)

    p_va = fsub.add_parser("verify-apery", help="closed-form Apery set vs direct computation")
    p_va.add_argument("--n", type=int)
    p_va.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    p_va.add_argument("--step", type=int, default=1)
    _add_format_flags(p_va)
    p_va.set_defaults(func=cmd_family_verify_apery)

    p_vp = fsub.add_parser("verify-pf", help="pseudo-Frobenius transport to n+r_k")
    p_vp.add_argument("--n", type=int, required=True)
    _add_format_flags(p_vp)
    p_vp.set_defaults(func=cmd_family_verify_pf)

    p_fit = fsub.add_parser(
        "fit",
        help="scan an invariant and fit an exact quasipolynomial",
        description="Fit an exact quasipolynomial, either scanning the family "
        "directly (--invariant + --range) or consuming a previous scan's "
        "output (--from FILE, or --from - for a pipe; accepts the JSON "
        "payload or CSV n,value rows).",
    )
    p_fit.add_argument("--invariant", required=True, choices=SCAN_INVARIANTS)
    p_fit.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    p_fit.add_argument("--step", type=int, default=1)
    p_fit.add_argument("--degree", type=int, required=True)
    p_fit.add_argument("--period", type=int, required=True)
    p_fit.add_argument("--from", dest="from_scan", metavar="FILE",
                       help="read scan output instead of scanning (- for stdin)")
    _add_format_flags(p_fit)
    p_fit.set_defaults(func=cmd_family_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
