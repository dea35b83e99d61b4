"""Command line front end.

Subcommands: `braid info|genus|normal-form`, `alex ribbon|seifert`,
`family table`, `lspace cable|satellite|triad|cover`, `verify`.
Exit codes: 0 success, 1 verification failure, 2 input error.  Output is
deterministic: identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import alexander, braidcore, lspace, twistfam, verification
from .errors import TwistCalcError
from .laurent import format_poly

SCHEMA_VERSION = 1


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _fraction_str(value) -> str:
    return str(value)


# -- braid ----------------------------------------------------------------------


def cmd_braid_info(args) -> int:
    word = braidcore.BraidWord.parse(args.word)
    info = braidcore.closure_info(word)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "word": word.format(),
        "strands": word.strands,
        "letters": list(word.letters),
        "exponent_sum": info.exponent_sum,
        "closure_components": info.components,
        "closure_is_knot": info.is_knot,
        "permutation": list(info.permutation),
        "positive": word.is_positive(),
    }
    _print_json(payload)
    return 0


def cmd_braid_genus(args) -> int:
    word = braidcore.BraidWord.parse(args.word)
    data = braidcore.seifert_from_closure(word)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "word": word.format(),
        "euler_characteristic": data.euler_characteristic,
        "seifert_circles": data.seifert_circles,
        "closure_components": data.components,
        "genus": data.genus,
        "minimal": data.minimal,
        "seifert_matrix": [list(row) for row in data.matrix],
    }
    _print_json(payload)
    return 0


def cmd_braid_normal_form(args) -> int:
    word = braidcore.BraidWord.parse(args.word)
    nf = braidcore.normal_form(word)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "word": word.format(),
        "infimum": nf.infimum,
        "canonical_length": nf.canonical_length,
        "factors": [list(f) for f in nf.factors],
    }
    if args.equals is not None:
        other = braidcore.BraidWord.parse(args.equals)
        payload["equals"] = braidcore.normal_form_equal(word, other)
    _print_json(payload)
    return 0


# -- alexander --------------------------------------------------------------------


def cmd_alex_ribbon(args) -> int:
    result = alexander.ribbon_family_alexander(args.m, args.n)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "m": args.m,
        "n": args.n,
        "alexander": format_poly(result.poly, ("x",)),
        "span": result.span,
        "genus_lower_bound": result.genus_lower_bound,
    }
    _print_json(payload)
    return 0


def cmd_alex_seifert(args) -> int:
    if args.braid:
        word = braidcore.BraidWord.parse(args.braid)
        matrix = braidcore.seifert_from_closure(word).matrix
    else:
        matrix = tuple(tuple(int(x) for x in row) for row in json.loads(args.matrix))
    poly = alexander.alexander_from_seifert(matrix)
    sigma, g4_lower = alexander.signature_bound(matrix)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "alexander": format_poly(poly, ("t",)),
        "signature": sigma,
        "g4_lower_bound": g4_lower,
        "determinant_check": abs(poly.evaluate_ones()),
    }
    _print_json(payload)
    return 0


# -- family table -------------------------------------------------------------------


def _family_rows(spec_data, n_from, n_to, base_slope):
    presentation = None
    g0 = spec_data.get("g0")
    if "braid" in spec_data:
        presentation = braidcore.BraidWord.parse(spec_data["braid"])
        if g0 is None and presentation.is_positive():
            data = braidcore.seifert_from_closure(presentation)
            if data.genus is not None:
                g0 = data.genus  # positive braid closures realize their genus
    spec = twistfam.TwistFamilySpec(
        omega=spec_data["omega"],
        eta=spec_data["eta"],
        norm_disk=spec_data.get("x_disk"),
        g0=g0,
        g4_0=spec_data.get("g4_0"),
        s0=spec_data.get("s0"),
        presentation=presentation,
    )
    try:
        ratio = twistfam.limit_ratio(spec)
        ratio_marker = "inf" if ratio is twistfam.INFINITY else (
            "indeterminate" if ratio is twistfam.INDETERMINATE else _fraction_str(ratio)
        )
    except TwistCalcError:
        ratio_marker = "not-covered"
    rows = []
    for n in range(n_from, n_to + 1):
        row = {"n": n}
        row["r_n"] = (
            _fraction_str(twistfam.slope_transport(Fraction(base_slope), n, spec.omega))
            if base_slope is not None
            else ""
        )
        if spec.g0 is not None:
            if spec.omega == 0:
                row["g"] = spec.g0  # eventual constant for winding number zero
            else:
                row["g"] = _fraction_str(twistfam.genus_law(spec, spec.g0, n))
        else:
            row["g"] = ""
        if spec.g4_0 is not None and n >= 0:
            s0 = spec.s0 if spec.s0 is not None else -2 * spec.eta
            upper, lower = twistfam.slice_bounds(spec, n, 0, spec.g4_0, s0)
            row["g4_upper"] = _fraction_str(upper)
            row["g4_lower"] = _fraction_str(lower) if spec.s0 is not None else "0"
            if spec.g0 is not None and spec.omega > 0 and upper > 0:
                row["ratio"] = _fraction_str(
                    Fraction(twistfam.genus_law(spec, spec.g0, n)) / upper
                )
            else:
                row["ratio"] = ratio_marker if spec.omega == 0 else ""
        else:
            row["g4_upper"] = ""
            row["g4_lower"] = ""
            row["ratio"] = ratio_marker if spec.omega == 0 else ""
        row["verdicts"] = "coherent" if spec.coherent else (
            "ratio-not-covered" if spec.omega == 0 else ""
        )
        rows.append(row)
    return rows, ratio_marker


FAMILY_COLUMNS = ["n", "r_n", "g", "g4_lower", "g4_upper", "ratio", "verdicts"]


def cmd_family_table(args) -> int:
    spec_data = json.loads(args.spec)
    rows, ratio_marker = _family_rows(spec_data, args.n_from, args.n_to, args.slope)
    if args.json:
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "limit_ratio": ratio_marker,
                "columns": FAMILY_COLUMNS,
                "rows": rows,
            }
        )
        return 0
    out = io.StringIO()
    out.write(f"# schema_version={SCHEMA_VERSION} limit_ratio={ratio_marker}\n")
    writer = csv.DictWriter(out, fieldnames=FAMILY_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(out.getvalue())
    return 0


# -- lspace ---------------------------------------------------------------------------


def cmd_lspace_cable(args) -> int:
    accepted = lspace.cable_lspace_criterion(
        args.omega, args.q, args.genus, args.companion_lspace
    )
    _print_json(
        {
            "schema_version": SCHEMA_VERSION,
            "omega": args.omega,
            "q": args.q,
            "companion_genus": args.genus,
            "companion_is_positive_lspace": args.companion_lspace,
            "positive_lspace_cable": accepted,
            "strict_threshold": args.omega * (2 * args.genus - 1),
        }
    )
    return 0


def cmd_lspace_satellite(args) -> int:
    report = lspace.satellite_check(
        lspace.SatelliteSpec(args.omega, args.gp, args.gk)
    )
    _print_json(
        {
            "schema_version": SCHEMA_VERSION,
            "omega": args.omega,
            "pattern_genus": args.gp,
            "companion_genus": args.gk,
            "ineq1": report.ineq1,
            "verdict": report.verdict,
            "satellite_genus": report.g_PK,
            "rational_longitude": str(report.rational_longitude),
            "cover_check": report.cover_check,
            "note": report.note,
            "citations": list(report.citations),
        }
    )
    return 0


def cmd_lspace_triad(args) -> int:
    slope = lspace.Slope.parse(args.slope)
    certified = lspace.triad_propagate(
        args.omega, slope, set(args.start), args.limit_lspace, up_to=args.up_to
    )
    _print_json(
        {
            "schema_version": SCHEMA_VERSION,
            "omega": args.omega,
            "slope": str(slope),
            "limit_is_lspace": args.limit_lspace,
            "horizon": args.up_to,
            "certified_twists": sorted(certified),
        }
    )
    return 0


def cmd_lspace_cover(args) -> int:
    image = lspace.slope_set_from_json(json.loads(args.image))
    other = lspace.slope_set_from_json(json.loads(args.other))
    _print_json(
        {
            "schema_version": SCHEMA_VERSION,
            "image": image.to_json(),
            "other": other.to_json(),
            "covers": lspace.glue_cover_check(image, other),
            "note": lspace.CONDITIONAL_NOTE,
        }
    )
    return 0


# -- verify -----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    results, all_ok = verification.run_suite(args.filter)
    if not results:
        print(f"no checks match filter {args.filter!r}")
        return 2
    first_failure = None
    for check, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        print(f"{status} [{check.tag}] {check.name}: {detail}")
        if not ok and first_failure is None:
            first_failure = check.name
    if all_ok:
        print(f"all {len(results)} checks passed")
        return 0
    print(f"FAILED: first failing check is {first_failure}")
    return 1


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcalc",
        description="Exact twist-family, braid, Alexander, and L-space calculators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    braid = sub.add_parser("braid", help="braid word utilities")
    braid_sub = braid.add_subparsers(dest="subcommand", required=True)
    info = braid_sub.add_parser("info", help="closure data of a braid word")
    info.add_argument("word", help="braid word, e.g. 'B3: 2 1 2 -1'")
    info.set_defaults(func=cmd_braid_info)
    genus = braid_sub.add_parser("genus", help="Seifert surface data of the closure")
    genus.add_argument("word")
    genus.set_defaults(func=cmd_braid_genus)
    nf = braid_sub.add_parser("normal-form", help="left-weighted Garside normal form")
    nf.add_argument("word")
    nf.add_argument("--equals", help="second word to compare against")
    nf.set_defaults(func=cmd_braid_normal_form)

    alex = sub.add_parser("alex", help="Alexander polynomial pipelines")
    alex_sub = alex.add_subparsers(dest="subcommand", required=True)
    ribbon = alex_sub.add_parser("ribbon", help="ribbon twist-family polynomial")
    ribbon.add_argument("--m", type=int, required=True)
    ribbon.add_argument("--n", type=int, required=True)
    ribbon.set_defaults(func=cmd_alex_ribbon)
    seif = alex_sub.add_parser("seifert", help="polynomial and signature from a Seifert matrix")
    group = seif.add_mutually_exclusive_group(required=True)
    group.add_argument("--braid", help="braid word whose closure supplies the matrix")
    group.add_argument("--matrix", help="JSON 2-D integer array")
    seif.set_defaults(func=cmd_alex_seifert)

    family = sub.add_parser("family", help="twist family tables")
    family_sub = family.add_subparsers(dest="subcommand", required=True)
    table = family_sub.add_parser("table", help="per-twist invariant table")
    table.add_argument(
        "--spec",
        required=True,
        help='JSON record {"omega", "eta", "x_disk"?, "g0"?, "g4_0"?, "s0"?}',
    )
    table.add_argument("--n-from", type=int, default=0)
    table.add_argument("--n-to", type=int, default=10)
    table.add_argument("--slope", help="base slope r_0 to transport")
    table.add_argument("--json", action="store_true")
    table.set_defaults(func=cmd_family_table)

    lsp = sub.add_parser("lspace", help="L-space surgery criteria")
    lsp_sub = lsp.add_subparsers(dest="subcommand", required=True)
    cable = lsp_sub.add_parser("cable", help="cable L-space criterion")
    cable.add_argument("--omega", type=int, required=True)
    cable.add_argument("--q", type=int, required=True)
    cable.add_argument("--genus", type=int, required=True, help="companion genus")
    cable.add_argument(
        "--companion-lspace",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="companion is a positive L-space knot",
    )
    cable.set_defaults(func=cmd_lspace_cable)
    sat = lsp_sub.add_parser("satellite", help="satellite genus constraints")
    sat.add_argument("--omega", type=int, required=True)
    sat.add_argument("--gp", type=int, required=True, help="pattern knot genus")
    sat.add_argument("--gk", type=int, required=True, help="companion genus")
    sat.set_defaults(func=cmd_lspace_satellite)
    triad = lsp_sub.add_parser("triad", help="L-space propagation along twists")
    triad.add_argument("--omega", type=int, required=True)
    triad.add_argument("--slope", required=True, help="base surgery slope, e.g. 7 or 7/1")
    triad.add_argument(
        "--start", type=int, nargs="+", required=True, help="twists known to give L-spaces"
    )
    triad.add_argument(
        "--limit-lspace",
        action=argparse.BooleanOptionalAction,
        default=False,
        help="the limit filling is an L-space",
    )
    triad.add_argument("--up-to", type=int, default=20)
    triad.set_defaults(func=cmd_lspace_triad)
    cover = lsp_sub.add_parser("cover", help="gluing interval coverage check")
    cover.add_argument("--image", required=True, help="JSON slope set")
    cover.add_argument("--other", required=True, help="JSON slope set")
    cover.set_defaults(func=cmd_lspace_cover)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--filter", help="run only checks with this tag")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TwistCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
