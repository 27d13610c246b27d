"""Command-line front end.

Every subcommand wraps a library operation pair and emits one JSON document
(or CSV for the tabular listings).  Exit codes: 0 success with all checks
equal, 1 a verification mismatch, 2 a usage error.  Output ordering is fixed
(lexicographic exponent vectors, ascending q powers) so identical calls are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import characters, schur, shapes, spectra, twisted
from .polyring import QSeries, qpoly_to_json
from .polyring import laurent_to_json as _laurent_json
from .polyring import qseries_to_json as _qseries_json
from .shapes import BorderStrip, Partition, SkewDiagram


class UsageError(ValueError):
    pass


def laurent_to_json(poly, pretty=False):
    doc = _laurent_json(poly)
    if pretty:
        doc["pretty"] = str(poly)
    return doc


def qseries_to_json(series, pretty=False):
    doc = _qseries_json(series)
    if pretty:
        doc["pretty"] = str(series)
    return doc


def report(identity, parameters, lhs, rhs, started):
    """Comparison record for a pair of like-shaped values."""
    if isinstance(lhs, QSeries):
        equal, mismatch = lhs.compare(rhs)
        window = [str(lhs.offset), lhs.order]
        first = (
            None
            if mismatch is None
            else {
                "exponent": str(mismatch[0]),
                "lhs": laurent_to_json(mismatch[1]),
                "rhs": laurent_to_json(mismatch[2]),
            }
        )
    else:
        equal = lhs == rhs
        window = None
        first = None if equal else {
            "lhs": laurent_to_json(lhs),
            "rhs": laurent_to_json(rhs),
        }
    doc = {
        "identity": identity,
        "parameters": parameters,
        "window": window,
        "equal": equal,
        "wall_time_ms": int((time.time() - started) * 1000),
    }
    if first is not None:
        doc["first_mismatch"] = first
    return doc


def parse_blocks(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad block list {text!r}") from exc


def cmd_schur(args):
    try:
        shape = SkewDiagram.from_str(args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    method = args.method
    if method == "enum":
        poly = schur.schur_enumerative(shape, args.n, args.relation)
    elif method == "jt":
        poly = schur.schur_jacobi_trudi(shape, args.n, args.relation)
    elif method == "strip":
        poly = schur.schur_border_strip_det(
            shapes.strip_from_skew(shape), args.n, args.relation
        )
    else:
        raise UsageError(f"unknown method {method!r}")
    doc = {"shape": str(shape), "n": args.n, "method": method}
    doc["polynomial"] = laurent_to_json(poly, args.pretty)
    return 0, doc


def cmd_spectrum(args):
    rows = []
    for blocks in sorted(spectra.enumerate_Sp_N(args.N, args.n)):
        point_sector = sum(blocks) % args.n
        if args.sector is not None and point_sector != args.sector:
            continue
        bs = BorderStrip(blocks)
        fiber_size = schur.schur_strip_cached(blocks, args.n).at_x_ones().at(1)
        rows.append(
            {
                "blocks": list(blocks),
                "sector": point_sector,
                "t": shapes.t_statistic(bs),
                "excitation": spectra.excitation_energy(blocks, args.n),
                "kappa": str(bs),
                "shape": str(bs.realize()),
                "fiber_size": fiber_size,
            }
        )
    if args.csv:
        lines = ["blocks;sector;t;excitation;kappa;shape;fiber_size"]
        for r in rows:
            lines.append(
                "{};{};{};{};{};{};{}".format(
                    ",".join(map(str, r["blocks"])),
                    r["sector"],
                    r["t"],
                    r["excitation"],
                    r["kappa"],
                    r["shape"],
                    r["fiber_size"],
                )
            )
        return 0, "\n".join(lines)
    return 0, {"n": args.n, "N": args.N, "points": rows}


def cmd_fiber(args):
    blocks = parse_blocks(args.h)
    try:
        point = spectra.SpectrumPoint(blocks, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    configs = [list(s.prefix) for s in spectra.enumerate_fiber(point)]
    character = spectra.fiber_character(point, relation=args.relation)
    return 0, {
        "n": args.n,
        "h": list(blocks),
        "size": len(configs),
        "configurations": configs,
        "character": laurent_to_json(character, args.pretty),
    }


def cmd_decompose(args):
    started = time.time()
    series = characters.level1_decomposition(args.n, args.k, args.order, args.variant)
    doc = {
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "series": qseries_to_json(series, args.pretty),
        "wall_time_ms": int((time.time() - started) * 1000),
    }
    return 0, doc


def cmd_kostka(args):
    try:
        lam = Partition.from_str(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n = args.n if args.n is not None else max(lam.length(), 1)
    started = time.time()
    result = characters.kostka_foulkes(lam, n)
    oracle = characters.kostka_oracle(lam, n)
    doc = {
        "lambda": str(lam),
        "n": n,
        "polynomial": qpoly_to_json(result.polynomial),
        "strips": [
            {"kappa": str(bs), "t": t, "count": c} for bs, t, c in result.strips
        ],
        "strip_count": len(result.strips),
        "oracle": qpoly_to_json(oracle),
        "equal": result.polynomial == oracle,
        "wall_time_ms": int((time.time() - started) * 1000),
    }
    return (0 if doc["equal"] else 1), doc


def cmd_verify(args):
    checks = []
    if args.what == "rogers":
        started = time.time()
        lhs = characters.F_N(args.N, args.n)
        rhs = characters.rogers_szego(args.N, args.n)
        checks.append(report("strip_sum_equals_multinomial", {"n": args.n, "N": args.N}, lhs, rhs, started))
        started = time.time()
        rec = characters.rogers_szego_recursive(args.N, args.n)
        checks.append(report("multinomial_recursion", {"n": args.n, "N": args.N}, rec, rhs, started))
    elif args.what == "djkmo":
        for variant in ("a", "b"):
            started = time.time()
            lhs = characters.level1_decomposition(args.n, args.k, args.order, variant)
            rhs = characters.level1_theta(args.n, args.k, args.order)
            checks.append(
                report(
                    f"strip_decomposition_{variant}_equals_theta",
                    {"n": args.n, "k": args.k, "order": args.order},
                    lhs,
                    rhs,
                    started,
                )
            )
    elif args.what == "polychronakos":
        started = time.time()
        lhs = characters.polychronakos_partition(args.N, args.n)
        rhs = characters.polychronakos_strip_form(args.N, args.n)
        checks.append(report("reversed_multinomial_equals_strip_sum", {"n": args.n, "N": args.N}, lhs, rhs, started))
        started = time.time()
        direct = spectra.Z_vertex_direct(args.N, args.n)
        checks.append(report("strip_sum_equals_configuration_sum", {"n": args.n, "N": args.N},
                             spectra.Z_vertex(args.N, args.n), direct, started))
    elif args.what == "all":
        return verify_all(args)
    else:
        raise UsageError(f"unknown verification {args.what!r}")
    ok = all(c["equal"] for c in checks)
    return (0 if ok else 1), {"checks": checks, "equal": ok}


def verify_all(args):
    """Reduced verification matrix, sized to finish quickly."""
    checks = []
    order = 4 if args.quick else 6
    nmax = 3 if args.quick else 4
    for n in range(2, nmax + 1):
        for k in range(n):
            started = time.time()
            lhs = characters.level1_decomposition(n, k, order, "a")
            rhs = characters.level1_theta(n, k, order)
            checks.append(report("strip_decomposition_a_equals_theta", {"n": n, "k": k, "order": order}, lhs, rhs, started))
    for n in (2, 3):
        N = 4 if args.quick else 6
        started = time.time()
        checks.append(report("strip_sum_equals_multinomial", {"n": n, "N": N},
                             characters.F_N(N, n), characters.rogers_szego(N, n), started))
        started = time.time()
        checks.append(report("reversed_multinomial_equals_strip_sum", {"n": n, "N": N},
                             characters.polychronakos_partition(N, n),
                             characters.polychronakos_strip_form(N, n), started))
    started = time.time()
    kres = characters.kostka_foulkes(Partition((3, 2, 1)))
    checks.append(report("kostka_strip_sum_equals_extraction", {"lambda": "3,2,1"},
                         kres.polynomial, characters.kostka_oracle(Partition((3, 2, 1))), started))
    for n in (1, 2):
        torder = 3 if args.quick else 5
        started = time.time()
        checks.append(report("pinned_strip_decomposition_equals_theta", {"n": n, "order": torder},
                             twisted.twisted_decomposition(n, torder),
                             twisted.twisted_level1_theta(n, torder), started))
    ok = all(c["equal"] for c in checks)
    return (0 if ok else 1), {"checks": checks, "equal": ok}


def cmd_twisted(args):
    if args.twhat == "verify":
        started = time.time()
        lhs = twisted.twisted_decomposition(args.n, args.order)
        rhs = twisted.twisted_level1_theta(args.n, args.order)
        doc = report(
            "pinned_strip_decomposition_equals_theta",
            {"n": args.n, "order": args.order},
            lhs,
            rhs,
            started,
        )
        return (0 if doc["equal"] else 1), doc
    if args.twhat == "schur":
        blocks = parse_blocks(args.h)
        if args.method == "enum":
            poly = twisted.chi_twisted(blocks, args.n)
        elif args.method == "det":
            poly = twisted.sL_determinant(blocks, args.n)
        elif args.method == "fiber":
            poly = twisted.chi_twisted(blocks, args.n, method="fiber")
        else:
            raise UsageError(f"unknown method {args.method!r}")
        return 0, {
            "n": args.n,
            "h": list(blocks),
            "method": args.method,
            "polynomial": laurent_to_json(poly, args.pretty),
        }
    raise UsageError(f"unknown twisted subcommand {args.twhat!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ribbonchar",
        description="Exact border-strip character computations and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="skew Schur function by a chosen method")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relation", action="store_true")
    p.add_argument("--method", default="enum", choices=["enum", "jt", "strip"])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("spectrum", help="list spectrum points of a truncation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--sector", type=int, default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("fiber", help="configurations over a spectrum point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--relation", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("decompose", help="strip decomposition series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--variant", default="a", choices=["a", "b"])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("kostka", help="strip formula and extraction oracle")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("verify", help="identity verification reports")
    p.add_argument("what", choices=["rogers", "djkmo", "polychronakos", "all"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("twisted", help="signed-alphabet model commands")
    p.add_argument("twhat", choices=["verify", "schur"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--h", default="")
    p.add_argument("--method", default="enum", choices=["enum", "det", "fiber"])
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_twisted)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        code, doc = args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    if isinstance(doc, str):
        print(doc)
    else:
        print(json.dumps(doc, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
