"""Command line front end.

One subcommand per computational surface. Reports are JSON on stdout
with sorted keys and a schema tag, except the table-shaped commands
(genera, ym2) which emit CSV. Exit codes: 0 success, 2 refused
precondition, 3 failed certification or integrality, 64 usage error.

The algebra can be named either combined (--algebra A2) or split
(--series A --rank 2). A JSON config file can preload any subcommand
option by its dest name (--config path, accepted before or after the
subcommand); explicit flags win over the file. --output writes the
report to a file instead of stdout. SEIFERTSUM_THREADS sets the
default worker count for grid scans.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .crosscheck import run_crosschecks
from .errors import CertificationError, PreconditionError
from .genera import evaluate as evaluate_genus
from .lie import CartanElement, Weight, build_root_system, casimir, weyl_dimension, weyl_group
from .modular import central_charge, s_matrix
from .orbits import (
    dh_weyl_sum,
    kirillov_check,
    orbit_from_highest_weight,
    orbit_fourier,
)
from .quasipoly import pairing_report
from .seifert import (
    DEFAULT_SCAN_BUDGET,
    FRAMING_CONVENTIONS,
    SeifertSpec,
    seifert_partition,
    seifert_scan,
)
from .verlinde import verlinde_table
from .ym2 import DEFAULT_MAX_TERMS, DEFAULT_TOL, ym2_epsilon_profile


class _Parser(argparse.ArgumentParser):
    # usage problems exit 64 so scripts can tell them from refusals
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(64, "%s: error: %s\n" % (self.prog, message))


_ALGEBRA_RE = re.compile(r"^([A-Za-z])(\d*)$")


def _algebra_type(text: str) -> tuple[str, int | None]:
    m = _ALGEBRA_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(
            "algebra must look like A2 or A, got %r" % (text,))
    series = m.group(1).upper()
    rank = int(m.group(2)) if m.group(2) else None
    return series, rank


def _weight_type(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "weight must be comma separated integers, got %r" % (text,))


def _weights_type(text: str) -> tuple[tuple[int, ...], ...]:
    if not text:
        return ()
    return tuple(_weight_type(part) for part in text.split(";"))


def _floats_type(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated numbers, got %r" % (text,))


def _points_type(text: str) -> tuple[tuple[float, ...], ...]:
    if not text:
        return ()
    return tuple(_floats_type(part) for part in text.split(";"))


def _ints_type(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated integers, got %r" % (text,))


def _default_threads() -> int:
    raw = os.environ.get("SEIFERTSUM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _fraction_str(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


def _write_report(text: str, args) -> None:
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, args) -> None:
    payload = dict(payload)
    payload["schema"] = 1
    _write_report(json.dumps(payload, sort_keys=True, indent=2) + "\n", args)


def _root_system(args):
    series, rank = ("A", None)
    algebra = getattr(args, "algebra", None)
    if algebra is not None:
        if isinstance(algebra, str):  # config files carry the raw spelling
            algebra = _algebra_type(algebra)
        series, rank = algebra
    if getattr(args, "series", None) is not None:
        series = args.series
    if getattr(args, "rank", None) is not None:
        rank = args.rank
    if rank is None:
        raise PreconditionError(
            "rank not specified; use --algebra A2 or --rank 2")
    return build_root_system(series, rank)


def _as_weight(coords) -> Weight:
    return Weight(tuple(int(c) for c in coords))


def _labels_from(args) -> tuple[Weight, ...]:
    merged = list(getattr(args, "labels", ()) or ())
    for single in getattr(args, "label", ()) or ():
        merged.append(single)
    return tuple(_as_weight(c) for c in merged)


def _cmd_lie(args) -> int:
    rs = _root_system(args)
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "algebra_dimension": rs.dimension,
        "positive_roots": rs.num_positive_roots,
        "dual_coxeter": rs.dual_coxeter,
        "centre_order": rs.centre_order,
        "weyl_order": len(weyl_group(rs)),
        "cartan_matrix": [list(row) for row in rs.cartan],
    }
    if args.weight is not None:
        w = _as_weight(args.weight)
        if len(w.coords) != rs.rank:
            raise PreconditionError("weight has %d coordinates, rank is %d"
                                    % (len(w.coords), rs.rank))
        out["weight"] = list(w.coords)
        out["dominant"] = w.is_dominant
        if w.is_dominant:
            out["irrep_dimension"] = weyl_dimension(rs, w)
            out["casimir"] = _fraction_str(casimir(rs, w))
            out["level"] = rs.level_of(w)
    _emit_json(out, args)
    return 0


def _cmd_modular(args) -> int:
    rs = _root_system(args)
    # certify fresh at the requested tolerance rather than reusing the
    # process cache, which only knows the default
    md = s_matrix(rs, args.level, tol=args.tol)
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "level": args.level,
        "kappa": md.kappa,
        "weights": [list(w.coords) for w in md.weights],
        "central_charge": central_charge(rs, args.level),
        "precision_bits": md.precision_bits,
        "s": [[_complex_pair(complex(v)) for v in row] for row in md.s],
        "t_canonical": [_complex_pair(complex(v)) for v in md.t_canonical],
        "t_bare": [_complex_pair(complex(v)) for v in md.t_bare],
        "conjugation": list(md.conjugation),
        "certificate": {k: (v if isinstance(v, bool) else float(v))
                        for k, v in sorted(md.certificate.items())},
    }
    _emit_json(out, args)
    return 0


def _cmd_verlinde(args) -> int:
    rs = _root_system(args)
    labels = _labels_from(args)
    table = verlinde_table(rs, args.genus, args.levels, labels=labels)
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "genus": args.genus,
        "labels": [list(lab.coords) for lab in labels],
        "table": [{"k": k, "dimension": d} for k, d in table.rows],
        "monotone_nondecreasing": table.monotone_nondecreasing,
    }
    _emit_json(out, args)
    return 0


def _cmd_seifert(args) -> int:
    rs = _root_system(args)
    labels = _labels_from(args)
    conventions = {"framing": args.framing,
                   "centre_factor": bool(args.centre_factor)}
    if args.scan:
        cells = seifert_scan(rs, args.genera, args.degrees, args.levels,
                             labels=labels, framing=args.framing,
                             include_centre_factor=args.centre_factor,
                             budget=args.budget, threads=args.threads)
        out = {
            "series": rs.series,
            "rank": rs.rank,
            "conventions": conventions,
            "labels": [list(lab.coords) for lab in labels],
            "cells": [
                {"genus": c.genus, "degree": c.degree, "level": c.level,
                 "value_re": float(c.value.real),
                 "value_im": float(c.value.imag),
                 "modulus": c.modulus, "terms": c.term_count}
                for c in cells
            ],
        }
        _emit_json(out, args)
        return 0
    if args.level is None or args.genus is None or args.degree is None:
        sys.stderr.write(
            "seifert: error: --level, --genus and --degree are required "
            "unless --scan is given\n")
        return 64
    spec = SeifertSpec(rs=rs, level=args.level, genus=args.genus,
                       degree=args.degree, labels=labels,
                       framing=args.framing,
                       include_centre_factor=args.centre_factor)
    val = seifert_partition(spec)
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "level": args.level,
        "genus": args.genus,
        "degree": args.degree,
        "labels": [list(lab.coords) for lab in labels],
        "conventions": conventions,
        "value_re": float(val.value.real),
        "value_im": float(val.value.imag),
        "modulus": val.modulus,
        "terms": val.term_count,
    }
    _emit_json(out, args)
    return 0


def _cmd_kirillov(args) -> int:
    rs = _root_system(args)
    w = _as_weight(args.weight)
    points = list(args.points or ())
    if args.point is not None:
        points.append(args.point)
    if not points:
        sys.stderr.write("kirillov: error: give --point or --points\n")
        return 64
    orbit = orbit_from_highest_weight(rs, w)
    rows = []
    worst = 0.0
    for point in points:
        if len(point) != rs.rank:
            raise PreconditionError("point has %d coordinates, rank is %d"
                                    % (len(point), rs.rank))
        x = CartanElement(tuple(complex(c) for c in point))
        of = orbit_fourier(orbit, x)
        dh = dh_weyl_sum(orbit, x)
        residual = kirillov_check(rs, w, x)
        worst = max(worst, residual)
        rows.append({
            "point": [float(c) for c in point],
            "orbit_fourier": _complex_pair(of),
            "stationary_phase_sum": _complex_pair(dh),
            "residual": residual,
        })
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "weight": list(w.coords),
        "orbit_dimension": orbit.dimension,
        "table": rows,
        "max_residual": worst,
    }
    _emit_json(out, args)
    return 0


def _cmd_genera(args) -> int:
    rs = _root_system(args)
    buf = io.StringIO()
    writer = csv.writer(buf)
    coords_header = ["x%d" % (i + 1) for i in range(rs.rank)]
    writer.writerow(coords_header + ["re", "im"])
    for point in args.points:
        if len(point) != rs.rank:
            raise PreconditionError("point has %d coordinates, rank is %d"
                                    % (len(point), rs.rank))
        x = CartanElement(tuple(complex(c) for c in point))
        gv = evaluate_genus(rs, args.which, x, args.genus, args.c1)
        writer.writerow([repr(float(c)) for c in point]
                        + [repr(gv.value.real), repr(gv.value.imag)])
    _write_report(buf.getvalue(), args)
    return 0


def _cmd_ym2(args) -> int:
    rs = _root_system(args)
    prof = ym2_epsilon_profile(rs, args.genus, args.epsilons,
                               target_tol=args.tol, max_terms=args.max_terms)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["epsilon", "Z", "tail_bound"])
    for eps, value, bound in prof.rows:
        writer.writerow([repr(eps), repr(value), repr(bound)])
    _write_report(buf.getvalue(), args)
    return 0


def _cmd_pairings(args) -> int:
    rs = _root_system(args)
    labels = _labels_from(args)
    rep = pairing_report(rs, args.genus, args.kmin, args.kmax,
                         labels=tuple(lab.coords for lab in labels),
                         max_period=args.max_period,
                         horizon=args.horizon,
                         check_predictions=not args.no_check)
    out = {
        "series": rs.series,
        "rank": rs.rank,
        "genus": rep.genus,
        "labels": [list(lab) for lab in rep.labels],
        "levels": list(rep.levels),
        "values": list(rep.values),
        "period": rep.qp.period,
        "degree": rep.degree,
        "expected_degree": rep.expected_degree,
        "degree_matches": rep.degree_matches,
        "coefficients": [[_fraction_str(c) for c in cls]
                         for cls in rep.qp.coeffs],
        "leading_by_class": [_fraction_str(q) for q in rep.leading_by_class],
        "leading_pairing": _fraction_str(rep.leading_by_class[0]),
        "predictions": [list(p) for p in rep.predictions],
        "prediction_errors": list(rep.prediction_errors),
    }
    _emit_json(out, args)
    return 0


def _cmd_crosscheck(args) -> int:
    report = run_crosschecks(mode=args.suite, seed=args.seed)
    for check in report.checks:
        sys.stderr.write("%-32s %s  residual=%g\n"
                         % (check.name, "PASS" if check.passed else "FAIL",
                            check.residual))
    _emit_json(report.to_json_dict(), args)
    return 0 if report.passed else 3


def _add_common_options(sub, algebra: bool = True):
    if algebra:
        sub.add_argument("--algebra", type=_algebra_type, default=None,
                         help="combined name like A2")
        sub.add_argument("--series", default=None, help="root system series")
        sub.add_argument("--rank", type=int, default=None)
    sub.add_argument("--output", default=None,
                     help="write the report to this file instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="seifertsum",
                     description="exact and certified sums for fibred "
                                 "three-manifold invariants")
    parser.add_argument("--config", default=None,
                        help="JSON file preloading option defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lie", help="root system and representation facts")
    _add_common_options(p)
    p.add_argument("--weight", type=_weight_type, default=None)
    p.set_defaults(func=_cmd_lie)

    p = sub.add_parser("modular", help="certified modular matrices")
    _add_common_options(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_modular)

    p = sub.add_parser("verlinde", help="fusion dimension tables")
    _add_common_options(p)
    p.add_argument("--level", "--levels", dest="levels", type=_ints_type,
                   required=True, help="level or comma separated levels")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--labels", type=_weights_type, default=())
    p.add_argument("--label", type=_weight_type, action="append", default=[])
    p.set_defaults(func=_cmd_verlinde)

    p = sub.add_parser("seifert", help="fibred partition sums")
    _add_common_options(p)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--labels", type=_weights_type, default=())
    p.add_argument("--label", type=_weight_type, action="append", default=[])
    p.add_argument("--framing", choices=FRAMING_CONVENTIONS, default="bare")
    p.add_argument("--centre-factor", action="store_true")
    p.add_argument("--scan", action="store_true",
                   help="evaluate a grid instead of a single point")
    p.add_argument("--genera", type=_ints_type, default=())
    p.add_argument("--degrees", type=_ints_type, default=())
    p.add_argument("--levels", type=_ints_type, default=())
    p.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=_cmd_seifert)

    p = sub.add_parser("kirillov", help="orbit transforms at sample points")
    _add_common_options(p)
    p.add_argument("--weight", type=_weight_type, required=True)
    p.add_argument("--point", type=_floats_type, default=None)
    p.add_argument("--points", type=_points_type, default=())
    p.set_defaults(func=_cmd_kirillov)

    p = sub.add_parser("genera", help="genus functions on sample points, CSV")
    _add_common_options(p)
    p.add_argument("--which", choices=("j", "ahat", "todd"), required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--c1", type=float, default=0.0,
                   help="degree pairing in the exponential factor")
    p.add_argument("--points", type=_points_type, required=True)
    p.set_defaults(func=_cmd_genera)

    p = sub.add_parser("ym2", help="heat kernel sums over couplings, CSV")
    _add_common_options(p)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--epsilons", type=_floats_type, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    p.set_defaults(func=_cmd_ym2)

    p = sub.add_parser("pairings", help="quasi-polynomial level structure")
    _add_common_options(p)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--labels", type=_weights_type, default=())
    p.add_argument("--label", type=_weight_type, action="append", default=[])
    p.add_argument("--max-period", type=int, default=4)
    p.add_argument("--horizon", type=int, default=5)
    p.add_argument("--no-check", action="store_true",
                   help="skip re-deriving the predicted levels")
    p.set_defaults(func=_cmd_pairings)

    p = sub.add_parser("crosscheck", help="consistency suites")
    _add_common_options(p, algebra=False)
    p.add_argument("--suite", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_crosscheck)

    return parser


def _apply_config(parser: _Parser, config: dict) -> None:
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            for arg in sp._actions:
                if arg.dest in config:
                    arg.required = False
            dests = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in config.items() if k in dests})


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    # the pre-parse consumes --config wherever it sits, so the flag works
    # before or after the subcommand
    known, argv = pre.parse_known_args(argv)
    config = {}
    if known.config is not None:
        try:
            config = json.loads(Path(known.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            sys.stderr.write("error: cannot read config %s: %s\n"
                             % (known.config, exc))
            return 2
        if not isinstance(config, dict):
            sys.stderr.write("error: config must be a JSON object\n")
            return 2
    parser = build_parser()
    if config:
        _apply_config(parser, config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 64
    try:
        return args.func(args)
    except PreconditionError as exc:
        sys.stderr.write("refused: %s\n" % (exc,))
        return 2
    except CertificationError as exc:
        sys.stderr.write("certification failed: %s\n" % (exc,))
        return 3


if __name__ == "__main__":
    sys.exit(main())
