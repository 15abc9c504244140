"""Command-line front end: figure scans as CSV, plus single-point queries.

Exit codes: 0 success, 2 usage error, 3 domain error.  CSV files carry every
effective parameter as ``# key=value`` comment lines, are formatted with 12
significant digits and LF endings, and are written atomically (temp file +
rename), so identical flags give byte-identical files and failures leave
nothing behind.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from .calibration import calibrate_xi, scan_separation
from .coherence import visibility_deformed, visibility_numeric, visibility_undeformed
from .deformation import DeformationSpec
from .errors import DomainError
from .fock import DEFAULT_FLOOR, DEFAULT_MAX_DIM, separation

D_TARGET_DEFAULT = 2.0 * math.sqrt(2.0)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value) or value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be a positive finite real, got {text}")
    return value


def _nonneg_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value) or value < 0.0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative finite real, got {text}")
    return value


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".nlcat-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(text.encode("utf-8"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header: dict, columns: list[str], rows: list[list[str]]) -> str:
    lines = [f"# {key}={value}" for key, value in header.items()]
    lines.append(",".join(columns))
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _spec_from_args(args: argparse.Namespace) -> DeformationSpec:
    if args.spec == "identity":
        return DeformationSpec.identity()
    if args.spec == "q":
        if args.q is None:
            raise DomainError("--q is required for the q deformation")
        return DeformationSpec.q_deform(args.q)
    if args.xi is None:
        raise DomainError("--xi is required for the laguerre deformation")
    return DeformationSpec.laguerre(args.xi)


def _cmd_fig1(args: argparse.Namespace) -> int:
    zeta = math.sqrt(args.zeta2)
    dim = args.dim if args.dim is not None else DEFAULT_MAX_DIM
    q_curve = scan_separation(
        "q", zeta, args.q_min, args.q_max, args.q_step, max_dim=dim, floor=args.floor
    )
    xi_curve = scan_separation(
        "laguerre", zeta, args.xi_min, args.xi_max, args.xi_step,
        max_dim=dim, floor=args.floor,
    )
    reference = 2.0 * zeta
    header = {
        "command": "fig1",
        "zeta2": _fmt(args.zeta2),
        "q_min": _fmt(args.q_min),
        "q_max": _fmt(args.q_max),
        "q_step": _fmt(args.q_step),
        "xi_min": _fmt(args.xi_min),
        "xi_max": _fmt(args.xi_max),
        "xi_step": _fmt(args.xi_step),
        "dim": dim,
        "floor": _fmt(args.floor),
        "undeformed_reference": _fmt(reference),
    }
    rows = []
    for p in xi_curve.params:
        rows.append(["undeformed", _fmt(p), _fmt(reference)])
    for p, v in zip(q_curve.params, q_curve.values):
        rows.append(["q", _fmt(p), "" if v is None else _fmt(v)])
    for p, v in zip(xi_curve.params, xi_curve.values):
        rows.append(["laguerre", _fmt(p), "" if v is None else _fmt(v)])
    _write_atomic(args.out, _csv_text(header, ["series", "param", "value"], rows))
    return 0


def _cmd_fig2(args: argparse.Namespace) -> int:
    zeta = math.sqrt(args.zeta2)
    spec = DeformationSpec.laguerre(args.xi)
    dim = args.dim if args.dim is not None else 128
    count = int(math.floor(args.gamma_t_max / args.step + 1e-9)) + 1
    grid = [i * args.step for i in range(count)]
    ns = list(args.n)
    header = {
        "command": "fig2",
        "zeta2": _fmt(args.zeta2),
        "xi": _fmt(args.xi),
        "gamma_t_max": _fmt(args.gamma_t_max),
        "step": _fmt(args.step),
        "n": " ".join(str(n) for n in ns),
        "dim": dim,
        "floor": _fmt(args.floor),
        "oracle": str(bool(args.oracle)).lower(),
    }
    columns = ["gamma_t", "v_undeformed"] + [f"v_n{n}" for n in ns]
    if args.oracle:
        columns += [f"v_n{n}_numeric" for n in ns]
    rows = []
    for gt in grid:
        eta = math.exp(-gt)
        row = [_fmt(gt), _fmt(visibility_undeformed(zeta, eta))]
        for n in ns:
            row.append(_fmt(visibility_deformed(spec, zeta, n, eta)))
        if args.oracle:
            for n in ns:
                sample = visibility_numeric(spec, zeta, n, eta, dim=dim, floor=args.floor)
                row.append(_fmt(sample.value))
        rows.append(row)
    _write_atomic(args.out, _csv_text(header, columns, rows))
    return 0


def _cmd_fig3(args: argparse.Namespace) -> int:
    eta = math.exp(-args.gamma_t)
    dim = args.dim if args.dim is not None else DEFAULT_MAX_DIM
    reference = visibility_undeformed(math.sqrt(2.0), eta)
    count = int(math.floor((args.zeta2_max - args.zeta2_min) / args.step + 1e-9)) + 1
    grid = [args.zeta2_min + i * args.step for i in range(count)]
    header = {
        "command": "fig3",
        "gamma_t": _fmt(args.gamma_t),
        "n": args.n,
        "zeta2_min": _fmt(args.zeta2_min),
        "zeta2_max": _fmt(args.zeta2_max),
        "step": _fmt(args.step),
        "d_target": _fmt(args.d_target),
        "xi_search_max": _fmt(args.xi_max),
        "dim": dim,
        "floor": _fmt(args.floor),
        "undeformed_reference": _fmt(reference),
    }
    rows = []
    for z2 in grid:
        zeta = math.sqrt(z2)
        try:
            xi = calibrate_xi(
                zeta, args.d_target, args.xi_max, max_dim=dim, floor=args.floor
            )
            value = visibility_deformed(
                DeformationSpec.laguerre(xi), zeta, args.n, eta
            )
            rows.append([_fmt(z2), _fmt(xi), _fmt(value), _fmt(reference), "ok"])
        except DomainError as err:
            rows.append([_fmt(z2), "", "", _fmt(reference), err.name])
    columns = ["zeta2", "xi", "v_deformed", "v_undeformed_ref", "status"]
    _write_atomic(args.out, _csv_text(header, columns, rows))
    return 0


def _cmd_visibility(args: argparse.Namespace) -> int:
    if args.alpha2 is not None and args.zeta2 is not None:
        raise DomainError("give either --alpha2 or --zeta2, not both")
    size2 = args.alpha2 if args.alpha2 is not None else args.zeta2
    if size2 is None:
        raise DomainError("one of --alpha2 or --zeta2 is required")
    eta = math.exp(-args.gamma_t)
    spec = _spec_from_args(args)
    zeta = math.sqrt(size2)
    if args.numeric:
        dim = args.dim if args.dim is not None else 128
        value = visibility_numeric(spec, zeta, args.n, eta, dim=dim, floor=args.floor).value
    elif spec.kind == "identity":
        value = visibility_undeformed(zeta, eta)
    else:
        value = visibility_deformed(spec, zeta, args.n, eta)
    print(_fmt(value))
    return 0


def _cmd_separation(args: argparse.Namespace) -> int:
    if args.zeta is not None and args.zeta2 is not None:
        raise DomainError("give either --zeta or --zeta2, not both")
    if args.zeta is None and args.zeta2 is None:
        raise DomainError("one of --zeta or --zeta2 is required")
    zeta = args.zeta if args.zeta is not None else math.sqrt(args.zeta2)
    spec = _spec_from_args(args)
    dim = args.dim if args.dim is not None else DEFAULT_MAX_DIM
    print(_fmt(separation(spec, zeta, max_dim=dim, floor=args.floor)))
    return 0


def _cmd_calibrate(args: argparse.Namespace) -> int:
    dim = args.dim if args.dim is not None else DEFAULT_MAX_DIM
    xi = calibrate_xi(
        math.sqrt(args.zeta2), args.d_target, args.xi_max, max_dim=dim, floor=args.floor
    )
    print(_fmt(xi))
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dim", type=_positive_int, default=None,
                        help="Fock-space dimension (states and evolution)")
    parser.add_argument("--floor", type=_positive_float, default=DEFAULT_FLOOR,
                        help="relative term floor for adaptive truncation")


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", choices=("identity", "q", "laguerre"), required=True)
    parser.add_argument("--q", type=_positive_float, default=None)
    parser.add_argument("--xi", type=_nonneg_float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlcat",
        description="Deformed cat states under amplitude damping: "
                    "separation scans, visibility curves, calibration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("fig1", help="separation vs deformation parameter (CSV)")
    p1.add_argument("--zeta2", type=_nonneg_float, default=2.0)
    p1.add_argument("--q-min", type=_positive_float, default=0.5)
    p1.add_argument("--q-max", type=_positive_float, default=2.0)
    p1.add_argument("--q-step", type=_positive_float, default=0.01)
    p1.add_argument("--xi-min", type=_nonneg_float, default=0.0)
    p1.add_argument("--xi-max", type=_positive_float, default=1.2)
    p1.add_argument("--xi-step", type=_positive_float, default=0.005)
    p1.add_argument("--out", default="fig1.csv")
    _add_common(p1)
    p1.set_defaults(func=_cmd_fig1)

    p2 = sub.add_parser("fig2", help="visibility vs dimensionless time (CSV)")
    p2.add_argument("--zeta2", type=_positive_float, default=2.0)
    p2.add_argument("--xi", type=_nonneg_float, default=0.45048)
    p2.add_argument("--gamma-t-max", type=_positive_float, default=3.0)
    p2.add_argument("--step", type=_positive_float, default=0.05)
    p2.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p2.add_argument("--oracle", action="store_true",
                    help="add Kraus-evolution columns next to the series values")
    p2.add_argument("--out", default="fig2.csv")
    _add_common(p2)
    p2.set_defaults(func=_cmd_fig2)

    p3 = sub.add_parser("fig3", help="visibility vs zeta^2 at calibrated separation (CSV)")
    p3.add_argument("--gamma-t", type=_positive_float, default=1.0)
    p3.add_argument("--n", type=_positive_int, default=2)
    p3.add_argument("--zeta2-min", type=_positive_float, default=0.1)
    p3.add_argument("--zeta2-max", type=_positive_float, default=2.0)
    p3.add_argument("--step", type=_positive_float, default=0.05)
    p3.add_argument("--d-target", type=_positive_float, default=D_TARGET_DEFAULT)
    p3.add_argument("--xi-max", type=_positive_float, default=1.0,
                    help="upper end of the calibration search window")
    p3.add_argument("--out", default="fig3.csv")
    _add_common(p3)
    p3.set_defaults(func=_cmd_fig3)

    pv = sub.add_parser("visibility", help="single visibility value to stdout")
    _add_spec_flags(pv)
    pv.add_argument("--alpha2", type=_nonneg_float, default=None)
    pv.add_argument("--zeta2", type=_nonneg_float, default=None)
    pv.add_argument("--gamma-t", type=_nonneg_float, required=True)
    pv.add_argument("--n", type=int, default=0)
    pv.add_argument("--numeric", action="store_true",
                    help="use the Kraus-evolution route instead of the series")
    _add_common(pv)
    pv.set_defaults(func=_cmd_visibility)

    ps = sub.add_parser("separation", help="single separation value to stdout")
    _add_spec_flags(ps)
    ps.add_argument("--zeta", type=float, default=None)
    ps.add_argument("--zeta2", type=_nonneg_float, default=None)
    _add_common(ps)
    ps.set_defaults(func=_cmd_separation)

    pc = sub.add_parser("calibrate", help="xi on the d = d_target contour to stdout")
    pc.add_argument("--zeta2", type=_positive_float, default=2.0)
    pc.add_argument("--d-target", type=_positive_float, default=D_TARGET_DEFAULT)
    pc.add_argument("--xi-max", type=_positive_float, default=1.0)
    _add_common(pc)
    pc.set_defaults(func=_cmd_calibrate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as err:
        print(f"error: {err.name}: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
