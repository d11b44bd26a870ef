"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
Reports are JSON objects carrying ``schema_version``; tabular commands also
support ``--format csv``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, calculus, exterior as ext, hodge, laplacian as lap, metric
from . import qalgebra as qa
from . import verify as ver
from .scalar import ParseError, ScalarError, ScalarQ, as_scalar, eval_at, parse_scalar, symbol

SCHEMA_VERSION = 1
ORACLE_CHECKS = ("casimir", "tangent-ideal", "differential", "phi-basis")


class UsageError(Exception):
    pass


# -- argument helpers ------------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _q_value(text: str) -> Fraction:
    q = _rational(text)
    if not 0 < q < 1:
        raise argparse.ArgumentTypeError("q must lie in (0, 1)")
    return q


def _two_j(text: str) -> int:
    j = _rational(text)
    if j < 0 or (2 * j).denominator != 1:
        raise argparse.ArgumentTypeError(f"not a nonnegative half-integer: {text!r}")
    return int(2 * j)


def _scalar(text: str) -> ScalarQ:
    try:
        return parse_scalar(text)
    except (ParseError, ScalarError) as exc:
        raise UsageError(f"cannot parse scalar {text!r}: {exc}") from None


def _evaluated(x: ScalarQ, q0: Fraction | None) -> dict:
    """Optional exact and decimal value of x at q = q0."""
    if q0 is None:
        return {}
    try:
        v = eval_at(x, q0)
    except (ScalarError, ValueError):
        return {"at_q": None}
    re_, im_ = v.as_gaussian()
    dec = f"{float(re_):.12g}" if im_ == 0 else f"{float(re_):.12g}{float(im_):+.12g}i"
    return {"at_q": str(v), "decimal": dec}


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# -- commands --------------------------------------------------------------------------
# Each returns (report, csv_rows, exit_code); csv_rows is a list of dicts or None.

def cmd_verify(args):
    names = ver.SUITES if args.suites == "all" else tuple(s.strip() for s in args.suites.split(","))
    unknown = [n for n in names if n not in ver.SUITES]
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {', '.join(ver.SUITES)} or all")
    results = ver.run_suites(names, fault=args.debug_corrupt_sigma)
    rows = [dict(suite=s, **c.as_dict()) for s, checks in results.items() for c in checks]
    failed = [r for r in rows if not r["pass"]]
    report = {"suites": {s: [c.as_dict() for c in checks] for s, checks in results.items()},
              "checks": len(rows), "failed": len(failed),
              "failed_identities": sorted({r["identity"] for r in failed})}
    return report, [{k: r.get(k, "") for k in ("suite", "identity", "subject", "pass")} for r in rows], \
        (1 if failed else 0)


def cmd_spectra(args):
    rep = ext.spectral_report(args.k, args.sign).as_dict()
    for item in rep["eigenvalues"]:
        item.update(_evaluated(parse_scalar(item["value"]), args.q))
    rows = [{"k": args.k, "sign": args.sign, **e} for e in rep["eigenvalues"]]
    return rep, rows, 0


def _family(name: str, alpha: ScalarQ, branch: int) -> hodge.Contraction:
    if name == "a":
        return hodge.family_a(alpha, branch)
    if name == "b":
        return hodge.family_b(alpha)
    return hodge.family_c(alpha)


def _resolve_m(text: str, g: hodge.Contraction) -> ScalarQ:
    if text == "auto":
        try:
            return hodge.normalize_m(g)
        except (hodge.HodgeError, ScalarError) as exc:
            raise UsageError(f"cannot normalize m: {exc}") from None
    return _scalar(text)


def _canonical_text(g: hodge.Contraction, v: ScalarQ) -> str:
    """v as text, reduced to c0 + c1*t when g carries a quadratic relation on t."""
    if g.relation is None:
        return str(v)
    c0, c1 = g.canon(v)
    if c1.is_zero():
        return str(c0)
    tail = f"({c1})*{g.relation[0]}"
    return tail if c0.is_zero() else f"{c0} + {tail}"


def cmd_hodge_table(args):
    g = _family(args.family, _scalar(args.alpha), args.branch)
    cfg = hodge.HodgeConfig(g, _resolve_m(args.m, g), args.sign)
    degrees = {}
    rows = []
    for k in range(5):
        mat = hodge.hodge_matrix(cfg, k, args.operator)
        degrees[str(k)] = {src: {dst: _canonical_text(g, v) for dst, v in coords.items() if not g.is_zero(v)}
                           for src, coords in mat.items()}
        for src, coords in degrees[str(k)].items():
            for dst, v in coords.items():
                rows.append({"degree": k, "form": src, "image": dst, "coefficient": v})
    report = {"family": args.family, "operator": args.operator, "sign": args.sign, "m": str(cfg.m),
              "contraction": {n: str(v) for n, v in g.params().items()},
              "relation": None if g.relation is None else [str(x) for x in g.relation],
              "degrees": degrees}
    return report, rows, 0


def cmd_laplacian(args):
    q0 = args.q if args.q is not None else Fraction(1, 2)
    alpha = _scalar(args.alpha)
    if not alpha.is_constant():
        raise UsageError("alpha must be a rational constant for a spectrum scan")
    try:
        scan = lap.scan_spectrum(args.branch, alpha, q0, args.nmax, args.jmax, args.side)
    except lap.LaplacianError as exc:
        raise UsageError(str(exc)) from None
    report = {"branch": args.branch, "side": args.side, "q": str(q0), "alpha": str(alpha), **scan.as_dict()}
    return report, [e.as_dict() for e in scan.entries], 0


def contraction_from_json(data) -> tuple[hodge.Contraction, str]:
    if not isinstance(data, dict):
        raise UsageError("contraction JSON must be an object")
    try:
        g = hodge.Contraction.from_mapping({k: _scalar(str(v)) for k, v in data.items()
                                            if k in hodge.PARAM_NAMES})
    except hodge.HodgeError as exc:
        raise UsageError(str(exc)) from None
    return g, str(data.get("m", "m"))


def cmd_classify(args):
    g, m_text = contraction_from_json(_load_json(args.input))
    real = hodge.is_real(g)
    herm = hodge.is_hermitian(g) if real else hodge.Verdict(False, ["not real"])
    family = hodge.classify_family(g)
    maximal = None
    if real and herm:
        maximal = {d: hodge.is_maximally_hermitian(g, d) for d in "+-"}
    if m_text == "auto":
        m = _resolve_m(m_text, g) if family == "a" else None
    else:
        m = _scalar(m_text)
    d = hodge.detq(g)
    try:
        sign = hodge.sign_of(d) if not d.is_zero() else 0
    except ScalarError:
        sign = None
    report = {"real": real.ok, "real_witness": real.witness, "hermitian": herm.ok,
              "hermitian_witness": herm.witness, "family": family, "maximally_hermitian": maximal,
              "detq": str(d), "sign": sign, "m": None if m is None else str(m)}
    return report, None, 0


def metric_from_json(data) -> metric.MetricMatrix:
    rows = data.get("rows") if isinstance(data, dict) else data
    if not isinstance(rows, list) or len(rows) != 4 or any(not isinstance(r, list) or len(r) != 4 for r in rows):
        raise UsageError("metric JSON must be a 4x4 array (or {\"rows\": ...}) of scalar strings")
    return metric.MetricMatrix.from_rows([[_scalar(str(v)) for v in r] for r in rows])


def cmd_classify_metric(args):
    g = metric_from_json(_load_json(args.input))
    axioms = [r.as_dict() for r in metric.check_sigma_metric(g)]
    report = {"classification": metric.classify_metric(g), "axioms": axioms,
              "zero_pattern_violations": [list(p) for p in metric.zero_pattern_violations(g)]}
    return report, [{"axiom": a["axiom"], "status": a["status"]} for a in axioms], 0


def cmd_oracle(args):
    checks = args.check or list(ORACLE_CHECKS)
    out = {}
    if "tangent-ideal" in checks:
        out["tangent-ideal"] = [{"generator": i, "label": lab,
                                 "value": str(qa.pairing(qa.tangent_op(lab), g))}
                                for i, g in enumerate(qa.ideal_generators()) for lab in qa.TANGENT_LABELS]
    if "casimir" in checks:
        out["casimir"] = [{"n": n, "J": lap.format_j(tj), "pass": qa.casimir_check(n, tj)}
                          for n, tj in qa.valid_nJ(2, args.jmax)]
    if "differential" in checks:
        out["differential"] = [r.as_dict() for r in qa.differential_reconstruction()]
    if "phi-basis" in checks:
        rows = []
        for n, tj in qa.valid_nJ(2, args.jmax):
            for l in range(tj + 1):
                phi = qa.build_phi(n, tj, l)
                l0 = qa.eigen_ratio(qa.act(qa.tangent_op("0"), phi), phi)
                rows.append({"n": n, "J": lap.format_j(tj), "l": l, "charge": qa.charge(phi),
                             "L0_eigenvalue": None if l0 is None else str(l0), "element": repr(phi)})
        out["phi-basis"] = rows
    failed = 0
    for r in out.get("tangent-ideal", []):
        failed += r["value"] != "0"
    for key in ("casimir", "differential"):
        failed += sum(not r["pass"] for r in out.get(key, []))
    for r in out.get("phi-basis", []):
        ok = r["charge"] == r["n"] and r["L0_eigenvalue"] == str(lap.casimir_value(_two_j(r["J"])))
        failed += not ok
    flat = [dict(check=k, **{kk: str(vv) for kk, vv in r.items()}) for k, rs in out.items() for r in rs]
    return {"checks": out, "failed": failed}, flat, (1 if failed else 0)


def matrix_rows(cols, dim: int) -> list[list[str]]:
    dense = [["0"] * dim for _ in range(dim)]
    for c, col in enumerate(cols):
        for r, v in col.items():
            dense[r][c] = str(v)
    return dense


def load_matrix(data) -> list[list[ScalarQ]]:
    """Parse an exported matrix (the ``rows`` of an export report)."""
    rows = data["rows"] if isinstance(data, dict) else data
    return [[parse_scalar(v) for v in row] for row in rows]


def cmd_export(args):
    if args.what == "braiding":
        rows = matrix_rows(calculus.braiding_columns(args.sign), 16)
        labels = ["".join(calculus.LABELS[d] for d in calculus.index_word(i, 2)) for i in range(16)]
    elif args.what == "antisymmetrizer":
        if not 1 <= args.k <= 3:
            raise UsageError("antisymmetrizer export supports k = 1, 2, 3")
        dim = 4 ** args.k
        rows = matrix_rows(ext.antisymmetrizer_columns(args.k, args.sign), dim)
        labels = ["".join(calculus.LABELS[d] for d in calculus.index_word(i, args.k)) for i in range(dim)]
    else:
        g = _family(args.family, _scalar(args.alpha), args.branch)
        cfg = hodge.HodgeConfig(g, _resolve_m(args.m, g), args.sign)
        mat = hodge.hodge_matrix(cfg, args.k)
        labels = [e.name for e in ext.eigenbasis(args.k, args.sign)]
        targets = [e.name for e in ext.eigenbasis(4 - args.k, args.sign)]
        rows = [[str(mat[src].get(dst, ScalarQ(0))) for src in labels] for dst in targets]
        report = {"what": "hodge", "k": args.k, "sign": args.sign, "columns": labels, "row_labels": targets,
                  "rows": rows}
        return report, [dict(row=t, **dict(zip(labels, r))) for t, r in zip(targets, rows)], 0
    report = {"what": args.what, "sign": args.sign, "basis": labels, "rows": rows}
    return report, [dict(row=lab, **dict(zip(labels, r))) for lab, r in zip(labels, rows)], 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the shared flags appear before or after the subcommand
    common.add_argument("--q", type=_q_value, default=argparse.SUPPRESS,
                        help="rational evaluation point in (0, 1)")
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="qhodge", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suites", default="all", help=f"comma list of {', '.join(ver.SUITES)}, or all")
    p.add_argument("--debug-corrupt-sigma", action="store_true",
                   help="perturb one braiding entry (fault injection)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectra", parents=[common], help="antisymmetrizer spectrum")
    p.add_argument("--k", type=int, choices=range(1, 5), required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.set_defaults(func=cmd_spectra)

    def family_args(p):
        p.add_argument("--family", choices=("a", "b", "c"), default="a")
        p.add_argument("--alpha", default="alpha")
        p.add_argument("--branch", type=int, choices=(1, -1), default=1,
                       help="family (a) sign: epsilon = branch*(q^2-1)*alpha")
        p.add_argument("--m", default="m", help="scale m, or auto to normalize")
        p.add_argument("--sign", choices=("+", "-"), default="+", help="exterior algebra direction")

    p = sub.add_parser("hodge-table", parents=[common], help="Hodge operator matrices per degree")
    family_args(p)
    p.add_argument("--operator", choices=("T", "L"), default="T")
    p.set_defaults(func=cmd_hodge_table)

    p = sub.add_parser("laplacian", parents=[common], help="Laplacian spectrum scan")
    p.add_argument("--branch", choices=lap.BRANCHES, default="sigma")
    p.add_argument("--side", choices=lap.SIDES, default="L")
    p.add_argument("--alpha", default="1")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--jmax", type=_two_j, default=8, help="largest J (half-integer)")
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("classify", parents=[common], help="classify a contraction JSON")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classify-metric", parents=[common], help="classify a metric JSON")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_classify_metric)

    p = sub.add_parser("oracle", parents=[common], help="coordinate-algebra oracle checks")
    p.add_argument("--check", action="append", choices=ORACLE_CHECKS)
    p.add_argument("--jmax", type=_two_j, default=4, help="largest J (half-integer)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", parents=[common], help="export matrices")
    p.add_argument("what", choices=("braiding", "antisymmetrizer", "hodge"))
    p.add_argument("--k", type=int, default=2)
    family_args(p)
    p.set_defaults(func=cmd_export)
    return parser


def _render(report: dict, rows, fmt: str) -> str:
    if fmt == "csv":
        if rows is None:
            raise UsageError("this command has no tabular form; use --format json")
        buf = io.StringIO()
        fields = []
        for r in rows:
            for k in r:
                if k not in fields:
                    fields.append(k)
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    return json.dumps(report, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("q", None), ("format", "json"), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        report, rows, code = args.func(args)
        report = {"schema_version": SCHEMA_VERSION, "command": args.command, **report}
        text = _render(report, rows, args.format)
    except UsageError as exc:
        print(f"qhodge: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
