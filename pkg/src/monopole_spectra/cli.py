"""Command-line front end: ``monopole-spectra <command> [options]``.

Every command builds a document {schema_version, command, inputs, outputs,
residuals} and writes it as JSON, or as a CSV table with a header row.
Exit codes: 0 ok, 1 verification failure, 2 usage or domain error, 3 numeric
failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from . import charge2, cohomology, division, platonic, verification
from ._format import algebraic_form, cnum, frac, num
from .curves import BidegreeCurve
from .errors import (
    ConfigurationError,
    DomainError,
    IntegrityError,
    MonopoleError,
    NumericError,
    ResourceError,
)
from .exact import RationalPolynomial
from .platonic import Group
from .special_functions import cubic_roots

SCHEMA_VERSION = "1.0"
THREADS_ENV = "MONOPOLE_SPECTRA_THREADS"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class Table:
    def __init__(self, header: list[str], rows: list[list[str]]):
        self.header = header
        self.rows = rows


def _doc(command: str, inputs: dict, outputs: dict, residuals: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs,
            "outputs": outputs, "residuals": residuals}


def _kv_table(doc: dict) -> Table:
    """Flatten outputs and residuals into key,value rows."""
    rows = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        elif isinstance(v, list):
            for i, x in enumerate(v):
                walk(f"{prefix}[{i}]", x)
        else:
            rows.append([prefix, "" if v is None else str(v)])

    walk("outputs", doc["outputs"])
    walk("residuals", doc["residuals"])
    return Table(["key", "value"], rows)


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return min(8, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _real_arg(text: str) -> float:
    try:
        x = float(Fraction(text.strip())) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return x


def _exact_or_none(text: str | None) -> Fraction | None:
    if text is None:
        return None
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return None


def _matrix_out(curve: BidegreeCurve) -> dict:
    out = {"k": curve.k, "coefficients": [[cnum(c) for c in row] for row in curve.matrix()]}
    if curve.exact:
        out["exact"] = [[str(c) for c in row] for row in curve.coeff]
    return out


def _matrix_table(curve: BidegreeCurve) -> Table:
    rows = []
    m = curve.matrix()
    for i in range(curve.k + 1):
        for j in range(curve.k + 1):
            ex = str(curve.coeff[i][j]) if curve.exact else ""
            rows.append([str(i), str(j), num(m[i, j].real), num(m[i, j].imag), ex])
    return Table(["w_power", "z_power", "re", "im", "exact"], rows)


# --- curve2 ----------------------------------------------------------------------------------

def cmd_curve2(args) -> tuple[dict, Table]:
    m, kappa, limit = args.mass, args.kappa, args.limit
    inputs = {"mass": None if m is None else num(m), "kappa": None if kappa is None else num(kappa),
              "limit": limit}
    residuals: dict = {}
    outputs: dict = {"normalization": "coefficient of w^2 set to 1"}
    if limit == "euclid":
        if kappa is None:
            raise DomainError("the euclidean limit needs --kappa")
        e = charge2.euclid_limit_charge2(kappa)
        outputs.update({"form": "eta^2 + sum_j c_j zeta^j", "k": num(e.k),
                        "coefficients": [num(c) for c in e.coeffs],
                        "standard_coefficients": [num(c) for c in e.standard_coeffs]})
        residuals["form_deviation"] = num(e.max_deviation)
        rows = [[str(j), num(a), num(b)] for j, (a, b) in enumerate(zip(e.coeffs, e.standard_coeffs))]
        return _doc("curve2", inputs, outputs, residuals), Table(["zeta_power", "coefficient", "standard"], rows)
    if limit == "axial":
        if m is None:
            raise DomainError("the axial limit needs --mass")
        curve = charge2.limit_axial(m)
        outputs["factor_slopes"] = [cnum(s) for s in charge2.axial_factors(m)]
    elif limit == "nullaron":
        if kappa is None:
            raise DomainError("the nullaron limit needs --kappa")
        kq = _exact_or_none(args.kappa_text)
        curve = charge2.limit_nullaron(kq if kq is not None else kappa)
    elif limit == "separation":
        curve = charge2.limit_separation()
    else:
        if m is None or kappa is None:
            raise DomainError("curve2 needs --mass and --kappa (or a --limit)")
        kq = _exact_or_none(args.kappa_text)
        if m == 0 and kq is not None:
            curve = charge2.limit_nullaron(kq)
        else:
            curve = charge2.curve_from_mass(m, kappa)
        if kappa > 0:
            d = charge2.derived_params(m, kappa)
            outputs["derived"] = {k: num(getattr(d, k)) for k in
                                  ("rho", "u", "v", "lam", "LambdaSq", "alpha", "beta")}
            v = charge2.verify_triviality(m, kappa)
            outputs["cycle_integers"] = [v.ell1, v.ell2]
            residuals["mass_residual"] = num(abs(v.mass_residual))
            residuals["cycle_residual"] = num(v.ell_residual)
            residuals["I1_closed_form"] = num(abs(v.I1 - v.I1_closed))
            residuals["I2_closed_form"] = num(abs(v.I2 - v.I2_closed))
    curve = curve.normalized_by(2, 0)
    outputs.update(_matrix_out(curve))
    residuals["reality_defect"] = num(curve.reality_defect())
    residuals["symmetry_defect"] = num(curve.symmetry_defect())
    return _doc("curve2", inputs, outputs, residuals), _matrix_table(curve)


# --- platonic --------------------------------------------------------------------------------

_SAMPLE_W = (0.3 + 0.7j, -1.2 + 0.4j, 0.9 - 1.1j, 2.5 + 0.2j)


def cmd_platonic(args) -> tuple[dict, Table]:
    g = Group.parse(args.group)
    if args.alpha is not None:
        alpha = args.alpha
        m = platonic.mass_from_alpha(g, alpha)
    else:
        m = args.mass
        alpha = platonic.alpha_from_mass(g, m)
    aq = _exact_or_none(args.alpha_text)
    fam_alpha = aq if aq is not None and args.alpha is not None else alpha
    fam = platonic.PlatonicFamily(g, fam_alpha)
    qc = platonic.quotient_curve(g, alpha)
    cyc = platonic.verify_cycle_integers(g, alpha, m)
    roots = cubic_roots(qc.inv)
    inputs = {"group": g.value, "mass": None if args.mass is None else num(args.mass),
              "alpha": None if args.alpha is None else num(args.alpha)}
    outputs = {
        "group": g.value, "charge": g.charge, "alpha": num(alpha), "mass": num(m),
        "g2": num(qc.inv.g2), "g3": num(qc.inv.g3), "j": num(qc.j),
        "pole_x": num(qc.x_pole), "relation_rhs": num(qc.rhs),
        "roots": {"e1": cnum(roots.e1), "e2": num(roots.e2), "e3": cnum(roots.e3)},
        "half_periods": {"varpi": num(qc.periods.varpi), "varpi_prime": cnum(qc.periods.varpi_prime),
                         "varpi1": cnum(qc.periods.varpi1)},
        "cycle_integers": [cyc.ell1, cyc.ell2],
    }
    outputs.update(_matrix_out(platonic.ansatz_curve(fam)))
    worst = 0.0
    for w in _SAMPLE_W:
        for z in platonic.curve_points(fam, w):
            worst = max(worst, platonic.weierstrass_residual(fam, w, complex(z)))
    residuals = {"mass_relation": num(abs(platonic.mass_relation_residual(g, alpha, m)))
                 if m > 0 else "0",
                 "cycle_integers": num(cyc.residual), "weierstrass": num(worst)}
    doc = _doc("platonic", inputs, outputs, residuals)
    return doc, _kv_table(doc)


# --- scan ------------------------------------------------------------------------------------

SCAN_COLUMNS = ["m", "alpha", "g2", "g3", "j", "ell1", "residual"]


def _scan_row(g: Group, m: float) -> list[str]:
    alpha = platonic.alpha_from_mass(g, m)
    inv = platonic.quotient_invariants(g, alpha)
    j = platonic.j_invariant(g, alpha)
    cyc = platonic.verify_cycle_integers(g, alpha, m)
    res = abs(platonic.mass_relation_residual(g, alpha, m)) if m > 0 else 0.0
    return [num(m), num(alpha), num(inv.g2), num(inv.g3), num(j), str(cyc.ell1), num(res)]


def cmd_scan(args) -> tuple[dict, Table]:
    g = Group.parse(args.group)
    lo, hi, steps = args.mass_min, args.mass_max, args.steps
    if steps < 1:
        raise DomainError("--steps must be at least 1")
    if not (0 <= lo <= hi):
        raise DomainError("need 0 <= --mass-min <= --mass-max")
    grid = [lo] if steps == 1 else [float(x) for x in np.linspace(lo, hi, steps)]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        rows = list(pool.map(lambda m: _scan_row(g, m), grid))
    inputs = {"group": g.value, "mass_min": num(lo), "mass_max": num(hi), "steps": steps}
    alphas = [float(r[1]) for r in rows]
    monotone = all(b < a for a, b in zip(alphas, alphas[1:]))
    outputs = {"columns": SCAN_COLUMNS, "rows": rows, "alpha_strictly_decreasing": monotone}
    residuals = {"max_mass_residual": num(max(float(r[6]) for r in rows))}
    return _doc("scan", inputs, outputs, residuals), Table(SCAN_COLUMNS, rows)


# --- half-integer ----------------------------------------------------------------------------

HALF_COLUMNS = ["m", "r", "alpha", "exact", "minimal_polynomial", "new_factor_degree",
                "determinant_degree"]


def _half_row(g: Group, r: int) -> list[str]:
    if r == 0:
        a = RationalPolynomial.x()
        mp = a ** 2 - 3 if g is Group.TETRA else a - 1
        return ["0", "0", num(g.alpha_max), algebraic_form(mp, g.alpha_max), str(mp), "", ""]
    h = cohomology.half_integer_alpha(g, r)
    form = algebraic_form(h.minimal_polynomial, h.alpha) or ""
    return [frac(h.mass), str(r), num(h.alpha), form, str(h.minimal_polynomial),
            str(h.new_factor.degree), str(h.determinant.degree)]


def cmd_half_integer(args) -> tuple[dict, Table]:
    g = Group.parse(args.group)
    r_max = int(round(2 * args.max_m))
    if abs(2 * args.max_m - r_max) > 1e-12 or r_max < 0:
        raise DomainError("--max-m must be a nonnegative multiple of 1/2")
    if r_max > cohomology.MAX_LEVEL:
        raise ResourceError(f"--max-m {args.max_m} needs level {r_max} > {cohomology.MAX_LEVEL}")
    rows = [_half_row(g, r) for r in range(r_max + 1)]
    worst = 0.0
    for row in rows[1:]:
        a, m = float(row[2]), float(Fraction(row[0]))
        worst = max(worst, abs(a - platonic.alpha_from_mass(g, m)))
    inputs = {"group": g.value, "max_m": num(args.max_m)}
    outputs = {"columns": HALF_COLUMNS, "rows": rows}
    residuals = {"max_alpha_deviation_vs_mass_relation": num(worst)}
    return _doc("half-integer", inputs, outputs, residuals), Table(HALF_COLUMNS, rows)


# --- rational --------------------------------------------------------------------------------

def cmd_rational(args) -> tuple[dict, Table]:
    g = Group.parse(args.group)
    m = division.parse_mass(args.mass_text)
    res = division.alpha_for_rational_mass(g, m, max_n=args.max_n)
    pt = res.point
    inputs = {"group": g.value, "mass": frac(m), "max_n": args.max_n}
    outputs: dict = {"method": res.method, "n": pt.n, "k1": pt.k1,
                     "division_degree": pt.degree, "alpha": num(res.alpha)}
    residuals = {"mass_relation": num(res.residual)}
    if res.polynomial is not None:
        mp = res.minimal_polynomial
        outputs.update({
            "alpha_polynomial_degree": res.polynomial.degree,
            "alpha_polynomial": [str(c) for c in res.polynomial.coefficients],
            "minimal_polynomial": str(mp),
            "minimal_polynomial_coefficients": [str(c) for c in mp.integer_coefficients()],
            "exact": algebraic_form(mp, res.alpha),
            "candidates": [num(c) for c in res.candidates],
        })
        residuals["division_value"] = num(division.division_value_residual(g, res.alpha, m))
    doc = _doc("rational", inputs, outputs, residuals)
    return doc, _kv_table(doc)


# --- verify ----------------------------------------------------------------------------------

VERIFY_COLUMNS = ["suite", "name", "passed", "value", "tolerance", "detail"]


def cmd_verify(args) -> tuple[dict, Table]:
    checks = verification.run_suite(args.suite)
    rows = [[c.suite, c.name, "true" if c.passed else "false", num(c.value), num(c.tolerance), c.detail]
            for c in checks]
    failures = [f"{c.suite}:{c.name}" for c in checks if not c.passed]
    outputs = {"passed": not failures, "checks": [dict(zip(VERIFY_COLUMNS, r)) for r in rows],
               "failures": failures}
    residuals = {"worst_ratio": num(max((c.value / c.tolerance for c in checks if c.tolerance > 0),
                                        default=0.0))}
    return _doc("verify", {"suite": args.suite}, outputs, residuals), Table(VERIFY_COLUMNS, rows)


# --- plumbing --------------------------------------------------------------------------------

def _add_number(p, flag: str, dest: str, **kw):
    p.add_argument(flag, dest=dest, type=_real_arg, **kw)
    p.set_defaults(**{f"{dest}_text": None})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="output format (default json; csv for scan)")
    common.add_argument("--out", metavar="PATH", default=None, help="write to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="monopole-spectra",
                                     description="Spectral curves of hyperbolic monopoles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve2", parents=[common], help="charge-2 curve for (mass, kappa)")
    _add_number(p, "--mass", "mass")
    _add_number(p, "--kappa", "kappa")
    p.add_argument("--limit", choices=("axial", "nullaron", "separation", "euclid"))
    p.set_defaults(func=cmd_curve2)

    p = sub.add_parser("platonic", parents=[common], help="tetrahedral or octahedral curve")
    p.add_argument("--group", required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--mass", type=_real_arg)
    grp.add_argument("--alpha", type=_real_arg)
    p.set_defaults(func=cmd_platonic, alpha_text=None)

    p = sub.add_parser("scan", parents=[common], help="alpha(m) and invariants over a mass grid")
    p.add_argument("--group", required=True)
    p.add_argument("--mass-min", type=_real_arg, required=True)
    p.add_argument("--mass-max", type=_real_arg, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("half-integer", parents=[common], help="alpha at m = r/2 from determinants")
    p.add_argument("--group", required=True)
    p.add_argument("--max-m", type=_real_arg, default=1.5)
    p.set_defaults(func=cmd_half_integer)

    p = sub.add_parser("rational", parents=[common], help="alpha at a rational mass p/q")
    p.add_argument("--group", required=True)
    p.add_argument("--mass", dest="mass_text", required=True)
    p.add_argument("--max-n", type=int, default=division.MAX_ORDER)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("--suite", choices=("all", *verification.SUITES), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def _raw_values(argv: list[str]) -> dict[str, str]:
    """Original text of --kappa/--alpha so rational inputs can stay exact."""
    raw = {}
    for flag in ("--kappa", "--alpha"):
        for i, tok in enumerate(argv):
            if tok == flag and i + 1 < len(argv):
                raw[flag[2:]] = argv[i + 1]
            elif tok.startswith(flag + "="):
                raw[flag[2:]] = tok.split("=", 1)[1]
    return raw


def render(doc: dict, table: Table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.header)
    w.writerows(table.rows)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for k, v in _raw_values(argv).items():
        setattr(args, f"{k}_text", v)
    fmt = args.format or ("csv" if args.command == "scan" else "json")
    try:
        doc, table = args.func(args)
    except (DomainError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, IntegrityError, ResourceError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except MonopoleError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = render(doc, table, fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not doc["outputs"]["passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
