"""Command-line harness.

Subcommands:

* ``exact``:   v_p(T(n)) by the two integer routes, with an agreement flag.
* ``coeffs``:  the Fourier coefficient table for one prime.
* ``compare``: exact vs analytic decomposition, one row per n.
* ``figure``:  scatter (n, v_p(T(n))/n) plus the dense fluctuation curve.
* ``verify``:  the full cross-check suite (oracles, zeta identities,
  coefficient and constant assembly, Delange, Dirichlet series, end to end).

Output is CSV (default) or JSON, to stdout or ``--output``; identical
configurations produce byte-identical files.  Exit codes: 0 success,
1 usage error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import analytic, exact, special

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

_DEFAULT_FOURIER_TERMS = 400


class UsageError(Exception):
    """Bad command line or configuration; maps to exit code 1."""


@dataclass(frozen=True)
class RunConfig:
    """One deterministic harness run (no seeds, no environment)."""

    prime: int
    n_min: int = 1
    n_max: int = 200
    fourier_terms: int = _DEFAULT_FOURIER_TERMS
    output_format: str = "csv"
    output_path: str | None = None

    def validate(self) -> None:
        try:
            exact.ensure_prime(self.prime)
        except (ValueError, TypeError) as e:
            raise UsageError(str(e)) from e
        if not 1 <= self.n_min <= self.n_max:
            raise UsageError("need 1 <= n_min <= n_max")
        if self.fourier_terms < 1:
            raise UsageError("fourier-terms must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise UsageError("format must be csv or json")


@dataclass(frozen=True)
class ComparisonRecord:
    """One exact-vs-analytic row."""

    n: int
    exact: int
    main_term: float
    phi_term: float
    psi_term: float
    log_term: float
    f0_term: float
    analytic_total: float
    residual: float
    residual_over_n: float


def _fmt(value: object) -> str:
    """CSV cell formatting: floats get 17 significant digits (round-trip
    exact for doubles), everything else its plain string form."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _write_csv(stream, header: list[str], rows: list[dict], summary: dict) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(row[col]) for col in header])
    if summary:
        pairs = " ".join(f"{key}={_fmt(val)}" for key, val in summary.items())
        stream.write(f"# summary: {pairs}\n")


def _write_json(stream, config: RunConfig, rows: list[dict], summary: dict) -> None:
    doc = {"config": asdict(config), "rows": rows, "summary": summary}
    json.dump(doc, stream, indent=2)
    stream.write("\n")


def _emit(config: RunConfig, header: list[str], rows: list[dict], summary: dict) -> int:
    def write(stream) -> None:
        if config.output_format == "json":
            _write_json(stream, config, rows, summary)
        else:
            _write_csv(stream, header, rows, summary)

    if config.output_path is None:
        write(sys.stdout)
        return EXIT_OK
    try:
        with open(config.output_path, "w", newline="", encoding="utf-8") as fh:
            write(fh)
    except OSError as e:
        print(f"error: cannot write {config.output_path}: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_exact(config: RunConfig) -> int:
    """Two-oracle sweep with per-row agreement flags."""
    dig = exact.vp_asm_range_digit_sum(config.prime, config.n_max)
    leg = exact.vp_asm_range_legendre(config.prime, config.n_max)
    rows = []
    disagreements = 0
    for n in range(config.n_min, config.n_max + 1):
        a, b = int(dig[n - 1]), int(leg[n - 1])
        agree = a == b
        disagreements += not agree
        rows.append(
            {"n": n, "vp_digit_sum": a, "vp_legendre": b, "agree": agree}
        )
    summary = {"rows": len(rows), "disagreements": disagreements}
    code = _emit(config, ["n", "vp_digit_sum", "vp_legendre", "agree"], rows, summary)
    if code:
        return code
    return EXIT_VERIFY if disagreements else EXIT_OK


def cmd_coeffs(config: RunConfig) -> int:
    """Fourier coefficient table: c_k and, for p != 3, the d_{k,j} columns."""
    coeffs = analytic.fourier_coefficients(config.prime, config.fourier_terms)
    have_d = coeffs.d is not None
    header = ["k", "c_re", "c_im"]
    if have_d:
        for j_name in ("d_minus1", "d_0", "d_plus1"):
            header += [f"{j_name}_re", f"{j_name}_im"]
    header.append("envelope_warning")
    rows = []
    warned = 0
    for k in range(1, config.fourier_terms + 1):
        c = coeffs.c_at(k)
        row: dict = {"k": k, "c_re": c.real, "c_im": c.imag}
        if have_d:
            for j, j_name in ((-1, "d_minus1"), (0, "d_0"), (1, "d_plus1")):
                d = coeffs.d_at(k, j)
                row[f"{j_name}_re"] = d.real
                row[f"{j_name}_im"] = d.imag
        flag = analytic.envelope_exceeded(k, config.prime)
        warned += flag
        row["envelope_warning"] = flag
        rows.append(row)
    summary = {"rows": len(rows), "envelope_warnings": warned}
    return _emit(config, header, rows, summary)


def _comparison_records(config: RunConfig) -> list[ComparisonRecord]:
    coeffs = analytic.fourier_coefficients(config.prime, config.fourier_terms)
    vals = exact.vp_asm_range_digit_sum(config.prime, config.n_max)
    records = []
    for n in range(config.n_min, config.n_max + 1):
        dec = analytic.valuation_expansion(n, coeffs)
        v = int(vals[n - 1])
        residual = v - dec.total
        records.append(
            ComparisonRecord(
                n=n,
                exact=v,
                main_term=dec.main_term,
                phi_term=dec.phi_term,
                psi_term=dec.psi_term,
                log_term=dec.log_term,
                f0_term=dec.f0_term,
                analytic_total=dec.total,
                residual=residual,
                residual_over_n=residual / n,
            )
        )
    return records


_COMPARE_HEADER = [
    "n",
    "exact",
    "main_term",
    "phi_term",
    "psi_term",
    "log_term",
    "f0_term",
    "analytic_total",
    "residual",
    "residual_over_n",
]


def cmd_compare(config: RunConfig) -> int:
    """Exact minus analytic, addend by addend, with a tail-bound summary."""
    records = _comparison_records(config)
    rows = [asdict(r) for r in records]
    summary = {
        "max_abs_residual_over_n": max(abs(r.residual_over_n) for r in records),
        "fourier_tail_envelope": analytic.fourier_tail_envelope(config.fourier_terms),
    }
    return _emit(config, _COMPARE_HEADER, rows, summary)


def cmd_figure(config: RunConfig) -> int:
    """Scatter series (n, v_p(T(n))/n) plus the dense fluctuation curve
    main_slope + Phi(x), sampled uniformly in x = log_p n (>= 1000 points)."""
    if config.n_min >= config.n_max:
        raise UsageError("figure requires n_min < n_max")
    coeffs = analytic.fourier_coefficients(config.prime, config.fourier_terms)
    vals = exact.vp_asm_range_digit_sum(config.prime, config.n_max)
    slope = analytic.main_slope(config.prime)
    rows = []
    for n in range(config.n_min, config.n_max + 1):
        rows.append({"series": "scatter", "x": float(n), "y": int(vals[n - 1]) / n})
    lp = math.log(config.prime)
    x_lo = math.log(config.n_min) / lp
    x_hi = math.log(config.n_max) / lp
    curve_points = 1001
    for x in np.linspace(x_lo, x_hi, curve_points):
        rows.append(
            {
                "series": "curve",
                "x": float(config.prime**x),
                "y": slope + analytic.phi_eval(float(x), coeffs),
            }
        )
    summary = {
        "scatter_points": config.n_max - config.n_min + 1,
        "curve_points": curve_points,
        "curve_constant": slope,
    }
    return _emit(config, ["series", "x", "y"], rows, summary)


# ----------------------------------------------------------------------
# verification suites
# ----------------------------------------------------------------------


def _suite_oracle_agreement(config: RunConfig) -> tuple[str, str]:
    n_sweep = min(max(config.n_max, 200), 5000)
    dig = exact.vp_asm_range_digit_sum(config.prime, n_sweep)
    leg = exact.vp_asm_range_legendre(config.prime, n_sweep)
    if not np.array_equal(dig, leg):
        bad = int(np.nonzero(dig != leg)[0][0]) + 1
        return "fail", f"digit-sum and Legendre routes differ first at n={bad}"
    for n in range(1, 13):
        if exact.vp_asm_bignum(config.prime, n) != int(dig[n - 1]):
            return "fail", f"big-integer oracle differs at n={n}"
    for n in (1, 2, 3, n_sweep // 2, n_sweep):
        if exact.vp_asm_digit_sum(config.prime, n) != int(dig[n - 1]):
            return "fail", f"scalar digit-sum route differs from sweep at n={n}"
    for m in range(1, 2001):
        if not exact.digit_sum_step_identity(config.prime, m):
            return "fail", f"digit-sum step identity fails at m={m}"
        if exact.vp_factorial(config.prime, m) != exact.vp_factorial_digit_form(
            config.prime, m
        ):
            return "fail", f"Legendre two-form identity fails at m={m}"
    return "pass", f"3 oracles agree (sweep to n={n_sweep}, bignum to 12)"


_ZETA_GRID = [
    complex(sigma, t)
    for sigma in (-0.5, 0.25, 1.5, 3.0)
    for t in (0.9, 13.7, 133.1, 477.3)
]


def _suite_zeta_identities(config: RunConfig) -> tuple[str, str]:
    z2 = special.riemann_zeta(2.0)
    if abs(z2 - math.pi**2 / 6.0) > 1e-12 * abs(z2):
        return "fail", f"zeta(2) off: {z2}"
    for i in range(1, 11):
        a = i / 10.0
        if abs(special.hurwitz_zeta(0.0, a) - (0.5 - a)) > 1e-12:
            return "fail", f"zeta(0, {a}) != 1/2 - alpha"
    if abs(special.riemann_zeta(-1.0) - (-1.0 / 12.0)) > 1e-12:
        return "fail", "zeta(-1) != -1/12"
    for s in _ZETA_GRID:
        lhs = (
            special.hurwitz_zeta(s, 1.0 / 3.0)
            + special.hurwitz_zeta(s, 2.0 / 3.0)
            + special.riemann_zeta(s)
        )
        rhs = 3.0**s * special.riemann_zeta(s)
        if abs(lhs - rhs) > 1e-10 * abs(rhs):
            return "fail", f"multiplication theorem fails at s={s}"
        sym = special.hurwitz_zeta(s.conjugate(), 1.0 / 3.0)
        if abs(sym - special.hurwitz_zeta(s, 1.0 / 3.0).conjugate()) > 1e-12 * abs(sym):
            return "fail", f"conjugate symmetry fails at s={s}"
    for s in (2.0 + 0j, complex(0.5, 77.7)):
        if special.hurwitz_zeta(s, 0.25) != special.hurwitz_zeta(s, 1.25):
            return "fail", f"periodicity in alpha fails at s={s}"
    return "pass", "known values, multiplication theorem, symmetry, periodicity"


def _suite_phi_symmetry(config: RunConfig) -> tuple[str, str]:
    kmax = min(config.fourier_terms, 50)
    for k in range(1, kmax + 1):
        a = analytic.phi_coeff(-k, config.prime)
        b = analytic.phi_coeff(k, config.prime).conjugate()
        if abs(a - b) > 1e-12 * max(1e-300, abs(b)):
            return "fail", f"c_-k != conj(c_k) at k={k}"
    return "pass", f"Hermitian symmetry of c_k for k <= {kmax}"


def _suite_psi_identities(config: RunConfig) -> tuple[str, str]:
    if config.prime == 3:
        return "skipped", "p = 3 has no psi fluctuations"
    kmax = min(config.fourier_terms, 50)
    tag = analytic.case_of(config.prime)
    for k in range(1, kmax + 1):
        d0 = analytic.psi_coeff(k, 0, config.prime)
        dsum = analytic.psi_coeff(k, 1, config.prime) + analytic.psi_coeff(
            k, -1, config.prime
        )
        if abs(d0 - dsum) > 1e-10 * max(1.0, abs(d0)):
            return "fail", f"d_k0 != d_k1 + d_k-1 at k={k}"
        if (
            tag is analytic.CaseTag.P_EQ_MINUS_1_MOD_3
            and k % 2 == 1
            and abs(d0) > 1e-10
        ):
            return "fail", f"odd-k d_k0 not zero at k={k}"
        a = analytic.psi_coeff(-k, 1, config.prime)
        if abs(a - analytic.psi_coeff(k, 1, config.prime).conjugate()) > 1e-10:
            return "fail", f"d symmetry fails at k={k}"
    return "pass", f"d identities for k <= {kmax}"


def _suite_coefficient_assembly(
    config: RunConfig, coeff_perturbation: float = 0.0
) -> tuple[str, str]:
    if config.prime == 3:
        return "skipped", "assembly identity applies to p != 3"
    kmax = min(config.fourier_terms, 50)
    worst = 0.0
    for k in range(1, kmax + 1):
        direct = analytic.phi_coeff(k, config.prime)
        assembled = analytic.assembled_phi_coeff(k, config.prime) + coeff_perturbation
        rel = abs(assembled - direct) / abs(direct)
        worst = max(worst, rel)
        if rel > 1e-10:
            return "fail", f"coefficient assembly off by {rel:.2e} at k={k}"
    return "pass", f"c_k assembly to {worst:.2e} for k <= {kmax}"


def _suite_constant_assembly(config: RunConfig) -> tuple[str, str]:
    if config.prime == 3:
        return "skipped", "constant assembly applies to p != 3"
    p = config.prime
    slope_err = abs(analytic.assembled_main_slope(p) - analytic.main_slope(p))
    if slope_err > 1e-12:
        return "fail", f"main-slope assembly off by {slope_err:.2e}"
    for n in (1, 17, 4096):
        gap = (
            analytic.least_order_term(n, p)
            - analytic.residue_constant_term(n, p)
            - analytic.remainder_constant(p)
        )
        if abs(gap) > 1e-12:
            return "fail", f"remainder assembly off by {gap:.2e} at n={n}"
    refl = special.log_gamma_real(1.0 / 3.0) + special.log_gamma_real(
        2.0 / 3.0
    ) - math.log(2.0 * math.pi / math.sqrt(3.0))
    if abs(refl) > 1e-10:
        return "fail", f"Gamma reflection off by {refl:.2e}"
    return "pass", "main slope, remainder constant, Gamma reflection"


def _suite_delange(config: RunConfig) -> tuple[str, str]:
    worst = 0.0
    for n in (100_000, 131_072, 200_001):
        brute = exact.prefix_digit_sum(config.prime, n)
        closed = analytic.delange_closed_form(n, config.prime, config.fourier_terms)
        worst = max(worst, abs(brute - closed) / n)
    if worst > 1e-2:
        return "fail", f"Delange residual {worst:.2e} exceeds 1e-2 per unit n"
    return "pass", f"prefix digit sums match closed form to {worst:.2e} per unit n"


def _suite_dirichlet_series(config: RunConfig) -> tuple[str, str]:
    if config.prime == 3:
        return "skipped", "valuation Dirichlet series applies to p != 3"
    worst = 0.0
    for j in (-1, 0, 1):
        closed = analytic.valuation_dirichlet_series(2.0, j, config.prime)
        direct = analytic.valuation_dirichlet_series_direct(
            2.0, j, config.prime, terms=100_000
        )
        rel = abs(direct - closed) / abs(closed)
        worst = max(worst, rel)
        if rel > 1e-6:
            return "fail", f"series mismatch {rel:.2e} at j={j}"
    return "pass", f"closed form matches direct series to {worst:.2e}"


def _suite_end_to_end(config: RunConfig) -> tuple[str, str]:
    n_top = min(config.n_max, 200)
    cfg = RunConfig(
        prime=config.prime,
        n_min=1,
        n_max=n_top,
        fourier_terms=config.fourier_terms,
    )
    records = _comparison_records(cfg)
    worst = max(abs(r.residual_over_n) for r in records)
    bound = analytic.fourier_tail_envelope(config.fourier_terms)
    if worst > bound:
        return "fail", f"max |residual|/n = {worst:.3e} exceeds envelope {bound:.3e}"
    return "pass", f"max |residual|/n = {worst:.3e} within envelope {bound:.3e}"


_SUITES = [
    ("oracle-agreement", _suite_oracle_agreement),
    ("zeta-identities", _suite_zeta_identities),
    ("phi-coefficient-symmetry", _suite_phi_symmetry),
    ("psi-coefficient-identities", _suite_psi_identities),
    ("coefficient-assembly", _suite_coefficient_assembly),
    ("constant-assembly", _suite_constant_assembly),
    ("delange-prefix-sums", _suite_delange),
    ("dirichlet-series", _suite_dirichlet_series),
    ("expansion-end-to-end", _suite_end_to_end),
]


def run_verification(
    config: RunConfig, coeff_perturbation: float = 0.0
) -> tuple[list[dict], dict]:
    """Run every suite; returns (rows, summary).

    `coeff_perturbation` is a test hook: a nonzero value is injected into
    the coefficient-assembly identity and must make that suite fail.
    """
    rows = []
    first_failure = ""
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for name, fn in _SUITES:
        if fn is _suite_coefficient_assembly:
            status, detail = fn(config, coeff_perturbation)
        else:
            status, detail = fn(config)
        counts[status] += 1
        if status == "fail" and not first_failure:
            first_failure = name
        rows.append({"suite": name, "status": status, "detail": detail})
    summary = {
        "passed": counts["pass"],
        "failed": counts["fail"],
        "skipped": counts["skipped"],
        "first_failure": first_failure,
    }
    return rows, summary


def cmd_verify(config: RunConfig) -> int:
    """Cross-check suite; exit 2 if anything fails."""
    rows, summary = run_verification(config)
    code = _emit(config, ["suite", "status", "detail"], rows, summary)
    if code:
        return code
    for row in rows:
        print(f"[{row['status']:>7}] {row['suite']}: {row['detail']}", file=sys.stderr)
    if summary["failed"]:
        print(
            f"verify: FAILED ({summary['failed']} suites, first: "
            f"{summary['first_failure']})",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    print(
        f"verify: OK ({summary['passed']} passed, {summary['skipped']} skipped)",
        file=sys.stderr,
    )
    return EXIT_OK


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="asmpadic",
        description="p-adic valuations of the alternating-sign-matrix "
        "counting function: exact oracles, analytic expansion, figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("exact", "two-oracle valuation sweep"),
        ("coeffs", "Fourier coefficient table"),
        ("compare", "exact vs analytic decomposition"),
        ("figure", "figure data: scatter plus fluctuation curve"),
        ("verify", "run the full verification suite"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--prime", type=int, required=True)
        p.add_argument("--n-min", type=int, default=1)
        p.add_argument("--n-max", type=int, default=200)
        p.add_argument(
            "--fourier-terms", type=int, default=_DEFAULT_FOURIER_TERMS
        )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None)
    return parser


_COMMANDS = {
    "exact": cmd_exact,
    "coeffs": cmd_coeffs,
    "compare": cmd_compare,
    "figure": cmd_figure,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig(
            prime=args.prime,
            n_min=args.n_min,
            n_max=args.n_max,
            fourier_terms=args.fourier_terms,
            output_format=args.format,
            output_path=args.output,
        )
        config.validate()
        return _COMMANDS[args.command](config)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed stdout (e.g. piping into `head`); silence the
        # interpreter-shutdown flush and report an I/O condition
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
