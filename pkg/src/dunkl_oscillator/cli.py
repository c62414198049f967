"""Batch command line: spectrum tables, sampled profiles and the verification report.

Artifacts go to stdout (or --output); logs go to stderr. Exit codes: 0 on
success, 1 when verification has failures, 2 on usage or domain errors.
"""
import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .coherent_states import ClosedForm, CoherentParams, closed_series_deviation, coherent_closed, coherent_series
from .config import format_number, get_settings
from .dirac_dunkl import (
    Branch,
    Case,
    PhysParams,
    energy,
    level_number,
    reconcile_spectrum,
    spinor,
    unified_quantum_number,
)
from .errors import DomainError, DunklOscillatorError, PreconditionError
from .su11_algebra import Gauge, Sector, physical_index
from .verification import report_schema, run_verification

logger = logging.getLogger("dunkl-oscillator")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# deviation above which a closed-form variant is reported as disagreeing with the series
FLAG_THRESHOLD = 1e-6


def _value(x):
    """Artifact cell: fixed-precision text for floats, passthrough otherwise."""
    if isinstance(x, (float, np.floating)):
        return format_number(x)
    return x


def _json_value(x):
    if isinstance(x, (float, np.floating)):
        return float(format_number(x))
    return x


def render(metadata: dict, fieldnames: list, rows: list, fmt: str) -> str:
    """CSV with '#' metadata lines and a header row, or a JSON object."""
    if fmt == "json":
        payload = {
            "metadata": {k: _json_value(v) for k, v in metadata.items()},
            "columns": fieldnames,
            "rows": [{k: _json_value(row.get(k)) for k in fieldnames} for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    for key, value in metadata.items():
        buf.write(f"# {key}={_value(value)}\n")
    writer = csv.DictWriter(buf, fieldnames=fieldnames, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _value(v) for k, v in row.items()})
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)


def _branches(choice: str) -> list[Branch]:
    return [Branch.PLUS, Branch.MINUS] if choice == "both" else [Branch(choice)]


def spectrum_rows(mu: float, kappa: float, case: str, levels: int, branch: str) -> tuple[dict, list, list]:
    PhysParams(mu, kappa)
    metadata = {"mu": mu, "kappa": kappa, "case": case, "levels": levels, "branch": branch}
    rows = []
    if case == "unified":
        fields = ["case", "n", "n_eff", "E_over_mc2", "matched_case", "matched_n", "delta"]
        report = reconcile_spectrum(PhysParams(mu, kappa), levels)
        for b in _branches(branch):
            for match in report.unified:
                rows.append({
                    "case": "unified",
                    "n": match.n,
                    "n_eff": float(unified_quantum_number(match.n, mu)),
                    "E_over_mc2": b.sign * match.value,
                    "matched_case": match.matched_case.value,
                    "matched_n": match.matched_n,
                    "delta": b.sign * match.delta,
                })
        metadata["flagged"] = "yes" if report.flagged else "no"
        return metadata, fields, rows
    fields = ["case", "n", "n_eff", "E_over_mc2"]
    for b in _branches(branch):
        params = PhysParams(mu, kappa, b)
        for n in range(levels):
            if case == "A" and n == 0 and b is Branch.MINUS:
                continue
            rows.append({
                "case": case,
                "n": n,
                "n_eff": float(level_number(case, n, mu)),
                "E_over_mc2": energy(case, n, params),
            })
    return metadata, fields, rows


def wavefunction_rows(case: str, n: int, mu: float, kappa: float, rmax: float, samples: int, gauge: str,
                      branch: str = "+") -> tuple[dict, list, list]:
    state = spinor(case, n, PhysParams(mu, kappa, branch))
    gauge = Gauge(gauge)
    start = 0.0 if gauge is Gauge.WEIGHTED or mu >= 0 else rmax / samples
    r = np.linspace(start, rmax, samples)
    psi1 = np.broadcast_to(state.psi1(r, gauge), r.shape)
    psi2 = np.broadcast_to(state.psi2(r, gauge), r.shape)
    settings = get_settings()
    metadata = {
        "case": Case(case).value,
        "n": n,
        "mu": mu,
        "kappa": kappa,
        "branch": state.params.branch.value,
        "gauge": gauge.value,
        "energy": state.energy,
        "norm": format(state.norm(settings.quadrature_tol, settings.quadrature_cap), ".10f"),
        "lower_phase": "-i" if state.lower_phase == -1j else "+i",
        "lower_sign": state.lower_sign,
    }
    rows = [{"r": float(a), "psi1": float(b), "psi2": float(c)} for a, b, c in zip(r, psi1, psi2)]
    return metadata, ["r", "psi1", "psi2"], rows


def coherent_rows(k: float, zeta: complex, variant: str, rmax: float, samples: int) -> tuple[dict, list, list]:
    p = CoherentParams(zeta, k)
    start = 0.0 if k >= 0.25 else rmax / samples
    r = np.linspace(start, rmax, samples)
    if variant == "series":
        values = coherent_series(p, r)
        deviation = closed_series_deviation(p, r, ClosedForm.GENERATING)
        compared = ClosedForm.GENERATING.value
    else:
        values = coherent_closed(p, r, variant)
        deviation = closed_series_deviation(p, r, variant)
        compared = ClosedForm(variant).value
    flagged = deviation > FLAG_THRESHOLD
    if flagged:
        logger.warning(f"closed form '{compared}' deviates from the series by {deviation:.3e}")
    metadata = {
        "k": k,
        "zeta_re": zeta.real,
        "zeta_im": zeta.imag,
        "variant": variant,
        "compared_closed_form": compared,
        "max_deviation": deviation,
        "status": "flagged" if flagged else "pass",
    }
    rows = [{"r": float(a), "re": float(v.real), "im": float(v.imag)} for a, v in zip(r, np.atleast_1d(values))]
    return metadata, ["r", "re", "im"], rows


def _mu_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"--mu-list expects comma-separated numbers: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunkl-osc", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default=None, help="overrides DUNKL_OSC_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="energy levels per parity sector or the unified formula")
    spectrum.add_argument("--mu", type=float, required=True)
    spectrum.add_argument("--kappa", type=float, required=True)
    spectrum.add_argument("--case", choices=["A", "B", "unified"], default="A")
    spectrum.add_argument("--levels", type=int, default=5)
    spectrum.add_argument("--branch", choices=["+", "-", "both"], default="+")
    spectrum.add_argument("--format", choices=["csv", "json"], default="csv")
    spectrum.add_argument("--output")

    wave = sub.add_parser("wavefunction", help="sampled eigenspinor components")
    wave.add_argument("--case", choices=["A", "B"], default="A")
    wave.add_argument("--n", type=int, default=0)
    wave.add_argument("--mu", type=float, required=True)
    wave.add_argument("--kappa", type=float, default=0.5)
    wave.add_argument("--branch", choices=["+", "-"], default="+")
    wave.add_argument("--rmax", type=float, default=6.0)
    wave.add_argument("--samples", type=int, default=61)
    wave.add_argument("--gauge", choices=[g.value for g in Gauge], default=Gauge.HALF_DENSITY.value)
    wave.add_argument("--format", choices=["csv", "json"], default="csv")
    wave.add_argument("--output")

    coherent = sub.add_parser("coherent", help="sampled Perelomov coherent-state profile")
    index = coherent.add_mutually_exclusive_group(required=True)
    index.add_argument("--k", type=float)
    index.add_argument("--mu", type=float)
    coherent.add_argument("--sector", choices=[s.value for s in Sector], default=Sector.PLUS.value)
    coherent.add_argument("--zeta-re", type=float, default=0.0)
    coherent.add_argument("--zeta-im", type=float, default=0.0)
    coherent.add_argument("--variant", choices=[ClosedForm.GENERATING.value, ClosedForm.FLIPPED.value, "series"],
                          default=ClosedForm.GENERATING.value)
    coherent.add_argument("--rmax", type=float, default=6.0)
    coherent.add_argument("--samples", type=int, default=61)
    coherent.add_argument("--format", choices=["csv", "json"], default="csv")
    coherent.add_argument("--output")

    verify = sub.add_parser("verify", help="run the verification suites")
    mode = verify.add_mutually_exclusive_group()
    mode.add_argument("--quick", dest="mode", action="store_const", const="quick")
    mode.add_argument("--full", dest="mode", action="store_const", const="full")
    verify.add_argument("--mu-list", type=_mu_list, default=None)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--timing", action="store_true")
    verify.add_argument("--schema", action="store_true", help="print the report JSON schema and exit")
    verify.add_argument("--output")
    verify.set_defaults(mode="quick")

    sub.add_parser("serve", help="run the MCP server over stdio")
    return parser


def run(args: argparse.Namespace) -> int:
    if args.command == "spectrum":
        if args.levels < 1:
            raise DomainError(f"--levels must be positive, got {args.levels}")
        metadata, fields, rows = spectrum_rows(args.mu, args.kappa, args.case, args.levels, args.branch)
        _emit(render(metadata, fields, rows, args.format), args.output)
        return EXIT_OK
    if args.command == "wavefunction":
        if args.samples < 2 or not args.rmax > 0:
            raise DomainError("--samples must be at least 2 and --rmax positive")
        metadata, fields, rows = wavefunction_rows(args.case, args.n, args.mu, args.kappa, args.rmax, args.samples,
                                                   args.gauge, args.branch)
        _emit(render(metadata, fields, rows, args.format), args.output)
        return EXIT_OK
    if args.command == "coherent":
        if args.samples < 2 or not args.rmax > 0:
            raise DomainError("--samples must be at least 2 and --rmax positive")
        k = args.k if args.k is not None else physical_index(Sector(args.sector), args.mu)
        metadata, fields, rows = coherent_rows(k, complex(args.zeta_re, args.zeta_im), args.variant, args.rmax,
                                               args.samples)
        _emit(render(metadata, fields, rows, args.format), args.output)
        return EXIT_OK
    if args.command == "verify":
        if args.schema:
            _emit(json.dumps(report_schema(), indent=2) + "\n", args.output)
            return EXIT_OK
        report = run_verification(args.mode, args.mu_list, jobs=args.jobs, timing=args.timing)
        _emit(report.to_json() + "\n", args.output)
        return EXIT_OK if report.passed else EXIT_FAILED
    if args.command == "serve":
        from .server import main as serve

        serve()
        return EXIT_OK
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or get_settings().log_level).upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return run(args)
    except (DomainError, PreconditionError) as exc:
        logger.error(f"{args.command}: {exc}")
        print(f"dunkl-osc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DunklOscillatorError as exc:
        logger.error(f"{args.command} failed: {exc}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
