"""Command-line interface.

Exit codes: 0 = not obstructed / success, 1 = usage or domain error,
2 = obstructed, 3 = cross-validation mismatch between the two spectrum
constructions.  Structured reports are byte-stable: keys are sorted and
every rational is serialized as "num/den".
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

import click

from .core import CurveType, CuspConfiguration, PuiseuxCusp
from .dedekind import dedekind_sum, rademacher_sum, verify_limits
from .enumeration import (
    DEFAULT_CANDIDATE_CAP,
    CandidateCapExceededError,
    enumerate_configurations,
    run_pipeline,
)
from .hf import d_invariant, hf_check
from .semigroups import curve_r_function
from .spectra import (
    semicontinuity_check,
    spectrum_at_infinity_derived,
    spectrum_at_infinity_table,
)

SCHEMA_VERSION = "1"
CAP_ENV_VAR = "CUSPIDAL_CANDIDATE_CAP"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OBSTRUCTED = 2
EXIT_MISMATCH = 3


def _fr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _report(command: str, inputs: Dict, results: Dict, witnesses: List[Dict]) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "witnesses": witnesses,
    }


def _emit_json(report: Dict) -> None:
    click.echo(json.dumps(report, sort_keys=True, indent=2))


def _emit_csv(rows: Sequence[Dict]) -> None:
    fields: List[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _parse_cusps(specs: Sequence[str]) -> Tuple[PuiseuxCusp, ...]:
    cusps = []
    for spec in specs:
        try:
            r_text, s_text = spec.split(":")
            cusps.append(PuiseuxCusp(int(r_text), int(s_text)))
        except ValueError as exc:
            raise click.ClickException(f"bad cusp '{spec}': {exc}") from exc
    return tuple(cusps)


def _curve(a: int, b: int, e: int) -> CurveType:
    try:
        return CurveType(a, b, e)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


def _config_for(curve: CurveType, cusps: Tuple[PuiseuxCusp, ...]) -> CuspConfiguration:
    config = CuspConfiguration(cusps)
    if not config.is_genus_compatible(curve):
        raise click.ClickException(
            f"genus mismatch: expected sum(mu/2) = g = {curve.g}, "
            f"got {config.total_delta}"
        )
    return config


@click.group()
def cli() -> None:
    """Obstruction checks for rational cuspidal curves in ruled surfaces."""


@cli.command("check")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--e", "e", type=int, default=0, show_default=True)
@click.option("--cusp", "cusps", multiple=True, help="Cusp as r:s, repeatable.")
@click.option("--only", type=click.Choice(["hf", "spectrum"]), default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", "as_csv", is_flag=True)
@click.pass_context
def cmd_check(ctx, a, b, e, cusps, only, as_json, as_csv) -> None:
    """Decide whether a prescribed cusp configuration is obstructed."""
    curve = _curve(a, b, e)
    config = _config_for(curve, _parse_cusps(cusps))

    witnesses: List[Dict] = []
    results: Dict = {"g": curve.g, "total_delta": config.total_delta}
    if only in (None, "hf"):
        hf_report = hf_check(curve, config)
        results["hf"] = hf_report.verdict
        for wit in hf_report.witnesses:
            witnesses.append(
                {
                    "check": "hf",
                    "m": wit.m,
                    "s1": wit.s1,
                    "s2": wit.s2,
                    "r_value": wit.r_value,
                    "p_value": wit.p_value,
                }
            )
    if only in (None, "spectrum"):
        sp_report = semicontinuity_check(curve, config)
        results["spectrum"] = sp_report.verdict
        for wit in sp_report.witnesses:
            witnesses.append(
                {
                    "check": "spectrum",
                    "x": _fr(wit.x),
                    "cusp_inside": wit.cusp_inside,
                    "infinity_inside": wit.infinity_inside,
                    "cusp_outside": wit.cusp_outside,
                    "infinity_outside": wit.infinity_outside,
                }
            )
    obstructed = bool(witnesses)
    results["verdict"] = "obstructed" if obstructed else "survives"

    report = _report(
        "check",
        {
            "a": a,
            "b": b,
            "e": e,
            "cusps": [f"{c.r}:{c.s}" for c in config],
            "only": only or "all",
        },
        results,
        witnesses,
    )
    if as_json:
        _emit_json(report)
    elif as_csv:
        _emit_csv(witnesses)
    else:
        click.echo(f"curve {curve}, cusps {config}: {results['verdict']}")
        for wit in witnesses:
            if wit["check"] == "hf":
                click.echo(
                    f"  hf witness: m={wit['m']} (m+g={wit['m'] + curve.g}), "
                    f"presentation (s1,s2)=({wit['s1']},{wit['s2']}), "
                    f"R={wit['r_value']} < P={wit['p_value']}"
                )
            else:
                click.echo(
                    f"  spectrum witness: x={wit['x']}, "
                    f"inside {wit['cusp_inside']} vs {wit['infinity_inside']}, "
                    f"outside {wit['cusp_outside']} vs {wit['infinity_outside']}"
                )
    ctx.exit(EXIT_OBSTRUCTED if obstructed else EXIT_OK)


def _candidate_rows(curve: CurveType, verdicts) -> List[Dict]:
    rows = []
    for verdict in verdicts:
        rows.append(
            {
                "cusps": " ".join(f"{c.r}:{c.s}" for c in verdict.configuration),
                "genus_ok": verdict.genus_ok,
                "multiplicity_ok": verdict.multiplicity_ok,
                "hf": verdict.hf.verdict if verdict.hf else "skipped",
                "spectrum": verdict.spectrum.verdict if verdict.spectrum else "skipped",
                "survives": verdict.survives,
            }
        )
    return rows


@cli.command("enumerate")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--e", "e", type=int, default=0, show_default=True)
@click.option("--max-cusps", type=int, default=1, show_default=True)
@click.option("--cap", type=int, default=None, help="Candidate cap override.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", "as_csv", is_flag=True)
@click.pass_context
def cmd_enumerate(ctx, a, b, e, max_cusps, cap, as_json, as_csv) -> None:
    """List all genus-compatible configurations with per-filter verdicts."""
    curve = _curve(a, b, e)
    if cap is None:
        cap = int(os.environ.get(CAP_ENV_VAR, DEFAULT_CANDIDATE_CAP))
    try:
        configs = enumerate_configurations(curve, max_cusps, cap=cap)
    except (CandidateCapExceededError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    verdicts = run_pipeline(curve, configs)
    rows = _candidate_rows(curve, verdicts)
    report = _report(
        "enumerate",
        {"a": a, "b": b, "e": e, "max_cusps": max_cusps, "cap": cap},
        {"g": curve.g, "count": len(rows)},
        rows,
    )
    if as_json:
        _emit_json(report)
    elif as_csv:
        _emit_csv(rows)
    else:
        click.echo(f"curve {curve}: {len(rows)} genus-compatible configuration(s)")
        for row in rows:
            status = "survives" if row["survives"] else "obstructed"
            click.echo(
                f"  [{row['cusps']}] multiplicity={row['multiplicity_ok']} "
                f"hf={row['hf']} spectrum={row['spectrum']} -> {status}"
            )
    ctx.exit(EXIT_OK)


@cli.command("spectrum")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--e", "e", type=int, default=0, show_default=True)
@click.option(
    "--method",
    type=click.Choice(["table", "derived", "both"]),
    default="table",
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", "as_csv", is_flag=True)
@click.pass_context
def cmd_spectrum(ctx, a, b, e, method, as_json, as_csv) -> None:
    """Print the spectrum at infinity as sorted 'value multiplicity' lines."""
    curve = _curve(a, b, e)
    table = spectrum_at_infinity_table(curve) if method in ("table", "both") else None
    derived = (
        spectrum_at_infinity_derived(curve) if method in ("derived", "both") else None
    )
    mismatch = method == "both" and table != derived
    spectrum = table if table is not None else derived
    rows = [
        {"value": _fr(value), "multiplicity": mult}
        for value, mult in spectrum.entries()
    ]
    results: Dict = {"method": method, "total": spectrum.total, "entries": rows}
    if method == "both":
        results["methods_agree"] = not mismatch
    report = _report("spectrum", {"a": a, "b": b, "e": e}, results, [])
    if as_json:
        _emit_json(report)
    elif as_csv:
        _emit_csv(rows)
    else:
        for row in rows:
            click.echo(f"{row['value']} {row['multiplicity']}")
        if method == "both":
            click.echo(f"methods agree: {not mismatch}")
    if mismatch:
        click.echo("mismatch between table and derived constructions:", err=True)
        for value in sorted(set(table.values()) | set(derived.values())):
            if table.mult(value) != derived.mult(value):
                click.echo(
                    f"  {_fr(value)}: table {table.mult(value)} "
                    f"!= derived {derived.mult(value)}",
                    err=True,
                )
        ctx.exit(EXIT_MISMATCH)
    ctx.exit(EXIT_OK)


@cli.group("dedekind")
def cmd_dedekind() -> None:
    """Sawtooth sums: two- and three-term reciprocity families."""


@cmd_dedekind.command("s")
@click.argument("p", type=int)
@click.argument("q", type=int)
def cmd_dedekind_s(p, q) -> None:
    """Print s(p, q) as num/den."""
    try:
        click.echo(_fr(dedekind_sum(p, q)))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@cmd_dedekind.command("d")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("r", type=int)
def cmd_dedekind_d(p, q, r) -> None:
    """Print D(p, q, r) as num/den."""
    try:
        click.echo(_fr(rademacher_sum(p, q, r)))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc


@cmd_dedekind.command("limits")
@click.option("--b", "b", type=int, required=True)
@click.option("--max-w", type=int, required=True)
@click.option("--tol", type=str, default="1/200", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def cmd_dedekind_limits(ctx, b, max_w, tol, as_json) -> None:
    """Evaluate the three limit statements along the proof subsequence."""
    try:
        report = verify_limits(b, max_w, Fraction(tol))
    except (ValueError, ZeroDivisionError) as exc:
        raise click.ClickException(str(exc)) from exc
    entries = [
        {
            "name": entry.name,
            "w": entry.w,
            "value": _fr(entry.value),
            "limit": _fr(entry.limit),
            "deviation": _fr(entry.deviation),
            "within_tol": entry.deviation <= report.tol,
        }
        for entry in report.entries
    ]
    doc = _report(
        "dedekind limits",
        {"b": b, "max_w": max_w, "tol": _fr(report.tol)},
        {"all_within_tol": report.all_within_tol, "entries": entries},
        [],
    )
    if as_json:
        _emit_json(doc)
    else:
        for entry in entries:
            mark = "ok" if entry["within_tol"] else "EXCEEDS"
            click.echo(
                f"{entry['name']} at w={entry['w']}: value {entry['value']}, "
                f"limit {entry['limit']}, deviation {entry['deviation']} [{mark}]"
            )
    ctx.exit(EXIT_OK if report.all_within_tol else EXIT_OBSTRUCTED)


@cli.command("dinv")
@click.option("--a", "a", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--e", "e", type=int, default=0, show_default=True)
@click.option("--cusp", "cusps", multiple=True)
@click.option("--m", "m", type=int, default=None)
@click.option("--all-m", "all_m", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def cmd_dinv(ctx, a, b, e, cusps, m, all_m, as_json) -> None:
    """Exact correction terms for one m or the whole range [-d/2, d/2)."""
    if (m is None) == (not all_m):
        raise click.ClickException("provide exactly one of --m or --all-m")
    curve = _curve(a, b, e)
    config = _config_for(curve, _parse_cusps(cusps))
    r_function = curve_r_function(curve, config)
    d = curve.d
    ms = range(-(d // 2), (d + 1) // 2) if all_m else [m]
    try:
        values = [
            {"m": mm, "d_invariant": _fr(d_invariant(curve, config, mm, r_function))}
            for mm in ms
        ]
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    report = _report(
        "dinv",
        {"a": a, "b": b, "e": e, "cusps": [f"{c.r}:{c.s}" for c in config]},
        {"values": values},
        [],
    )
    if as_json:
        _emit_json(report)
    else:
        for row in values:
            click.echo(f"m={row['m']}: {row['d_invariant']}")
    ctx.exit(EXIT_OK)


def _repro_scenarios() -> List[Tuple[str, Dict]]:
    """The bundled reference scenarios, as (name, report) pairs."""
    scenarios: List[Tuple[str, Dict]] = []

    def check_scenario(name, a, b, e, cusps):
        curve = CurveType(a, b, e)
        config = CuspConfiguration(tuple(PuiseuxCusp(r, s) for r, s in cusps))
        hf_report = hf_check(curve, config)
        sp_report = semicontinuity_check(curve, config)
        scenarios.append(
            (
                name,
                {
                    "hf": hf_report.verdict,
                    "hf_witnesses": [
                        [w.m, w.s1, w.s2, w.r_value, w.p_value]
                        for w in hf_report.witnesses
                    ],
                    "spectrum": sp_report.verdict,
                    "spectrum_witnesses": [
                        [
                            _fr(w.x),
                            w.cusp_inside,
                            w.infinity_inside,
                            w.cusp_outside,
                            w.infinity_outside,
                        ]
                        for w in sp_report.witnesses
                    ],
                },
            )
        )

    check_scenario("check_6_6_0_cusp_2_51", 6, 6, 0, [(2, 51)])
    check_scenario("check_6_6_0_cusp_3_26", 6, 6, 0, [(3, 26)])
    check_scenario("check_6_6_0_cusp_6_11", 6, 6, 0, [(6, 11)])
    check_scenario("check_4_4_2_cusp_3_22", 4, 4, 2, [(3, 22)])

    for a, b, e in ((6, 4, 0), (6, 6, 0)):
        spectrum = spectrum_at_infinity_table(CurveType(a, b, e))
        scenarios.append(
            (
                f"spectrum_{a}_{b}_{e}",
                {
                    "total": spectrum.total,
                    "entries": [[_fr(v), m] for v, m in spectrum.entries()],
                },
            )
        )

    curve = CurveType(6, 6, 0)
    config = CuspConfiguration((PuiseuxCusp(6, 11),))
    r_function = curve_r_function(curve, config)
    scenarios.append(
        (
            "dinv_6_6_0_cusp_6_11_all_m",
            {
                "values": [
                    [mm, _fr(d_invariant(curve, config, mm, r_function))]
                    for mm in range(-36, 36)
                ]
            },
        )
    )
    return scenarios


def _golden_path():
    return resources.files("cuspidal") / "golden"


@cli.command("repro")
@click.option(
    "--update", is_flag=True, help="Rewrite the golden files from current output."
)
@click.pass_context
def cmd_repro(ctx, update) -> None:
    """Re-run the bundled reference scenarios and diff against golden files."""
    scenarios = _repro_scenarios()
    golden_dir = _golden_path()
    if update:
        base = os.path.dirname(os.path.abspath(__file__))
        os.makedirs(os.path.join(base, "golden"), exist_ok=True)
        for name, payload in scenarios:
            path = os.path.join(base, "golden", f"{name}.json")
            with open(path, "w") as handle:
                json.dump(payload, handle, sort_keys=True, indent=2)
                handle.write("\n")
        click.echo(f"wrote {len(scenarios)} golden files")
        ctx.exit(EXIT_OK)
    failures = 0
    for name, payload in scenarios:
        resource = golden_dir / f"{name}.json"
        try:
            expected = json.loads(resource.read_text())
        except FileNotFoundError:
            click.echo(f"{name}: MISSING golden file")
            failures += 1
            continue
        if expected == payload:
            click.echo(f"{name}: ok")
        else:
            click.echo(f"{name}: MISMATCH")
            failures += 1
    ctx.exit(EXIT_OK if failures == 0 else EXIT_ERROR)


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Entry point with the exit-code contract described in the module docstring."""
    try:
        # With standalone_mode off, click hands ctx.exit codes back as the
        # return value instead of raising SystemExit.
        code = cli.main(args=argv, standalone_mode=False)
        sys.exit(code if isinstance(code, int) else EXIT_OK)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_ERROR)
    except click.Abort:
        sys.exit(EXIT_ERROR)


if __name__ == "__main__":
    main()
