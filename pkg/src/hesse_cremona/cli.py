"""Command line: ``hesse-cremona diagram | equation | verify | pencil | arrangement``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 equation-audit failure.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import _kernels
from .arrangement import DUAL_HESSE, GROUP_NAMES
from .diagram import DiagramEntry, build, columns_in_row
from .pencil import fibration_checks, pencil_at, report_json
from .polynomials import curve_equation, fine_profile, to_text
from .verify import run_all

SHOW_FIELDS = ("degree", "sing", "param", "cd")
EXIT_VERIFY = 1
EXIT_AUDIT = 3


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _check_entry(row: int, col: int, max_row: int | None = None) -> None:
    if row < 1:
        raise click.UsageError(f"--row must be >= 1, got {row}")
    if max_row is not None and row > max_row:
        raise click.UsageError(f"--row {row} exceeds the equation depth {max_row}")
    n = columns_in_row(row)
    if not 1 <= col <= n:
        raise click.UsageError(f"row {row} has columns 1..{n}, got --col {col}")


# ---------------------------------------------------------------- diagram rendering

def _cell_text(e: DiagramEntry, field: str) -> str:
    if field == "degree":
        return str(e.degree)
    if field == "param":
        return str(e.t)
    if field == "cd":
        return f"({e.c},{e.d})"
    d, *triples = e.fine.as_list()
    return f"[{d},{','.join('[' + ','.join(map(str, t)) + ']' for t in triples)}]"


def _cell_json(e: DiagramEntry, field: str):
    if field == "degree":
        return e.degree
    if field == "param":
        return {**e.t.to_json(), "text": str(e.t)}
    if field == "cd":
        return [e.c, e.d]
    return e.fine.as_list()


def render_table(rows: list[list[DiagramEntry]], fields: tuple[str, ...]) -> str:
    """Centred, staggered triangle; one line per diagram row."""
    cells = [[" ".join(_cell_text(e, f) for f in fields) for e in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    lines = ["  ".join(c.rjust(width) for c in row) for row in cells]
    total = max(len(line) for line in lines)
    return "\n".join(line.center(total).rstrip() for line in lines)


def render_json(rows, fields) -> str:
    out = [{"i": e.i, "j": e.j, **{f: _cell_json(e, f) for f in fields}} for row in rows for e in row]
    return _dumps(out)


def render_csv(rows, fields) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", *fields])
    for row in rows:
        for e in row:
            w.writerow([e.i, e.j, *(_cell_text(e, f) for f in fields)])
    return buf.getvalue()


# ---------------------------------------------------------------- commands

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--backend",
    type=click.Choice(["numba", "numpy"]),
    default=None,
    help="Polynomial kernel back end (default: numba unless HESSE_CREMONA_NUMBA=0).",
)
def main(backend: str | None) -> None:
    """Cremona involutions of the dual Hesse arrangement."""
    if backend:
        _kernels.set_backend(backend)


@main.command()
@click.option("--rows", type=click.IntRange(min=1), default=11, show_default=True)
@click.option(
    "--show",
    type=click.Choice(SHOW_FIELDS),
    multiple=True,
    help="Field(s) to display; repeatable (default: degree).",
)
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
def diagram(rows: int, show: tuple[str, ...], fmt: str, output: str | None) -> None:
    """Bifurcation diagram: degrees, singularities, parameters or (c, d)."""
    fields = show or ("degree",)
    d = build(rows)
    render = {"table": render_table, "json": render_json, "csv": render_csv}[fmt]
    _emit(render(d.rows, fields), output)


@main.command()
@click.option("--row", type=int, required=True)
@click.option("--col", type=int, required=True)
@click.option("--verify", "audit", is_flag=True, help="Audit degree and multiplicities against the fine data.")
@click.option("--max-row", type=click.IntRange(min=1), default=9, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
def equation(row: int, col: int, audit: bool, max_row: int, fmt: str, output: str | None) -> None:
    """Equation of the rational curve at entry (row, col)."""
    _check_entry(row, col, max_row)
    d = build(row)
    e = d.entry(row, col)
    f = curve_equation(row, col, d)
    ok = True
    audit_lines: list[str] = []
    if audit:
        prof = fine_profile(f)
        expected = {**e.fine.by_group(), "inf": (0, 0, 0)}
        ok = f.deg == e.degree and prof == expected
        audit_lines.append(f"degree {f.deg} (expected {e.degree})")
        for g in GROUP_NAMES:
            for p, got, want in zip(DUAL_HESSE.groups[g], prof[g], expected[g]):
                mark = "ok" if got == want else "MISMATCH"
                audit_lines.append(f"mult at {p.name}: {got} (expected {want}) {mark}")
        audit_lines.append("audit passed" if ok else "audit FAILED")
    if fmt == "json":
        obj = {"i": row, "j": col, "degree": f.deg, "text": to_text(f), "terms": f.to_json()}
        if audit:
            obj["audit"] = {"passed": ok, "multiplicities": {g: list(v) for g, v in fine_profile(f).items()}}
        _emit(_dumps(obj), output)
    else:
        _emit("\n".join([to_text(f), *audit_lines]), output)
    if not ok:
        sys.exit(EXIT_AUDIT)


@main.command()
@click.option("--verify-depth", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--degree-sign", type=click.Choice(["-1", "1"]), default="-1", hidden=True)
def verify(verify_depth: int, degree_sign: str) -> None:
    """Run every invariant suite up to the given diagram depth."""
    results = run_all(verify_depth, cd_sign=int(degree_sign))
    failures = 0
    for r in results:
        status = "ok" if r.passed else "FAIL"
        click.echo(f"{r.name:<12} {r.checks:>7} checks  {len(r.failures):>4} failures  {status}")
        for msg in r.failures:
            click.echo(f"    {msg}")
        failures += len(r.failures)
    total = sum(r.checks for r in results)
    if failures:
        click.echo(f"{failures} of {total} checks failed")
        sys.exit(EXIT_VERIFY)
    click.echo(f"all checks passed ({total} checks, depth {verify_depth})")


@main.command()
@click.option("--row", type=int, required=True)
@click.option("--col", type=int, required=True)
@click.option("--membership/--no-membership", default=True, help="Expand the special elements and test linear dependence.")
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
def pencil(row: int, col: int, membership: bool, output: str | None) -> None:
    """JSON report of the elliptic pencil attached to entry (row, col)."""
    _check_entry(row, col)
    P = pencil_at(row, col)
    checks = fibration_checks(P, membership=membership, strict=False)
    report = {"i": row, "j": col, **report_json(P, checks)}
    _emit(_dumps(report), output)
    if not report["all_passed"]:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
def arrangement(fmt: str, output: str | None) -> None:
    """Points, lines and incidences of the dual Hesse arrangement."""
    try:
        DUAL_HESSE.verify()
        ok = True
    except AssertionError:
        ok = False
    inc = DUAL_HESSE.incidence()
    if fmt == "json":
        obj = {**DUAL_HESSE.to_json(), "incidence": inc, "verified": ok}
        _emit(_dumps(obj), output)
    else:
        width = max(len(p.name) for p in DUAL_HESSE.points)
        out = []
        for g in GROUP_NAMES:
            for p in DUAL_HESSE.groups[g]:
                out.append(f"P3({g:<4}) {p.name:<{width}}  {' '.join(inc[p.name])}")
        out.append("")
        for name, L in DUAL_HESSE.lines.items():
            pts = [p.name for p in DUAL_HESSE.points if L(p) == 0]
            out.append(f"{name}: {to_text(_line_poly(L))} = 0  through {' '.join(pts)}")
        out.append("")
        out.append("(12_3, 9_4) verified" if ok else "incidence check FAILED")
        _emit("\n".join(out), output)
    if not ok:
        sys.exit(EXIT_VERIFY)


def _line_poly(L):
    from .polynomials import HomogPoly

    return HomogPoly.from_line(L)


if __name__ == "__main__":  # pragma: no cover
    main()
