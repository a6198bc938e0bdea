"""Command-line interface: `qident verify ...`, `qident coeffs`, `qident list`."""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import appell, overpartitions, partitions, verify
from ._backend import BACKEND


def _emit_reports(ctx, reports):
    fmt = ctx.obj["format"]
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        click.echo(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    elif fmt == "csv":
        raise click.UsageError("csv format applies to `coeffs` only")
    else:
        for r in reports:
            click.echo(r.render_text())
    if not all(r.passed for r in reports):
        ctx.exit(1)


@click.group()
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text",
              help="Output format (csv applies to coeffs tables only).")
@click.option("--jobs", type=int, default=1, help="Worker processes for verify all.")
@click.option("--seed", type=int, default=None,
              help="Reserved; no randomized behavior in this version.")
@click.pass_context
def main(ctx, fmt, jobs, seed):
    """Mechanical verification of a family of partition and overpartition identities."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    ctx.obj["jobs"] = jobs


@main.group("verify")
@click.pass_context
def verify_group(ctx):
    """Run an identity verifier."""


@verify_group.command("overpartition")
@click.option("--k", type=int, required=True)
@click.option("--n-max", type=int, required=True)
@click.option("--m-max", type=int, default=None)
@click.pass_context
def verify_overpartition_cmd(ctx, k, n_max, m_max):
    _emit_reports(ctx, [verify.verify_overpartition(k, n_max, m_max)])


@verify_group.command("corollary")
@click.option("--k", type=int, required=True)
@click.option("--i", type=int, required=True)
@click.option("--n-max", type=int, default=200)
@click.option("--enum-limit", type=int, default=25)
@click.pass_context
def verify_corollary_cmd(ctx, k, i, n_max, enum_limit):
    _emit_reports(ctx, [verify.verify_corollary(k, i, n_max, enum_limit)])


@verify_group.command("andrews")
@click.option("--k", type=int, required=True)
@click.option("--n-max", type=int, default=200)
@click.option("--enum-limit", type=int, default=25)
@click.pass_context
def verify_andrews_cmd(ctx, k, n_max, enum_limit):
    _emit_reports(ctx, [verify.verify_andrews(k, n_max, enum_limit)])


@verify_group.command("dual")
@click.option("--k", type=int, required=True)
@click.option("--n-max", type=int, default=200)
@click.option("--enum-limit", type=int, default=25)
@click.pass_context
def verify_dual_cmd(ctx, k, n_max, enum_limit):
    _emit_reports(ctx, [verify.verify_dual(k, n_max, enum_limit)])


@verify_group.command("schur")
@click.option("--n-max", type=int, default=40)
@click.pass_context
def verify_schur_cmd(ctx, n_max):
    _emit_reports(ctx, [verify.verify_schur(n_max)])


@verify_group.command("machinery")
@click.option("--k", type=int, required=True)
@click.option("--q-order", type=int, default=60)
@click.option("--j-max", type=int, default=None)
@click.pass_context
def verify_machinery_cmd(ctx, k, q_order, j_max):
    _emit_reports(ctx, [verify.verify_machinery(k, q_order, j_max)])


@verify_group.command("all")
@click.option("--k-max", type=int, default=5)
@click.pass_context
def verify_all_cmd(ctx, k_max):
    _emit_reports(ctx, verify.verify_all(k_max, jobs=ctx.obj["jobs"]))


@main.command("golden-n10")
@click.pass_context
def golden_cmd(ctx):
    """Reproduce the worked n = 10 example."""
    _emit_reports(ctx, [verify.golden_example_n10()])


@main.command("coeffs")
@click.option("--side", type=click.Choice(["product", "sum", "overpartition-product"]),
              required=True)
@click.option("--k", type=int, required=True)
@click.option("--i", type=int, default=0)
@click.option("--n-max", type=int, default=30)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default=None)
@click.pass_context
def coeffs_cmd(ctx, side, k, i, n_max, fmt):
    """Print a coefficient table for one side of an identity."""
    fmt = fmt or ctx.obj["format"]
    if side == "overpartition-product":
        series = appell.theorem_product(k, n_max)
        rows = [
            {"m": m, "n": n, "coefficient": series.coefficient(m, n)}
            for m in range(series.a_order + 1)
            for n in range(n_max + 1)
            if series.coefficient(m, n)
        ]
    elif side == "product":
        series = appell.congruence_product_series(k, i, n_max)
        rows = [{"n": n, "coefficient": series.coefficient(n)} for n in range(n_max + 1)]
    else:  # sum side: enumeration counts
        if n_max > verify.ENUM_HARD_LIMIT:
            raise click.UsageError(f"sum-side enumeration refused beyond n={verify.ENUM_HARD_LIMIT}")
        rows = [{"n": n, "coefficient": partitions.count_C(n, k, i)} for n in range(n_max + 1)]
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    else:
        for row in rows:
            click.echo(" ".join(f"{k_}={v}" for k_, v in row.items()))


@main.command("list")
@click.option("--side", type=click.Choice(["B", "C", "D"]), required=True)
@click.option("--k", type=int, required=True)
@click.option("--i", type=int, default=0)
@click.option("--n", type=int, required=True)
@click.pass_context
def list_cmd(ctx, side, k, i, n):
    """Print the witness objects counted on one side at a single n."""
    if n > verify.ENUM_HARD_LIMIT:
        raise click.UsageError(f"enumeration refused beyond n={verify.ENUM_HARD_LIMIT}")
    if side == "B":
        items = [partitions.format_partition(p) for p in partitions.b_witnesses(n, k, i)]
    elif side == "C":
        items = [partitions.format_partition(p) for p in partitions.c_witnesses(n, k, i)]
    else:
        items = [
            str(o)
            for o in overpartitions.enumerate_overpartitions(n)
            if overpartitions.is_Dk_admissible(o, k)
        ]
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(items, indent=2))
    else:
        for item in items:
            click.echo(item)
        click.echo(f"total: {len(items)}")


@main.command("backend")
def backend_cmd():
    """Show which convolution kernel backend is active."""
    click.echo(BACKEND)


if __name__ == "__main__":
    main()
