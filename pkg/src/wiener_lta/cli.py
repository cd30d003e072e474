"""Command-line front end: ``compute``, ``generate``, ``verify`` and ``bench``.

Exit codes: 0 ok, 1 parse/input error, 2 disconnected graph, 3 unsupported
graph class, 4 overflow risk, 5 verification mismatch, 6 size guardrail,
64 command-line usage error.
"""

from __future__ import annotations

import sys

import click

from . import bench as bench_mod
from .errors import WienerError
from .graph import (
    format_edge_list,
    make_cycle,
    make_path,
    make_star,
    parse_edge_list,
    random_tree,
    random_unicyclic,
)
from .indices import Algorithm, compute_indices
from .verify import verify as run_verify

EXIT_MISMATCH = 5
EXIT_USAGE = 64

GENERATORS = {
    "path": lambda n, seed: make_path(n),
    "star": lambda n, seed: make_star(n),
    "cycle": lambda n, seed: make_cycle(n),
    "random-tree": random_tree,
    "random-unicyclic": random_unicyclic,
}


class _Group(click.Group):
    """Keeps click's usage errors off exit code 2, which means "disconnected" here."""

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


def _fail(err: WienerError) -> None:
    click.echo(f"error: {err}", err=True)
    sys.exit(err.exit_code)


def _resolve(ctx: click.Context, name: str, value, default):
    if value is not None:
        return value
    group_value = (ctx.obj or {}).get(name)
    return default if group_value is None else group_value


@click.group(cls=_Group)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default=None,
              help="Output format for compute (default json).")
@click.option("--seed", type=int, default=None, help="Seed for random generation.")
@click.option("--algorithm", type=click.Choice([a.value for a in Algorithm]), default=None,
              help="Index algorithm for compute (default lta).")
@click.version_option(package_name="artifact")
@click.pass_context
def cli(ctx: click.Context, fmt, seed, algorithm) -> None:
    """Wiener, terminal Wiener and Wiener polarity indices of trees and unicyclic graphs."""
    ctx.obj = {"fmt": fmt, "seed": seed, "algorithm": algorithm}


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default=None)
@click.option("--algorithm", type=click.Choice([a.value for a in Algorithm]), default=None)
@click.option("--parallel-oracle", is_flag=True, help="Run BFS oracle sources in parallel.")
@click.pass_context
def compute(ctx: click.Context, path, fmt, algorithm, parallel_oracle) -> None:
    """Compute all three indices for the edge list in PATH ('-' for stdin)."""
    fmt = _resolve(ctx, "fmt", fmt, "json")
    algorithm = _resolve(ctx, "algorithm", algorithm, "lta")
    try:
        with click.open_file(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        click.echo(f"error: cannot read {path}: {e.strerror}", err=True)
        sys.exit(1)
    try:
        g = parse_edge_list(text)
        report = compute_indices(g, algorithm, parallel_oracle=parallel_oracle)
    except WienerError as e:
        _fail(e)
    click.echo(report.to_json() if fmt == "json" else report.to_text())


@cli.command()
@click.argument("kind", type=click.Choice(list(GENERATORS)))
@click.argument("n", type=int)
@click.option("--seed", type=int, default=None)
@click.pass_context
def generate(ctx: click.Context, kind, n, seed) -> None:
    """Print a graph of the given KIND and size N as an edge list."""
    seed = _resolve(ctx, "seed", seed, 0)
    try:
        g = GENERATORS[kind](n, seed)
    except WienerError as e:
        _fail(e)
    text = format_edge_list(g)
    if text:
        click.echo(text)


@cli.command()
@click.option("--n-max", type=click.IntRange(min=2), default=8, show_default=True)
@click.option("--instances", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--seed", type=int, default=None)
@click.pass_context
def verify(ctx: click.Context, n_max, instances, seed) -> None:
    """Check the linear-time indices against the BFS oracle."""
    seed = _resolve(ctx, "seed", seed, 0)
    result = run_verify(n_max, instances, seed)
    click.echo(result.summary())
    if not result.passed:
        sys.exit(EXIT_MISMATCH)


def _csv_list(value: str) -> list[str]:
    return [x.strip() for x in value.split(",") if x.strip()]


@cli.command()
@click.option("--sizes", default=",".join(map(str, bench_mod.DEFAULT_SIZES)), show_default=True)
@click.option("--algorithms", default=",".join(bench_mod.ALGORITHMS), show_default=True)
@click.option("--trials", type=click.IntRange(min=bench_mod.MIN_TRIALS), default=5,
              show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--unicyclic", is_flag=True, help="Benchmark random unicyclic graphs.")
@click.option("--out", type=click.Path(file_okay=False), required=True,
              help="Directory receiving bench.csv and bench.md.")
@click.pass_context
def bench(ctx: click.Context, sizes, algorithms, trials, seed, unicyclic, out) -> None:
    """Time SAP, FAP, FW, BFS and LTA on seeded random graphs."""
    seed = _resolve(ctx, "seed", seed, 0)
    try:
        size_list = [int(s) for s in _csv_list(sizes)]
        report = bench_mod.run_bench(
            size_list, _csv_list(algorithms), trials, seed, unicyclic=unicyclic
        )
    except ValueError as e:
        raise click.BadParameter(str(e))
    try:
        csv_path, md_path = report.write(out)
    except OSError as e:
        click.echo(f"error: cannot write report to {out}: {e.strerror}", err=True)
        sys.exit(1)
    click.echo(report.to_markdown(), nl=False)
    click.echo(f"wrote {csv_path} and {md_path}")


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
