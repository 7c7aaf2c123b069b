"""Command-line front end.

Usage:
    eulerpascal numbers --kind bernoulli --count 12
    eulerpascal matrix --family harmonic_pascal --size 5 --invert --format csv
    eulerpascal verify --identity all --max-n 32 --lambda 1 --lambda -3/7

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 matrix cannot be inverted.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from .exact_arith import format_rational, parse_rational
from .identities import ALL_IDS, DEFAULT_LAMBDAS, IdentityId, verify_all
from .matrices import FamilyKind, MatrixFamily, SingularMatrixError, TriMatrix, build, invert
from .sequences import NUMBER_BUILDERS, SequenceKind

EXIT_FAILURE = 1
EXIT_SINGULAR = 3

FORMATS = click.Choice(["plain", "json", "csv"])


class RationalParam(click.ParamType):
    name = "p/q"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalParam()


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2)


def _csv_lines(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


@click.group()
def cli():
    """Euler/Bernoulli numbers, modified Pascal matrices and identity checks."""


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in SequenceKind]), required=True)
@click.option("--count", type=click.IntRange(min=0), required=True,
              help="Highest index to print.")
@click.option("--format", "fmt", type=FORMATS, default="plain", show_default=True)
def numbers(kind, count, fmt):
    """Print a number sequence for indices 0..COUNT."""
    table = NUMBER_BUILDERS[SequenceKind(kind)](count)
    values = [format_rational(v) for v in table]
    if fmt == "json":
        click.echo(_dump_json({"kind": kind, "count": count, "values": values}))
    elif fmt == "csv":
        click.echo(_csv_lines([n, v] for n, v in enumerate(values)))
    else:
        click.echo("\n".join(f"{n} {v}" for n, v in enumerate(values)))


@cli.command()
@click.option("--family", type=click.Choice([k.value for k in FamilyKind]))
@click.option("--lambda", "lam", type=RATIONAL, default="1", show_default=True)
@click.option("--size", type=click.IntRange(min=1))
@click.option("--input", "input_path", type=click.File("r"),
              help="Read a matrix in JSON form instead of building a family.")
@click.option("--invert/--no-invert", "do_invert", default=False)
@click.option("--format", "fmt", type=FORMATS, default="plain", show_default=True)
def matrix(family, lam, size, input_path, do_invert, fmt):
    """Build (or load) a lower-triangular matrix and optionally invert it."""
    if input_path is not None:
        if family is not None:
            raise click.UsageError("--input and --family are mutually exclusive")
        try:
            m = TriMatrix.from_json(json.load(input_path))
        except (ValueError, KeyError, TypeError) as exc:
            raise click.UsageError(f"bad matrix file: {exc}")
        source = m.family
    else:
        if family is None or size is None:
            raise click.UsageError("--family and --size are required without --input")
        source = MatrixFamily(FamilyKind(family), lam)
        m = build(source, size)

    if do_invert:
        try:
            m = invert(m)
        except SingularMatrixError as exc:
            click.echo(f"error: cannot invert: {exc}", err=True)
            sys.exit(EXIT_SINGULAR)

    if fmt == "json":
        doc = m.to_json()
        doc["family"] = source.name if source is not None else None
        doc["lambda"] = format_rational(source.lam) if source is not None else None
        doc["inverted"] = do_invert
        click.echo(_dump_json(doc))
    elif fmt == "csv":
        click.echo(m.to_csv())
    else:
        click.echo("\n".join(" ".join(format_rational(v) for v in row) for row in m.rows))


@cli.command()
@click.option("--identity", "identity", default="all", show_default=True,
              help="Identity tag, or 'all'.")
@click.option("--max-n", type=click.IntRange(min=0), default=32, show_default=True)
@click.option("--lambda", "lams", type=RATIONAL, multiple=True,
              help="Repeatable; defaults to 1, -1, 2, 1/2, -3/7.")
@click.option("--format", "fmt", type=FORMATS, default="plain", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes for the matrix checks.")
def verify(identity, max_n, lams, fmt, jobs):
    """Verify identities; exit 1 if any fails."""
    if identity.lower() == "all":
        tags = ALL_IDS
    else:
        try:
            tags = (IdentityId.from_name(identity),)
        except ValueError:
            choices = ", ".join(t.value for t in ALL_IDS)
            raise click.BadParameter(
                f"{identity!r}; expected 'all' or one of {choices}",
                param_hint="'--identity'",
            )
    lambdas = list(lams) if lams else list(DEFAULT_LAMBDAS)
    reports = verify_all(max_n, lambdas, tags, jobs=jobs)
    ok = all(r.passed for r in reports)

    if fmt == "json":
        click.echo(_dump_json({
            "max_n": max_n,
            "lambdas": [format_rational(lam) for lam in lambdas],
            "passed": ok,
            "reports": [r.to_json() for r in reports],
        }))
    elif fmt == "csv":
        rows = [["id", "lambda", "max_index", "passed", "where", "lhs", "rhs"]]
        for r in reports:
            ce = r.counterexample
            rows.append([
                r.id.value,
                format_rational(r.lam) if r.lam is not None else "",
                r.max_index,
                "true" if r.passed else "false",
                ";".join(f"{k}={v}" for k, v in ce.where.items()) if ce else "",
                format_rational(ce.lhs) if ce else "",
                format_rational(ce.rhs) if ce else "",
            ])
        click.echo(_csv_lines(rows))
    else:
        click.echo("\n".join(r.describe() for r in reports))
    sys.exit(0 if ok else EXIT_FAILURE)


def main():
    cli()


if __name__ == "__main__":
    main()
