"""Command-line surface: a thin client over the service handlers.

Reports go to stdout in a deterministic serialization (json output is
byte-identical across runs and worker counts); diagnostics go to stderr.
Exit codes: 0 success, 2 verification failure (Jacobi violations), 1
usage or internal error.  The default worker count comes from
LIEKIT_WORKERS (flag overrides; 1 when unset).
"""

from __future__ import annotations

import json
import os
import sys

import click

from .builder import FormatError, NormalizationUnsolvable
from .kostant import CapExceeded, NotDivisible, NotEqualRank
from .models import (BuildRequest, CosetRequest, ExportRequest, KostantRequest,
                     VerifyTextRequest)
from .rootsys import InvalidGroupId
from .service import (EXIT_USAGE, UsageError, handle_build, handle_coset,
                      handle_coset_table, handle_dims, handle_export,
                      handle_exponents, handle_kostant, handle_roots,
                      handle_spinsplit, handle_topology, handle_verify_text)
from .topol import DimensionMismatch

WORKERS_ENV = "LIEKIT_WORKERS"

_USAGE_ERRORS = (UsageError, InvalidGroupId, NotEqualRank, NotDivisible,
                 CapExceeded, DimensionMismatch, FormatError,
                 NormalizationUnsolvable, ValueError)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _emit(envelope: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "tsv":
        for k in sorted(envelope["payload"]):
            v = envelope["payload"][k]
            sys.stdout.write(f"{k}\t{json.dumps(v, sort_keys=True)}\n")
    else:
        for k in sorted(envelope["payload"]):
            sys.stdout.write(f"{k}: {envelope['payload'][k]}\n")


def _run(fn, fmt, *args):
    try:
        envelope, code = fn(*args)
    except _USAGE_ERRORS as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    _emit(envelope, fmt)
    sys.exit(code)


fmt_option = click.option("--format", "fmt", type=click.Choice(["json", "tsv", "text"]),
                          default="json", show_default=True)
workers_option = click.option("--workers", type=int, default=None,
                              help=f"parallel Jacobi workers (default ${WORKERS_ENV} or 1)")


@click.group()
def main():
    """Exact-arithmetic Lie algebra toolkit."""


@main.command()
@click.argument("target")
@click.option("--verify/--no-verify", default=True, show_default=True)
@workers_option
@fmt_option
def build(target, verify, workers, fmt):
    """Build a structure-constant table (G2..E8, so(n), su(n), sp(n), or
    the experiment so(N)+spin) and verify it."""
    req = BuildRequest(target=target, verify=verify, workers=workers or _default_workers())
    _run(handle_build, fmt, req)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@workers_option
@fmt_option
def verify(file, workers, fmt):
    """Re-verify a lie-structure v1 file."""
    with open(file, "r", encoding="utf-8") as fh:
        text = fh.read()
    req = VerifyTextRequest(table_text=text, workers=workers or _default_workers())
    _run(handle_verify_text, fmt, req)


@main.command()
@click.argument("group")
@fmt_option
def roots(group, fmt):
    """Positive roots, Cartan matrix and related data."""
    _run(handle_roots, fmt, group)


@main.command()
@click.argument("group")
@fmt_option
def exponents(group, fmt):
    """Exponents, degrees, Weyl order, Coxeter number."""
    _run(handle_exponents, fmt, group)


@main.command()
@click.argument("group")
@fmt_option
def dims(group, fmt):
    """Dimensions of the fundamental (primitive) irreps."""
    _run(handle_dims, fmt, group)


@main.command()
@click.argument("big")
@click.argument("small", required=False)
@click.option("--roots", "root_indices", default=None,
              help="comma-separated 0-based positive-root indices for H")
@click.option("--torus", type=int, default=0, show_default=True)
@click.option("--cap", type=int, default=5_000_000, show_default=True,
              help="Weyl orbit enumeration cap")
@fmt_option
def kostant(big, small, root_indices, torus, cap, fmt):
    """Euler number and signed multiplet for an equal-rank pair.

    Presets: F4 B4 | SU(5) U(4) | Sp(3) Sp(1)xSp(2)."""
    idx = [int(x) for x in root_indices.split(",")] if root_indices else None
    req = KostantRequest(big=big, small=small, root_indices=idx, torus=torus, cap=cap)
    _run(handle_kostant, fmt, req)


@main.command()
@click.argument("n", type=int)
@fmt_option
def spinsplit(n, fmt):
    """The 2^n spin module of Spin(2n) under U(n): graded p-forms."""
    _run(handle_spinsplit, fmt, n)


@main.command()
@click.argument("group")
@fmt_option
def topology(group, fmt):
    """Odd-sphere structure, Poincare polynomial, torsion reference."""
    _run(handle_topology, fmt, group)


@main.command()
@click.argument("big", required=False)
@click.argument("small", required=False)
@click.option("--name", "space_name", default="")
@click.option("--dim", "space_dim", type=int, default=None,
              help="declared dimension to cross-check")
@fmt_option
def coset(big, small, space_name, space_dim, fmt):
    """Coset dimension bookkeeping; with no arguments, prints the
    built-in projective-plane table."""
    if big is None and small is None:
        _run(handle_coset_table, fmt)
    if big is None or small is None:
        click.echo("error: need both BIG and SMALL (or neither)", err=True)
        sys.exit(EXIT_USAGE)
    req = CosetRequest(big=big, small=small, space_name=space_name, space_dim=space_dim)
    _run(handle_coset, fmt, req)


@main.command()
@click.argument("target")
@click.argument("file", type=click.Path(dir_okay=False, writable=True))
@click.option("--verify/--no-verify", default=False, show_default=True)
@fmt_option
def export(target, file, verify, fmt):
    """Write a structure table to FILE in lie-structure v1 format."""
    req = ExportRequest(target=target, verify=verify)
    try:
        envelope, code = handle_export(req)
    except _USAGE_ERRORS as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    with open(file, "w", encoding="utf-8") as fh:
        fh.write(envelope["payload"]["table_text"])
    envelope["payload"]["table_text"] = f"written to {file}"
    _emit(envelope, fmt)
    sys.exit(code)


@main.command("import")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@workers_option
@fmt_option
def import_(file, workers, fmt):
    """Read a lie-structure v1 file and re-verify it (alias for verify)."""
    with open(file, "r", encoding="utf-8") as fh:
        text = fh.read()
    req = VerifyTextRequest(table_text=text, workers=workers or _default_workers())
    _run(handle_verify_text, fmt, req)


if __name__ == "__main__":
    main()
