"""Request handlers and the FastAPI application.

The handlers are plain functions from request models to
(ReportEnvelope dict, exit_code); the HTTP routes and the CLI are both
thin clients of them.  Every payload datum carries a provenance tag:
"computed" for everything this package derives, "paper-reference-data"
for the torsion-prime lookup table.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from . import CONVENTION, __version__
from .builder import (NormalizationUnsolvable, assemble_exceptional,
                      dump_table, load_table, killing_form, so_table, sp_table,
                      su_table, verify_jacobi)
from .builder.exceptional import is_exceptional_target
from .exact import is_negative_definite, rank
from .kostant import (euler_number, multiplets, pair_from_root_indices,
                      preset_pair, spin_split_under_u)
from .models import (BuildRequest, CosetRequest, ExportRequest, KostantRequest,
                     VerifyTextRequest)
from .rootsys import (GroupId, adjoint_weight, build_root_system, fundamental_dims,
                      parse_group)
from .topol import (CosetEntry, coset_dim, group_expr_dim,
                    magic_square_entries, sphere_structure_report)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

_REFERENCE_KEYS = {"torsion_primes"}


class UsageError(ValueError):
    """Bad target/arguments; maps to exit code 1 / HTTP 422."""


def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    return x


def make_envelope(verb: str, command: dict, payload: dict) -> dict:
    payload = jsonable(payload)
    provenance = {k: ("paper-reference-data" if k in _REFERENCE_KEYS else "computed")
                  for k in payload}
    return {
        "tool_version": __version__,
        "command": {"verb": verb, **jsonable(command)},
        "convention": CONVENTION,
        "provenance": provenance,
        "payload": payload,
    }


def resolve_build_target(target: str):
    """A structure table for an exceptional name, a classical algebra, or
    the so(N)+spin experiment.  Classical names accept both spellings
    (so(9) or B4, su(5) or A4, sp(3) or C3)."""
    t = target.strip()
    if is_exceptional_target(t):
        return assemble_exceptional(t)
    try:
        gid = parse_group(t)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if gid.family in ("B", "D"):
        n = 2 * gid.rank + (1 if gid.family == "B" else 0)
        return so_table(n)
    if gid.family == "A":
        return su_table(gid.rank + 1)
    if gid.family == "C":
        return sp_table(gid.rank)
    raise UsageError(f"no structure-table builder for {target!r}")


def handle_build(req: BuildRequest) -> tuple[dict, int]:
    try:
        table = resolve_build_target(req.target)
    except NormalizationUnsolvable as e:
        raise UsageError(f"normalization unsolvable for {req.target!r}: {e}") from None
    payload: dict[str, Any] = {
        "name": table.name,
        "dim": table.dim,
        "labels": list(table.basis_labels),
        "summands": [[role, d] for role, d in table.recipe.summands] if table.recipe else None,
        "solved_coefficients": {k: v for k, v in table.coefficients} or None,
        "jacobi": None,
        "killing": None,
    }
    code = EXIT_OK
    if req.verify:
        report = verify_jacobi(table, workers=req.workers)
        payload["jacobi"] = report.as_dict()
        if report.violations:
            code = EXIT_VERIFICATION
        else:
            k = killing_form(table)
            payload["killing"] = {"rank": rank(k),
                                  "negative_definite": is_negative_definite(k)}
    # runtime knobs (worker count) are excluded so json output is
    # byte-identical across worker counts
    cmd = {"target": req.target, "verify": req.verify}
    return make_envelope("build", cmd, payload), code


def handle_verify_text(req: VerifyTextRequest) -> tuple[dict, int]:
    table = load_table(req.table_text)
    report = verify_jacobi(table, workers=req.workers)
    payload = {"name": table.name, "dim": table.dim, "jacobi": report.as_dict()}
    return make_envelope("verify", {}, payload), \
        EXIT_VERIFICATION if report.violations else EXIT_OK


def handle_export(req: ExportRequest) -> tuple[dict, int]:
    table = resolve_build_target(req.target)
    code = EXIT_OK
    jac = None
    if req.verify:
        report = verify_jacobi(table)
        jac = report.as_dict()
        if report.violations:
            code = EXIT_VERIFICATION
    payload = {"name": table.name, "dim": table.dim,
               "table_text": dump_table(table), "jacobi": jac}
    return make_envelope("export", {"target": req.target}, payload), code


def _gid(group: str) -> GroupId:
    try:
        return parse_group(group)
    except ValueError as e:
        raise UsageError(str(e)) from None


def handle_roots(group: str) -> tuple[dict, int]:
    rs = build_root_system(_gid(group))
    payload = {
        "group": str(rs.id), "rank": rs.rank, "dim": rs.dim,
        "cartan": [list(r) for r in rs.cartan],
        "root_lengths": list(rs.lengths),
        "positive_root_count": len(rs.positive_roots),
        "positive_roots": [list(r) for r in rs.positive_roots],
        "highest_root": list(rs.highest_root),
        "adjoint_weight": list(adjoint_weight(rs)),
        "coxeter_number": rs.coxeter_number,
    }
    return make_envelope("roots", {"group": group}, payload), EXIT_OK


def handle_exponents(group: str) -> tuple[dict, int]:
    rs = build_root_system(_gid(group))
    payload = {"group": str(rs.id), "exponents": list(rs.exponents),
               "degrees": list(rs.degrees), "weyl_order": rs.weyl_order,
               "coxeter_number": rs.coxeter_number}
    return make_envelope("exponents", {"group": group}, payload), EXIT_OK


def handle_dims(group: str) -> tuple[dict, int]:
    gid = _gid(group)
    payload = {"group": str(gid), "node_order": CONVENTION,
               "fundamental_dims": list(fundamental_dims(gid))}
    return make_envelope("dims", {"group": group}, payload), EXIT_OK


def handle_kostant(req: KostantRequest) -> tuple[dict, int]:
    pair = None
    if req.small:
        pair = preset_pair(req.big, req.small)
    if pair is None:
        if req.root_indices is None:
            raise UsageError(
                f"no preset for ({req.big}, {req.small}); pass root_indices")
        pair = pair_from_root_indices(_gid(req.big), req.root_indices, req.torus)
    mult = multiplets(pair, cap=req.cap)
    tangent = pair.big.dim - pair.small_dim
    payload = {
        "big": str(pair.big.id),
        "small": pair.describe_small(),
        "small_simple_roots": [list(r) for r in pair.small_simple_roots],
        "torus_factors": pair.torus,
        "weyl_order_big": pair.big.weyl_order,
        "weyl_order_small": pair.small_weyl_order,
        "chi": euler_number(pair),
        "dim_big": pair.big.dim,
        "dim_small": pair.small_dim,
        "tangent_dim": tangent,
        "entries": [{"sign": e.sign, "length": e.length, "labels": list(e.labels),
                     "dim": e.dim, "charges": list(e.charges)} for e in mult.entries],
        "signed_sum": mult.signed_sum(),
        "unsigned_sum": mult.unsigned_sum(),
    }
    cmd = {"big": req.big, "small": req.small, "root_indices": req.root_indices,
           "torus": req.torus, "cap": req.cap}
    return make_envelope("kostant", cmd, payload), EXIT_OK


def handle_spinsplit(n: int) -> tuple[dict, int]:
    comps = spin_split_under_u(n)
    payload = {"n": n, "total_dim": 1 << n,
               "components": [[p, d, s] for p, d, s in comps]}
    return make_envelope("spinsplit", {"n": n}, payload), EXIT_OK


def handle_topology(group: str) -> tuple[dict, int]:
    rep = sphere_structure_report(_gid(group))
    payload = {
        "group": str(rep.id),
        "sphere_dims": list(rep.sphere_dims),
        "poincare": list(rep.poincare),
        "torsion_primes": sorted(rep.torsion_primes),
        "capicua_diffs": list(rep.capicua_diffs),
        "capicua_palindrome": rep.capicua_palindrome,
        "fibration_notes": list(rep.fibration_notes),
    }
    return make_envelope("topology", {"group": group}, payload), EXIT_OK


def handle_coset(req: CosetRequest) -> tuple[dict, int]:
    entry = CosetEntry(req.big, req.small, req.space_name or f"{req.big}/{req.small}",
                       req.space_dim if req.space_dim is not None else -1)
    if req.space_dim is None:
        d = group_expr_dim(req.big) - group_expr_dim(req.small)
        entry = CosetEntry(entry.big, entry.small, entry.space_name, d)
    d = coset_dim(entry)
    payload = {"big": entry.big, "small": entry.small,
               "space_name": entry.space_name, "space_dim": d}
    cmd = {"big": req.big, "small": req.small, "space_dim": req.space_dim}
    return make_envelope("coset", cmd, payload), EXIT_OK


def handle_coset_table() -> tuple[dict, int]:
    rows = [{"big": e.big, "small": e.small, "space_name": e.space_name,
             "space_dim": coset_dim(e)} for e in magic_square_entries()]
    return make_envelope("coset", {"table": True}, {"entries": rows}), EXIT_OK


# --- FastAPI application ----------------------------------------------------

def create_app():
    from fastapi import FastAPI, HTTPException

    from .builder import FormatError
    from .kostant import CapExceeded, NotDivisible, NotEqualRank
    from .models import ReportEnvelope
    from .rootsys import InvalidGroupId
    from .topol import DimensionMismatch

    app = FastAPI(title="liekit", version=__version__,
                  description="Exact-arithmetic Lie algebra toolkit")

    def run(fn, *args):
        try:
            envelope, _code = fn(*args)
            return envelope
        except (UsageError, InvalidGroupId, NotEqualRank, NotDivisible, CapExceeded,
                DimensionMismatch, FormatError, NormalizationUnsolvable,
                ValueError) as e:
            raise HTTPException(status_code=422, detail=str(e)) from None

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "tool_version": __version__}

    @app.post("/v1/build", response_model=ReportEnvelope)
    def build(req: BuildRequest):
        return run(handle_build, req)

    @app.post("/v1/verify", response_model=ReportEnvelope)
    def verify(req: VerifyTextRequest):
        return run(handle_verify_text, req)

    @app.post("/v1/export", response_model=ReportEnvelope)
    def export(req: ExportRequest):
        return run(handle_export, req)

    @app.get("/v1/roots/{group}", response_model=ReportEnvelope)
    def roots(group: str):
        return run(handle_roots, group)

    @app.get("/v1/exponents/{group}", response_model=ReportEnvelope)
    def exponents(group: str):
        return run(handle_exponents, group)

    @app.get("/v1/dims/{group}", response_model=ReportEnvelope)
    def dims(group: str):
        return run(handle_dims, group)

    @app.get("/v1/topology/{group}", response_model=ReportEnvelope)
    def topology(group: str):
        return run(handle_topology, group)

    @app.get("/v1/spinsplit/{n}", response_model=ReportEnvelope)
    def spinsplit(n: int):
        return run(handle_spinsplit, n)

    @app.post("/v1/kostant", response_model=ReportEnvelope)
    def kostant(req: KostantRequest):
        return run(handle_kostant, req)

    @app.post("/v1/coset", response_model=ReportEnvelope)
    def coset(req: CosetRequest):
        return run(handle_coset, req)

    @app.get("/v1/coset-table", response_model=ReportEnvelope)
    def coset_table():
        return run(handle_coset_table)

    return app


app = create_app()
