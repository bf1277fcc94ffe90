"""HTTP service over the core package.

Run with `uvicorn tripower.service:app`.  Every numeric payload field is
a decimal string ("a" or "a/b"), so arbitrarily large exact values pass
through JSON untouched.  The service is hermetic: sequence endpoints
never touch the network (bundled fixtures only), making responses
deterministic.

Domain violations map to 400, unknown resources to 404.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel

from . import __version__
from .audit import NON_EVALUABLE, get_record
from .audit import audit as audit_record
from .audit import report_document, run_all
from .exactmath import rat_str, truncate_decimal
from .expand import expand_power, parse_strategy
from .expseries import exp_convergence_report, exp_partial
from .findiff import difference_table
from .oeis import OFFSETS, OeisError, compare, generate
from .triangles import parse_kind, triangle_rows_json

app = FastAPI(
    title="tripower",
    version=__version__,
    description=(
        "Exact integer and rational arithmetic: coefficient triangles,"
        " finite differences, power expansions, exponential partial sums,"
        " and the recorded-claim audit."
    ),
)


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str


class TriangleResponse(BaseModel):
    kind: str
    rows: int
    entries: list[list[str]]


class ExpandResponse(BaseModel):
    x: int
    n: int
    strategy: str
    value: str
    terms: list[str] | None = None


class DifftableResponse(BaseModel):
    power: int
    x_max: int
    depth: int
    columns: list[list[str]]


class AuditFailure(BaseModel):
    point: dict[str, str]
    lhs: str
    rhs: str
    residual: str


class AuditRecordReport(BaseModel):
    id: str
    status: str
    claim: str
    domain: str
    points_tested: int
    failures: list[AuditFailure]
    validity: str
    notes: str
    reason: str


class AuditCounts(BaseModel):
    records: int
    verified_claim: int
    audited_claim: int
    non_evaluable: int


class AuditResponse(BaseModel):
    report: Literal["identity-audit"]
    counts: AuditCounts
    records: list[AuditRecordReport]
    exit_status: int


class DecimalRendering(BaseModel):
    text: str
    digits: int
    direction: Literal["exact", "below", "above"]


class ExpResponse(BaseModel):
    x: int
    terms_used: int
    strategy: str
    value: str
    decimal: DecimalRendering
    tail_bound: str


class SequenceMismatch(BaseModel):
    index: int
    bfile: str
    generated: str


class SequenceCheckResponse(BaseModel):
    action: Literal["check"]
    id: str
    mode: Literal["offline"]
    terms_compared: int
    ok: bool
    first_mismatch: SequenceMismatch | None = None


class SequenceTermsResponse(BaseModel):
    action: Literal["gen"]
    id: str
    source: Literal["generated"]
    offset: int
    count: int
    values: list[str]


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/triangle/{kind}", response_model=TriangleResponse)
def triangle(kind: str, rows: int = Query(ge=0)) -> TriangleResponse:
    try:
        parsed = parse_kind(kind)
    except ValueError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    return TriangleResponse(**triangle_rows_json(parsed, rows))


@app.get("/expand", response_model=ExpandResponse, response_model_exclude_none=True)
def expand(
    x: int,
    n: int = Query(ge=0),
    strategy: str = Query(min_length=1),
    terms: bool = False,
) -> ExpandResponse:
    try:
        result = expand_power(x, n, parse_strategy(strategy))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return ExpandResponse(
        x=result.x,
        n=result.n,
        strategy=str(result.strategy),
        value=str(result.value),
        terms=[rat_str(t) for t in result.terms] if terms else None,
    )


@app.get("/difftable", response_model=DifftableResponse)
def difftable(
    n: int = Query(ge=1),
    xmax: int = Query(ge=1),
    depth: int = Query(ge=1),
) -> DifftableResponse:
    try:
        table = difference_table(n, xmax, depth)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return DifftableResponse(
        power=table.n,
        x_max=table.x_max,
        depth=table.depth,
        columns=[[str(v) for v in col] for col in table.columns],
    )


@app.get("/audit", response_model=AuditResponse)
def audit_all_records() -> AuditResponse:
    return AuditResponse(**report_document(run_all()))


@app.get("/audit/{record_id}", response_model=AuditResponse)
def audit_one(record_id: str) -> AuditResponse:
    try:
        record = get_record(record_id)
    except KeyError as exc:
        raise HTTPException(
            status_code=404, detail=f"unknown record id {record_id!r}"
        ) from exc
    if record.status == NON_EVALUABLE:
        raise HTTPException(
            status_code=400,
            detail=f"{record_id} is not evaluable: {record.reason}",
        )
    return AuditResponse(**report_document((audit_record(record_id),)))


@app.get("/exp", response_model=ExpResponse)
def exp(
    x: int = Query(ge=0),
    digits: int | None = Query(default=None, ge=1),
    terms: int | None = Query(default=None, ge=0),
    strategy: str = "telescope-geom",
) -> ExpResponse:
    if digits is not None and terms is not None:
        raise HTTPException(
            status_code=400, detail="pass at most one of digits and terms"
        )
    try:
        parsed = parse_strategy(strategy)
        shown = digits if digits is not None else 12
        n_terms = terms if terms is not None else exp_convergence_report(x, shown)
        result = exp_partial(x, n_terms, parsed)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    dec = truncate_decimal(result.value, shown)
    return ExpResponse(
        x=result.x,
        terms_used=result.terms_used,
        strategy=str(result.strategy),
        value=rat_str(result.value),
        decimal=DecimalRendering(
            text=dec.text, digits=dec.digits, direction=dec.direction
        ),
        tail_bound=rat_str(result.tail_bound),
    )


@app.get("/oeis/{sequence_id}/check", response_model=SequenceCheckResponse)
def oeis_check(
    sequence_id: str, count: int | None = Query(default=None, ge=1)
) -> SequenceCheckResponse:
    try:
        report = compare(sequence_id, count)
    except (OeisError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    mismatch = None
    if report.first_mismatch:
        idx, expected, actual = report.first_mismatch
        mismatch = SequenceMismatch(
            index=idx, bfile=str(expected), generated=str(actual)
        )
    return SequenceCheckResponse(
        action="check",
        id=report.sequence_id,
        mode="offline",
        terms_compared=report.terms_compared,
        ok=report.ok,
        first_mismatch=mismatch,
    )


@app.get("/oeis/{sequence_id}/terms", response_model=SequenceTermsResponse)
def oeis_terms(
    sequence_id: str, count: int = Query(default=50, ge=1)
) -> SequenceTermsResponse:
    try:
        values = generate(sequence_id, count)
    except (OeisError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return SequenceTermsResponse(
        action="gen",
        id=sequence_id,
        source="generated",
        offset=OFFSETS[sequence_id],
        count=len(values),
        values=[str(v) for v in values],
    )
