"""HTTP interface over sessions, solving, and group aggregation.

Thin JSON plumbing: every number in a response is produced by the
library functions and serialized at full precision, so clients read back
exactly what the solvers computed. Library errors surface as JSON bodies
``{"error": {"code", "message"}}`` with the code taken verbatim from the
exception class:

* 400 for validation and parse problems,
* 404 for unknown session or expert ids,
* 409 for writes carrying a stale If-Match version,
* 422 when priorities are requested while judgments are still missing.
"""

from __future__ import annotations

from contextlib import asynccontextmanager

from fastapi import Body, FastAPI, Header, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .eigen import saaty_priorities
from .errors import (
    AhpError,
    ConflictError,
    IncompleteMatrix,
    NotFound,
    ValidationError,
)
from .formats import (
    consistency_to_dict,
    entries_to_nested,
    group_payload,
    matrix_from_dict,
    priorities_payload,
    se_to_dict,
)
from .group import GroupJudgment, group_lls_priorities
from .lls import consistency_report, lls_priorities
from .matrix import transitivity_violations
from .store import METHODS, DecisionSession, SessionStore

API_PREFIX = "/api/v1"

# How many of the worst transitivity violations a judgment write reports.
FEEDBACK_VIOLATION_LIMIT = 5


def _status_for(exc: AhpError) -> int:
    if isinstance(exc, NotFound):
        return 404
    if isinstance(exc, ConflictError):
        return 409
    if isinstance(exc, IncompleteMatrix):
        return 422
    return 400


def _error_response(code: str, message: str, status: int) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


def session_view(session: DecisionSession) -> dict:
    n = session.n
    return {
        "id": session.session_id,
        "n": n,
        "labels": list(session.labels),
        "settings": session.settings.to_dict(),
        "version": session.version,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
        "experts": [
            {
                "index": e,
                "name": slot.name,
                "alpha": slot.alpha,
                "judged": len(slot.judgments),
                "required": slot.required(n),
                "complete": slot.complete(n),
                "matrix": entries_to_nested(slot.partial_entries(n)),
            }
            for e, slot in enumerate(session.experts)
        ],
    }


def judgment_feedback(session: DecisionSession, e: int) -> dict:
    """Write response: updated matrix plus whatever measures are computable.

    A full matrix gets the consistency report, the eigen index, and the
    current priorities; a partial one gets progress plus the worst
    transitivity violations among the judged triples.
    """
    slot = session.expert(e)
    n = session.n
    entries = slot.partial_entries(n)
    violations = transitivity_violations(entries)[:FEEDBACK_VIOLATION_LIMIT]
    out: dict = {
        "session_id": session.session_id,
        "expert": e,
        "version": session.version,
        "matrix": entries_to_nested(entries),
        "progress": {
            "judged": len(slot.judgments),
            "required": slot.required(n),
            "complete": slot.complete(n),
        },
        "violations": [
            {"i": i, "j": j, "k": k, "relative_deviation": dev}
            for i, j, k, dev in violations
        ],
        "consistency": None,
        "mu": None,
        "w": None,
    }
    if slot.complete(n):
        mat = session.expert_matrix(e)
        pv = lls_priorities(mat)
        report = consistency_report(mat, pv, session.settings.consistency_tol)
        se = saaty_priorities(mat)
        out["consistency"] = consistency_to_dict(report)
        out["mu"] = float(se.mu)
        out["w"] = [float(x) for x in pv.w]
    return out


def _require_complete(session: DecisionSession) -> None:
    incomplete = [
        e for e, slot in enumerate(session.experts) if not slot.complete(session.n)
    ]
    if incomplete:
        raise IncompleteMatrix(
            f"experts {incomplete} still have missing judgments"
        )


def _group_judgment(session: DecisionSession) -> GroupJudgment:
    matrices = [session.expert_matrix(e) for e in range(session.m)]
    alphas = [slot.alpha for slot in session.experts]
    return GroupJudgment(matrices, alphas)


def create_app(store: SessionStore | None = None, cors_origins=("*",)) -> FastAPI:
    store = store if store is not None else SessionStore()

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        yield
        store.flush()

    app = FastAPI(title="ahpkit", lifespan=lifespan, docs_url=None, redoc_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(AhpError)
    async def _ahp_error(_request: Request, exc: AhpError) -> JSONResponse:
        return _error_response(exc.code, str(exc), _status_for(exc))

    @app.exception_handler(RequestValidationError)
    async def _request_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error_response("validation_error", str(exc.errors()), 400)

    @app.get(API_PREFIX + "/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post(API_PREFIX + "/sessions", status_code=201)
    async def create_session(body: dict = Body(...)) -> dict:
        unknown = set(body) - {"labels", "experts", "settings"}
        if unknown:
            raise ValidationError(f"unknown fields: {sorted(unknown)}")
        session = store.create_session(
            labels=body.get("labels"),
            experts=body.get("experts"),
            settings=body.get("settings"),
        )
        return session_view(session)

    @app.get(API_PREFIX + "/sessions/{session_id}")
    async def get_session(session_id: str) -> dict:
        return session_view(store.get_session(session_id))

    @app.put(API_PREFIX + "/sessions/{session_id}/experts/{e}/judgments")
    async def put_judgment(
        session_id: str,
        e: int,
        body: dict = Body(...),
        if_match: str | None = Header(default=None),
    ) -> dict:
        unknown = set(body) - {"i", "j", "value"}
        if unknown:
            raise ValidationError(f"unknown fields: {sorted(unknown)}")
        for key in ("i", "j", "value"):
            if key not in body:
                raise ValidationError(f"missing field {key!r}")
        i, j = body["i"], body["j"]
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise ValidationError("i and j must be integers")
        value = body["value"]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError("value must be a number")
        expected_version = None
        if if_match is not None:
            try:
                expected_version = int(if_match.strip().strip('"'))
            except ValueError:
                raise ValidationError(f"If-Match must be a version number, got {if_match!r}") from None
        session = store.update_judgment(
            session_id, e, i, j, float(value), expected_version=expected_version
        )
        return judgment_feedback(session, e)

    @app.get(API_PREFIX + "/sessions/{session_id}/priorities")
    async def session_priorities(
        session_id: str, method: str | None = Query(default=None)
    ) -> dict:
        session = store.get_session(session_id)
        method = method or session.settings.method
        if method not in METHODS:
            raise ValidationError(f"method must be one of {METHODS}, got {method!r}")
        _require_complete(session)
        experts = []
        for e, slot in enumerate(session.experts):
            mat = session.expert_matrix(e)
            entry: dict = {"index": e, "name": slot.name, "alpha": slot.alpha}
            if method in ("lls", "both"):
                pv = lls_priorities(mat)
                report = consistency_report(mat, pv, session.settings.consistency_tol)
                entry["u"] = [float(x) for x in pv.u]
                entry["w"] = [float(x) for x in pv.w]
                entry["ranking"] = [int(x) for x in pv.ranking]
                entry["consistency"] = consistency_to_dict(report)
            if method in ("se", "both"):
                entry["se"] = se_to_dict(saaty_priorities(mat))
            experts.append(entry)
        return {
            "session_id": session.session_id,
            "method": method,
            "labels": list(session.labels),
            "experts": experts,
        }

    @app.get(API_PREFIX + "/sessions/{session_id}/group")
    async def session_group(session_id: str) -> dict:
        session = store.get_session(session_id)
        _require_complete(session)
        g = _group_judgment(session)
        payload = group_payload(g, group_lls_priorities(g))
        payload["session_id"] = session.session_id
        for entry, slot in zip(payload["experts"], session.experts):
            entry["name"] = slot.name
        return payload

    @app.post(API_PREFIX + "/solve")
    async def solve(body: dict = Body(...)) -> dict:
        mat = matrix_from_dict(body, source="<request>")
        pv = lls_priorities(mat)
        report = consistency_report(mat, pv)
        se = saaty_priorities(mat)
        return priorities_payload(mat, pv, report, se)

    @app.post(API_PREFIX + "/group")
    async def group(body: dict = Body(...)) -> dict:
        unknown = set(body) - {"matrices", "alphas"}
        if unknown:
            raise ValidationError(f"unknown fields: {sorted(unknown)}")
        raw_matrices = body.get("matrices")
        if not isinstance(raw_matrices, list) or not raw_matrices:
            raise ValidationError('"matrices" must be a non-empty list')
        alphas = body.get("alphas")
        if not isinstance(alphas, list):
            raise ValidationError('"alphas" must be a list of weights')
        matrices = [
            matrix_from_dict(obj, source=f"<matrices[{k}]>")
            for k, obj in enumerate(raw_matrices)
        ]
        g = GroupJudgment(matrices, alphas)
        return group_payload(g, group_lls_priorities(g))

    return app
