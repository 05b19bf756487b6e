"""HTTP service: the JSON API the labeling studio drives.

Concurrency model: the service hosts many sessions; within one session all
mutations (labels, train requests, questionnaire answers) are serialized by a
per-session lock, while reads go lock-free against the engine's append-only
state (every piece is immutable once attached, so a reader always sees a
consistent prefix).  Long-running work — planning a query batch, retraining —
never runs inside a request: mutations only record intent, and a single
background worker drains one session's pending compute at a time while the
session sits in ``training`` status (which itself blocks conflicting
mutations).  Clients poll ``GET /sessions/{id}`` until the status moves on.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from concurrent.futures import Future, ThreadPoolExecutor
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .lang import phrase_to_vad
from .render import DEFAULT_FPS, frames_to_json_dict, render_frames
from .sessions import (
    ConflictError,
    NotFoundError,
    Session,
    SessionError,
    StateError,
    ValidationError,
    session_config,
)
from .vadspace import chance_levels, default_lexicon

__all__ = ["create_app", "DATA_DIR_ENV", "STATIC_DIR_ENV"]

DATA_DIR_ENV = "EMOVAC_DATA_DIR"
STATIC_DIR_ENV = "EMOVAC_STATIC_DIR"
SESSIONS_SUBDIR = "sessions"


# ---------------------------------------------------------------------------
# Request bodies


class CreateSessionBody(BaseModel):
    rounds: int = Field(ge=1)
    batch_size: int = Field(ge=1)
    n_emotions: int
    tasks_per_emotion: int = Field(ge=1)
    seed: int = 0
    session_id: str | None = None
    alpha: float | None = None
    opt_iters: int | None = None
    opt_restarts: int | None = None
    train_epochs: int | None = None


class LabelBody(BaseModel):
    round: int
    index: int
    request_id: str
    vad: list[float] | None = None
    text: str | None = None


class TrainBody(BaseModel):
    request_id: str


class EvalAnswerBody(BaseModel):
    index: int
    request_id: str
    score: int | None = None
    first: str | None = None
    second: str | None = None


class VadBody(BaseModel):
    text: str


# ---------------------------------------------------------------------------
# Session registry


class _Registry:
    """Loaded sessions plus their locks and in-flight compute jobs."""

    def __init__(self, data_dir: Path) -> None:
        self.data_dir = data_dir
        self.sessions_dir = data_dir / SESSIONS_SUBDIR
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._jobs: dict[str, Future] = {}
        self._job_errors: dict[str, str] = {}
        self._registry_lock = threading.Lock()
        self._worker = ThreadPoolExecutor(max_workers=1,
                                          thread_name_prefix="emovac-compute")

    def create(self, body: CreateSessionBody) -> Session:
        session_id = body.session_id or f"s-{uuid.uuid4().hex[:12]}"
        overrides = {k: v for k, v in (
            ("alpha", body.alpha), ("opt_iters", body.opt_iters),
            ("opt_restarts", body.opt_restarts),
            ("train_epochs", body.train_epochs)) if v is not None}
        config = session_config(
            session_id, rounds=body.rounds, batch_size=body.batch_size,
            n_emotions=body.n_emotions,
            tasks_per_emotion=body.tasks_per_emotion, seed=body.seed,
            **overrides)
        with self._registry_lock:
            if session_id in self._sessions or \
                    (self.sessions_dir / session_id).exists():
                raise ConflictError(f"session {session_id} already exists")
            session = Session.create(self.sessions_dir / session_id, config,
                                     session_id)
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        self.kick(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
            if session is None:
                session = Session.load(self.sessions_dir / session_id)
                self._sessions[session_id] = session
                self._locks[session_id] = threading.Lock()
                resume = session.pending_compute() is not None
            else:
                resume = False
        if resume:
            self.kick(session)
        return session

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks[session_id]

    def kick(self, session: Session) -> None:
        """Ensure a worker job is draining this session's pending compute."""
        with self._registry_lock:
            job = self._jobs.get(session.session_id)
            if job is not None and not job.done():
                return
            if session.pending_compute() is None:
                return
            self._job_errors.pop(session.session_id, None)
            self._jobs[session.session_id] = self._worker.submit(
                self._drain, session)

    def _drain(self, session: Session) -> None:
        try:
            session.run_all_pending()
        except Exception as exc:  # noqa: BLE001 - surfaced via status polling
            self._job_errors[session.session_id] = \
                f"{type(exc).__name__}: {exc}"

    def job_error(self, session_id: str) -> str | None:
        return self._job_errors.get(session_id)

    def shutdown(self) -> None:
        self._worker.shutdown(wait=True)


# ---------------------------------------------------------------------------
# Response shaping


def _frames_payload(trajectory) -> dict[str, Any]:
    return frames_to_json_dict(render_frames(trajectory, DEFAULT_FPS),
                               DEFAULT_FPS)


def _status_payload(registry: _Registry, session: Session) -> dict[str, Any]:
    cfg = session.config
    payload: dict[str, Any] = {
        "session_id": session.session_id,
        "status": session.status,
        "rounds_total": cfg.rounds,
        "batch_size": cfg.batch_size,
        "n_emotions": cfg.n_emotions,
        "tasks_per_emotion": cfg.tasks_per_emotion,
        "rounds_planned": len(session.rounds),
        "rounds_trained": len(session.checkpoints),
        "labels_done": session.training_pairs(),
        "pending": session.pending_compute(),
        "eval_total": len(session.eval_items or []),
        "eval_answered": len(session.eval_answers),
    }
    error = registry.job_error(session.session_id)
    if error is not None:
        payload["job_error"] = error
    return payload


def _queries_payload(session: Session) -> dict[str, Any]:
    round_state = session.current_round
    labels = session.labels[round_state.round_index - 1]
    queries = []
    for i in range(round_state.batch_size):
        entry: dict[str, Any] = {
            "index": i,
            "labeled": i in labels,
            "task": round_state.tasks[i].to_json_dict(),
            "trajectory": round_state.queries[i].to_json_dict(),
            "frames": _frames_payload(round_state.queries[i]),
        }
        queries.append(entry)
    return {"round": round_state.round_index,
            "batch_size": round_state.batch_size,
            "queries": queries}


def _metrics_payload(session: Session) -> dict[str, Any]:
    record = session.metrics_record()
    n = session.config.n_emotions
    return {
        "session_id": session.session_id,
        "query_count": record.query_count,
        "quality_mean": record.quality_mean,
        "quality_se": record.quality_se,
        "top1": record.top1,
        "top1_se": record.top1_se,
        "top2": record.top2,
        "top2_se": record.top2_se,
        "likert_items": record.likert_items,
        "choice_items": record.choice_items,
        "per_emotion_top1": dict(record.per_emotion_top1),
        "chance": chance_levels(n),
    }


# ---------------------------------------------------------------------------
# App factory


def create_app(data_dir: str | Path | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    """Build the service around a data directory (env-var fallback)."""
    if data_dir is None:
        data_dir = os.environ.get(DATA_DIR_ENV, "./emovac-data")
    if static_dir is None:
        static_dir = os.environ.get(STATIC_DIR_ENV, "")
    registry = _Registry(Path(data_dir))
    app = FastAPI(title="emovac labeling service", version="1")
    app.state.registry = registry
    lexicon = default_lexicon()

    @app.exception_handler(SessionError)
    async def _session_error(request: Request, exc: SessionError):
        status = 500
        body: dict[str, Any] = {"detail": str(exc)}
        if isinstance(exc, ValidationError):
            status = 422
            if exc.missing_indices:
                body["missing_indices"] = list(exc.missing_indices)
        elif isinstance(exc, ConflictError):
            status = 409
        elif isinstance(exc, StateError):
            status = 409
        elif isinstance(exc, NotFoundError):
            status = 404
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(FileNotFoundError)
    async def _missing(request: Request, exc: FileNotFoundError):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    def _get(session_id: str) -> Session:
        try:
            return registry.get(session_id)
        except (NotFoundError, FileNotFoundError):
            raise NotFoundError(f"unknown session {session_id!r}") from None

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict[str, Any]:
        try:
            session = registry.create(body)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        return _status_payload(registry, session)

    @app.get("/sessions/{session_id}")
    def session_status(session_id: str) -> dict[str, Any]:
        return _status_payload(registry, _get(session_id))

    @app.get("/sessions/{session_id}/queries")
    def session_queries(session_id: str) -> dict[str, Any]:
        return _queries_payload(_get(session_id))

    @app.post("/sessions/{session_id}/labels")
    def post_label(session_id: str, body: LabelBody) -> dict[str, Any]:
        session = _get(session_id)
        with registry.lock(session_id):
            entry = session.set_label(
                body.round, body.index, body.request_id,
                vad=body.vad, text=body.text)
        return {"round": body.round, "index": body.index,
                "request_id": entry.request_id,
                "vad": list(entry.vad.as_tuple()),
                "source": entry.source, "text": entry.text}

    @app.post("/sessions/{session_id}/train", status_code=202)
    def post_train(session_id: str, body: TrainBody) -> dict[str, Any]:
        session = _get(session_id)
        with registry.lock(session_id):
            ack = session.request_train(body.request_id)
        registry.kick(session)
        return {**ack, "status": session.status}

    @app.get("/sessions/{session_id}/eval/next")
    def eval_next(session_id: str) -> dict[str, Any]:
        session = _get(session_id)
        item = session.next_eval_item()
        if item is None:
            return {"done": True, "remaining": 0}
        total = len(session.eval_items or [])
        payload = item.public_dict()
        payload["frames"] = _frames_payload(item.trajectory)
        if item.kind == "choice":
            payload["options"] = list(session.emotion_set.names)
        return {"done": False, "remaining": total - item.index,
                "total": total, "item": payload}

    @app.post("/sessions/{session_id}/eval/answer")
    def eval_answer(session_id: str, body: EvalAnswerBody) -> dict[str, Any]:
        session = _get(session_id)
        answer: dict[str, Any] = {}
        if body.score is not None:
            answer["score"] = body.score
        if body.first is not None or body.second is not None:
            answer["first"] = body.first
            answer["second"] = body.second
        with registry.lock(session_id):
            recorded = session.answer_eval(body.index, body.request_id,
                                           answer)
        return {"index": body.index, "recorded": recorded.to_json_dict(),
                "status": session.status}

    @app.get("/sessions/{session_id}/metrics")
    def session_metrics(session_id: str) -> dict[str, Any]:
        return _metrics_payload(_get(session_id))

    @app.post("/vad")
    def vad(body: VadBody) -> dict[str, Any]:
        lookup = phrase_to_vad(body.text, lexicon)
        return {
            "text": body.text,
            "found": lookup.found,
            "vad": list(lookup.vad.as_tuple()) if lookup.vad else None,
            "matched": list(lookup.matched),
            "provider": lookup.provider,
        }

    static_path = Path(static_dir) if static_dir else None
    if static_path and static_path.is_dir():
        app.mount("/", StaticFiles(directory=static_path, html=True),
                  name="studio")

    return app


def api_schemas_dir() -> Path:
    """Repository-relative location of the frozen endpoint schemas."""
    return Path(__file__).resolve().parents[2] / "docs" / "api" / "v1"


def load_api_schema(name: str) -> dict[str, Any]:
    path = api_schemas_dir() / f"{name}.json"
    return json.loads(path.read_text(encoding="utf-8"))
