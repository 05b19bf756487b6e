"""Live labeling sessions: persistent human-in-the-loop training state.

A session walks one human rater through K rounds of B query trajectories
(label each, then retrain), followed by the evaluation questionnaire (Likert
sets over diametric pairs, then top-choice items), and finally computes the
same metrics the batch harness reports.

Persistence is an append-only JSON-lines journal per session: every mutation
is written and fsynced *before* it is acknowledged, so reloading after a
crash reproduces the exact pre-crash state (`export_payload` bytes are
equal).  Heavy work (planning query batches, retraining) never runs inside a
mutation; mutations only record intent, and `run_pending_compute` performs
one unit of deferred work at a time, journaling each result as its own event
so a crash between units resumes cleanly.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

import numpy as np

from .evaluation import ExperimentConfig, MetricRecord, quality_score, \
    standard_error, topx_accuracy
from .lang import phrase_to_vad
from .query import QueryRoundState, build_round
from .sim import Task, Trajectory, sample_task_rng
from .stylenet import (
    LabeledDataset,
    StyleNetParams,
    TrainConfig,
    init_params,
    params_from_json_dict,
    params_to_json_dict,
    train,
)
from .trajopt import CostConfig, OptimizerConfig, VadStyleTerm, optimize_batch
from .vadspace import EmotionLexicon, EvalEmotionSet, Vad, default_lexicon, \
    eval_emotion_set

__all__ = [
    "ConflictError",
    "EvalItem",
    "LabelEntry",
    "NotFoundError",
    "Session",
    "SessionError",
    "StateError",
    "ValidationError",
    "session_config",
]

JOURNAL_NAME = "journal.jsonl"
SNAPSHOT_NAME = "snapshot.json"
CHECKPOINT_DIR = "checkpoints"

_EVAL_SALT = 991
_TRAIN_SALT = 101

STATUSES = ("awaiting_labels", "training", "evaluating", "done")


# ---------------------------------------------------------------------------
# Errors


class SessionError(Exception):
    """Base class for session protocol violations."""


class ValidationError(SessionError):
    """Malformed or incomplete input; carries missing indices if relevant."""

    def __init__(self, message: str,
                 missing_indices: Sequence[int] = ()) -> None:
        super().__init__(message)
        self.missing_indices = tuple(missing_indices)


class ConflictError(SessionError):
    """A mutation clashed with an already-recorded one (request-id mismatch)."""


class StateError(SessionError):
    """The operation is not valid in the session's current status."""


class NotFoundError(SessionError):
    """Unknown session, round, or item."""


# ---------------------------------------------------------------------------
# Config plumbing


def session_config(session_id: str, rounds: int, batch_size: int,
                   n_emotions: int, tasks_per_emotion: int,
                   seed: int = 0, **overrides: Any) -> ExperimentConfig:
    """Build the live-oracle config a labeling session runs under."""
    return ExperimentConfig(
        exp_id=session_id, method="ours", n_emotions=n_emotions,
        rounds=rounds, batch_size=batch_size,
        tasks_per_emotion=tasks_per_emotion, seeds=(seed,), oracle="live",
        **overrides)


def _require_live_config(cfg: ExperimentConfig) -> None:
    if cfg.oracle != "live":
        raise ValidationError("sessions run live-oracle configs only")
    if cfg.method != "ours":
        raise ValidationError(
            "live sessions train the single emotive-style network; the "
            "per-emotion baselines are simulated-only")
    if len(cfg.seeds) != 1:
        raise ValidationError("a session uses exactly one seed")


# ---------------------------------------------------------------------------
# Journal entries' in-memory forms


@dataclass(frozen=True, slots=True)
class LabelEntry:
    """One accepted label: the resolved VAD plus how it was given."""

    vad: Vad
    source: str  # "direct" | "language"
    text: str | None
    request_id: str

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "vad": list(self.vad.as_tuple()),
            "source": self.source,
            "text": self.text,
            "request_id": self.request_id,
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping[str, Any]) -> "LabelEntry":
        return cls(vad=Vad(*obj["vad"]), source=obj["source"],
                   text=obj["text"], request_id=obj["request_id"])


@dataclass(frozen=True, slots=True)
class EvalItem:
    """One questionnaire item.

    Likert items carry the diametric pair (the scale's two ends) and which
    end the trajectory was optimized for; choice items carry the intended
    emotion.  ``public_dict`` hides the answer key from the rater.
    """

    index: int
    kind: str  # "likert" | "choice"
    emotion: str  # optimization target (likert) / intended emotion (choice)
    side: str | None  # "A" | "B" for likert items
    pair: tuple[str, str] | None  # likert scale ends (A, B)
    task: Task
    trajectory: Trajectory

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "kind": self.kind,
            "emotion": self.emotion,
            "side": self.side,
            "pair": list(self.pair) if self.pair else None,
            "task": self.task.to_json_dict(),
            "trajectory": self.trajectory.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping[str, Any]) -> "EvalItem":
        pair = obj["pair"]
        return cls(
            index=int(obj["index"]), kind=obj["kind"], emotion=obj["emotion"],
            side=obj["side"], pair=tuple(pair) if pair else None,
            task=Task.from_json_dict(obj["task"]),
            trajectory=Trajectory.from_json_dict(obj["trajectory"]),
        )

    def public_dict(self) -> dict[str, Any]:
        """What the rater may see: never the intended emotion or side."""
        out: dict[str, Any] = {"index": self.index, "kind": self.kind,
                               "task": self.task.to_json_dict(),
                               "trajectory": self.trajectory.to_json_dict()}
        if self.kind == "likert":
            out["pair"] = list(self.pair or ())
        return out


@dataclass(frozen=True, slots=True)
class EvalAnswer:
    """One recorded questionnaire answer."""

    request_id: str
    score: int | None = None  # likert
    first: str | None = None  # choice
    second: str | None = None

    def to_json_dict(self) -> dict[str, Any]:
        return {"request_id": self.request_id, "score": self.score,
                "first": self.first, "second": self.second}

    @classmethod
    def from_json_dict(cls, obj: Mapping[str, Any]) -> "EvalAnswer":
        return cls(request_id=obj["request_id"], score=obj["score"],
                   first=obj["first"], second=obj["second"])


# ---------------------------------------------------------------------------
# The session engine


class Session:
    """Journaled state machine for one live labeling session.

    All mutating methods follow journal-before-ack: the event line is
    appended and fsynced, then applied in memory, then the call returns.
    """

    def __init__(self, directory: str | Path, config: ExperimentConfig,
                 session_id: str, _replay: bool = False) -> None:
        _require_live_config(config)
        self.directory = Path(directory)
        self.config = config
        self.session_id = session_id
        self.lexicon: EmotionLexicon = default_lexicon()
        self.emotion_set: EvalEmotionSet = eval_emotion_set(
            self.lexicon, config.n_emotions)

        self.rounds: list[QueryRoundState] = []
        self.labels: list[dict[int, LabelEntry]] = []
        self.checkpoints: list[StyleNetParams] = []  # after rounds 1..k
        self.train_requests: dict[int, str] = {}  # round -> request id
        self.eval_items: list[EvalItem] | None = None
        self.eval_answers: dict[int, EvalAnswer] = {}

        seed = config.seeds[0]
        net_ss, rounds_ss = np.random.SeedSequence(
            (seed, _TRAIN_SALT)).spawn(2)
        self._round_seeds = rounds_ss.spawn(config.rounds)
        self.initial_params: StyleNetParams = init_params(
            net_ss, hidden=config.hidden, hidden2=config.hidden2,
            head="tanh")
        eval_ss = np.random.SeedSequence((seed, _EVAL_SALT)).spawn(3)
        self._eval_task_ss, self._eval_opt_ss, self._eval_order_ss = eval_ss

        if not _replay:
            self.directory.mkdir(parents=True, exist_ok=True)
            (self.directory / CHECKPOINT_DIR).mkdir(exist_ok=True)
            if self._journal_path.exists():
                raise ValidationError(
                    f"session directory {self.directory} already has a journal")
            self._append({"event": "created", "session_id": session_id,
                          "config": config.to_json_dict()})

    # -- construction ------------------------------------------------------

    @classmethod
    def create(cls, directory: str | Path, config: ExperimentConfig,
               session_id: str) -> "Session":
        return cls(directory, config, session_id)

    @classmethod
    def load(cls, directory: str | Path) -> "Session":
        """Rebuild state by replaying the journal (crash-restart path)."""
        directory = Path(directory)
        path = directory / JOURNAL_NAME
        if not path.exists():
            raise NotFoundError(f"no session journal under {directory}")
        events = _read_journal(path)
        if not events or events[0].get("event") != "created":
            raise ValueError(f"journal {path} does not start with creation")
        created = events[0]
        config = ExperimentConfig.from_json_dict(created["config"])
        session = cls(directory, config, created["session_id"], _replay=True)
        for event in events[1:]:
            session._apply(event)
        return session

    # -- status ------------------------------------------------------------

    @property
    def status(self) -> str:
        if self.eval_items is not None:
            if len(self.eval_answers) == len(self.eval_items):
                return "done"
            return "evaluating"
        if not self.rounds:
            return "training"  # round 1 still being planned
        k = self.rounds[-1].round_index
        if len(self.checkpoints) >= k:
            return "training"  # trained; next round / questionnaire pending
        if k in self.train_requests:
            return "training"
        return "awaiting_labels"

    @property
    def current_round(self) -> QueryRoundState:
        if not self.rounds:
            raise StateError("round 1 is still being planned")
        return self.rounds[-1]

    def missing_label_indices(self, round_index: int) -> list[int]:
        labels = self.labels[round_index - 1]
        b = self.config.batch_size
        return [i for i in range(b) if i not in labels]

    def training_pairs(self) -> int:
        """Labeled (trajectory, VAD) pairs absorbed so far."""
        return sum(len(d) for d in self.labels)

    # -- journal plumbing ----------------------------------------------------

    @property
    def _journal_path(self) -> Path:
        return self.directory / JOURNAL_NAME

    def _append(self, event: dict[str, Any]) -> None:
        """Write one event durably, then fold it into memory."""
        line = json.dumps(event, sort_keys=True)
        with open(self._journal_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self._apply(event)

    def _apply(self, event: Mapping[str, Any]) -> None:
        kind = event.get("event")
        if kind == "created":
            return
        if kind == "round_planned":
            state = QueryRoundState.from_json_dict(event["state"])
            if state.round_index != len(self.rounds) + 1:
                raise ValueError("journal plans rounds out of order")
            # Labels first: a concurrent reader that sees the new round must
            # also see its (empty) label slot.
            self.labels.append({})
            self.rounds.append(state)
        elif kind == "label_set":
            k = int(event["round"])
            if k != len(self.rounds) or not self.rounds:
                raise ValueError("journal labels a round that is not current")
            self.labels[k - 1][int(event["index"])] = \
                LabelEntry.from_json_dict(event["label"])
        elif kind == "train_requested":
            self.train_requests[int(event["round"])] = event["request_id"]
        elif kind == "round_trained":
            k = int(event["round"])
            if k != len(self.checkpoints) + 1:
                raise ValueError("journal trains rounds out of order")
            self.checkpoints.append(params_from_json_dict(event["params"]))
        elif kind == "eval_planned":
            self.eval_items = [EvalItem.from_json_dict(i)
                               for i in event["items"]]
        elif kind == "eval_answered":
            idx = int(event["index"])
            self.eval_answers[idx] = EvalAnswer.from_json_dict(event["answer"])
        else:
            raise ValueError(f"unknown journal event {kind!r}")

    # -- labels --------------------------------------------------------------

    def set_label(self, round_index: int, item_index: int, request_id: str,
                  vad: Sequence[float] | None = None,
                  text: str | None = None) -> LabelEntry:
        """Record one label; idempotent on the same request id and payload."""
        if not request_id:
            raise ValidationError("labels need a client request id")
        if self.status != "awaiting_labels":
            raise StateError(f"cannot label while {self.status}")
        current = self.current_round
        if round_index != current.round_index:
            raise ValidationError(
                f"round {round_index} is not open for labels "
                f"(current round is {current.round_index})")
        if not 0 <= item_index < self.config.batch_size:
            raise NotFoundError(f"no query item {item_index}")
        entry = self._resolve_label(request_id, vad, text)

        existing = self.labels[round_index - 1].get(item_index)
        if existing is not None:
            if existing == entry:
                return existing  # idempotent retry
            if existing.request_id == request_id:
                raise ConflictError(
                    f"request {request_id} was already recorded with a "
                    "different label")
            raise ConflictError(
                f"query {item_index} is already labeled; relabeling needs "
                "the original request id")
        self._append({"event": "label_set", "round": round_index,
                      "index": item_index, "label": entry.to_json_dict()})
        return entry

    def _resolve_label(self, request_id: str, vad: Sequence[float] | None,
                       text: str | None) -> LabelEntry:
        if (vad is None) == (text is None):
            raise ValidationError("give exactly one of vad or text")
        if vad is not None:
            values = tuple(float(v) for v in vad)
            if len(values) != 3:
                raise ValidationError("vad must have three components")
            if any(not -1.0 <= v <= 1.0 for v in values):
                raise ValidationError("vad components must lie in [-1, 1]")
            return LabelEntry(vad=Vad(*values), source="direct", text=None,
                              request_id=request_id)
        lookup = phrase_to_vad(text or "", self.lexicon)
        if not lookup.found or lookup.vad is None:
            raise ValidationError(
                f"no emotion words recognized in {text!r}")
        return LabelEntry(vad=lookup.vad, source="language", text=text,
                          request_id=request_id)

    # -- training ------------------------------------------------------------

    def request_train(self, request_id: str) -> dict[str, Any]:
        """Close the current round's labeling and queue retraining."""
        if not request_id:
            raise ValidationError("train requests need a client request id")
        for k, rid in self.train_requests.items():
            if rid == request_id:
                return {"round": k, "queued": True}  # idempotent retry
        if self.status != "awaiting_labels":
            raise StateError(f"cannot train while {self.status}")
        k = self.current_round.round_index
        missing = self.missing_label_indices(k)
        if missing:
            raise ValidationError(
                f"round {k} still has {len(missing)} unlabeled queries",
                missing_indices=missing)
        self._append({"event": "train_requested", "round": k,
                      "request_id": request_id})
        return {"round": k, "queued": True}

    # -- deferred compute ------------------------------------------------------

    def pending_compute(self) -> dict[str, Any] | None:
        """Describe the next deferred unit of work, if any."""
        if not self.rounds:
            return {"kind": "plan_round", "round": 1}
        k = self.rounds[-1].round_index
        if k in self.train_requests and len(self.checkpoints) < k:
            return {"kind": "train_round", "round": k}
        if len(self.checkpoints) == k:
            if k < self.config.rounds:
                return {"kind": "plan_round", "round": k + 1}
            if self.eval_items is None:
                return {"kind": "plan_eval"}
        return None

    def run_pending_compute(self) -> dict[str, Any] | None:
        """Perform one unit of deferred work; returns what ran, or None."""
        job = self.pending_compute()
        if job is None:
            return None
        if job["kind"] == "plan_round":
            self._plan_round(job["round"])
        elif job["kind"] == "train_round":
            self._train_round(job["round"])
        else:
            self._plan_eval()
        self.write_snapshot()
        return job

    def run_all_pending(self) -> int:
        """Drain the deferred-work queue (synchronous drivers, tests)."""
        n = 0
        while self.run_pending_compute() is not None:
            n += 1
        return n

    def _current_params(self) -> StyleNetParams:
        return self.checkpoints[-1] if self.checkpoints else self.initial_params

    def _prior_label_points(self) -> list[Vad]:
        points: list[Vad] = []
        for labels in self.labels:
            points.extend(e.vad for e in labels.values())
        return points

    def _plan_round(self, k: int) -> None:
        cfg = self.config
        state = build_round(
            k, self._current_params(), cfg.batch_size,
            self._prior_label_points(), self.lexicon,
            self._round_seeds[k - 1],
            cost=CostConfig(alpha=cfg.alpha),
            opt=OptimizerConfig(iters=cfg.opt_iters,
                                restarts=cfg.opt_restarts))
        self._append({"event": "round_planned", "round": k,
                      "state": state.to_json_dict()})

    def _train_round(self, k: int) -> None:
        data = LabeledDataset()
        for round_state, labels in zip(self.rounds, self.labels):
            for i in range(self.config.batch_size):
                data.append(round_state.queries[i], labels[i].vad,
                            round_state.round_index)
        params = train(self._current_params(), data,
                       TrainConfig(epochs=self.config.train_epochs))
        self._append({"event": "round_trained", "round": k,
                      "params": params_to_json_dict(params)})
        self._write_checkpoint_file(k, params)

    def _write_checkpoint_file(self, k: int, params: StyleNetParams) -> None:
        path = self.directory / CHECKPOINT_DIR / f"round_{k}.json"
        path.write_text(json.dumps(params_to_json_dict(params)),
                        encoding="utf-8")

    def _plan_eval(self) -> None:
        """Optimize the questionnaire trajectories and freeze their order.

        Composition: for each diametric pair, one Likert set of 2·M items
        (M per end); then M choice items per emotion.  Sets stay contiguous;
        item order inside a set (and inside the choice block) is shuffled
        deterministically so the rater cannot exploit a fixed pattern.
        """
        cfg = self.config
        es = self.emotion_set
        m = cfg.tasks_per_emotion

        likert_specs: list[tuple[str, str, int]] = []
        for pair_idx, (name_a, name_b) in enumerate(es.pairs()):
            likert_specs += [(name_a, "A", pair_idx)] * m
            likert_specs += [(name_b, "B", pair_idx)] * m
        choice_specs = [name for name in es.names for _ in range(m)]

        emotions = [spec[0] for spec in likert_specs] + choice_specs
        task_rng = np.random.default_rng(self._eval_task_ss)
        tasks = [sample_task_rng(task_rng) for _ in emotions]
        targets = np.stack([es.anchor(e).as_array() for e in emotions])
        result = optimize_batch(
            tasks, VadStyleTerm(self._current_params(), targets),
            CostConfig(alpha=cfg.alpha),
            OptimizerConfig(iters=cfg.opt_iters, restarts=cfg.opt_restarts),
            seed=self._eval_opt_ss)

        order_rng = np.random.default_rng(self._eval_order_ss)
        pairs = es.pairs()
        items: list[EvalItem] = []
        set_size = 2 * m
        for pair_idx in range(len(pairs)):
            base = pair_idx * set_size
            for j in order_rng.permutation(set_size):
                spec_idx = base + int(j)
                emotion, side, p = likert_specs[spec_idx]
                items.append(EvalItem(
                    index=len(items), kind="likert", emotion=emotion,
                    side=side, pair=pairs[p], task=tasks[spec_idx],
                    trajectory=result.trajectories[spec_idx]))
        offset = len(likert_specs)
        for j in order_rng.permutation(len(choice_specs)):
            spec_idx = offset + int(j)
            items.append(EvalItem(
                index=len(items), kind="choice", emotion=choice_specs[int(j)],
                side=None, pair=None, task=tasks[spec_idx],
                trajectory=result.trajectories[spec_idx]))
        self._append({"event": "eval_planned",
                      "items": [i.to_json_dict() for i in items]})

    # -- the questionnaire -----------------------------------------------------

    def next_eval_item(self) -> EvalItem | None:
        """The first unanswered questionnaire item, or None when done."""
        if self.eval_items is None:
            raise StateError(f"no questionnaire while {self.status}")
        idx = len(self.eval_answers)
        if idx >= len(self.eval_items):
            return None
        return self.eval_items[idx]

    def answer_eval(self, index: int, request_id: str,
                    answer: Mapping[str, Any]) -> EvalAnswer:
        """Record one answer; items must be answered strictly in order."""
        if not request_id:
            raise ValidationError("answers need a client request id")
        if self.eval_items is None:
            raise StateError(f"no questionnaire while {self.status}")
        if not 0 <= index < len(self.eval_items):
            raise NotFoundError(f"no questionnaire item {index}")
        item = self.eval_items[index]
        recorded = self._parse_answer(item, request_id, answer)

        existing = self.eval_answers.get(index)
        if existing is not None:
            if existing == recorded:
                return existing  # idempotent retry
            if existing.request_id == request_id:
                raise ConflictError(
                    f"request {request_id} was already recorded with a "
                    "different answer")
            raise ConflictError(f"item {index} is already answered")
        if index != len(self.eval_answers):
            raise ValidationError(
                f"items are answered in order; next is "
                f"{len(self.eval_answers)}")
        self._append({"event": "eval_answered", "index": index,
                      "answer": recorded.to_json_dict()})
        if self.status == "done":
            self.write_snapshot()
        return recorded

    def _parse_answer(self, item: EvalItem, request_id: str,
                      answer: Mapping[str, Any]) -> EvalAnswer:
        if item.kind == "likert":
            score = answer.get("score")
            if (not isinstance(score, int) or isinstance(score, bool)
                    or not 1 <= score <= 7):
                raise ValidationError("likert answers carry an integer "
                                      "score in [1, 7]")
            return EvalAnswer(request_id=request_id, score=score)
        first, second = answer.get("first"), answer.get("second")
        names = self.emotion_set.names
        if first not in names or second not in names:
            raise ValidationError(
                f"choices must name evaluation emotions {list(names)}")
        if first == second:
            raise ValidationError("first and second choices must differ")
        return EvalAnswer(request_id=request_id, first=first, second=second)

    # -- metrics ---------------------------------------------------------------

    def metrics_record(self) -> MetricRecord:
        """Fold the questionnaire answers into one metric record."""
        if self.status != "done":
            raise StateError("metrics are available once the questionnaire "
                             "is complete")
        assert self.eval_items is not None
        responses: list[tuple[int, str]] = []
        item_q: list[float] = []
        choices: list[tuple[str, str, str]] = []
        for item in self.eval_items:
            ans = self.eval_answers[item.index]
            if item.kind == "likert":
                assert ans.score is not None and item.side is not None
                responses.append((ans.score, item.side))
                item_q.append(float(ans.score) if item.side == "B"
                              else 8.0 - float(ans.score))
            else:
                assert ans.first is not None and ans.second is not None
                choices.append((ans.first, ans.second, item.emotion))
        top1_hits = [float(c[2] == c[0]) for c in choices]
        top2_hits = [float(c[2] in c[:2]) for c in choices]
        per_emotion = {
            name: topx_accuracy([c for c in choices if c[2] == name], 1)
            for name in self.emotion_set.names
        }
        return MetricRecord(
            method="ours", n_emotions=self.config.n_emotions,
            seed=self.config.seeds[0],
            query_count=self.config.rounds * self.config.batch_size,
            quality_mean=quality_score(responses),
            quality_se=standard_error(item_q),
            top1=topx_accuracy(choices, 1), top1_se=standard_error(top1_hits),
            top2=topx_accuracy(choices, 2), top2_se=standard_error(top2_hits),
            likert_items=len(responses), choice_items=len(choices),
            per_emotion_top1=per_emotion,
        )

    # -- snapshots / export ------------------------------------------------------

    def export_payload(self) -> dict[str, Any]:
        """Canonical JSON view of the whole session (stable key order)."""
        payload: dict[str, Any] = {
            "session_id": self.session_id,
            "status": self.status,
            "config": self.config.to_json_dict(),
            "rounds": [
                {
                    "state": state.to_json_dict(),
                    "labels": {str(i): e.to_json_dict()
                               for i, e in sorted(labels.items())},
                    "train_request_id": self.train_requests.get(
                        state.round_index),
                    "trained": state.round_index <= len(self.checkpoints),
                }
                for state, labels in zip(self.rounds, self.labels)
            ],
            "checkpoints": [params_to_json_dict(p) for p in self.checkpoints],
            "eval": None,
            "metrics": None,
        }
        if self.eval_items is not None:
            payload["eval"] = {
                "items": [i.to_json_dict() for i in self.eval_items],
                "answers": {str(i): a.to_json_dict()
                            for i, a in sorted(self.eval_answers.items())},
            }
        if self.status == "done":
            record = self.metrics_record()
            payload["metrics"] = {
                "quality_mean": record.quality_mean,
                "quality_se": record.quality_se,
                "top1": record.top1,
                "top1_se": record.top1_se,
                "top2": record.top2,
                "top2_se": record.top2_se,
                "likert_items": record.likert_items,
                "choice_items": record.choice_items,
                "per_emotion_top1": dict(record.per_emotion_top1),
                "query_count": record.query_count,
            }
        return payload

    def export_bytes(self) -> bytes:
        return json.dumps(self.export_payload(), sort_keys=True,
                          indent=2).encode("utf-8")

    def write_snapshot(self) -> Path:
        path = self.directory / SNAPSHOT_NAME
        tmp = path.with_suffix(".json.tmp")
        tmp.write_bytes(self.export_bytes())
        os.replace(tmp, path)
        return path


def _read_journal(path: Path) -> list[dict[str, Any]]:
    """Parse the journal, tolerating only a torn (unacknowledged) last line."""
    events: list[dict[str, Any]] = []
    lines = path.read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines):
        if not line.strip():
            continue
        try:
            events.append(json.loads(line))
        except json.JSONDecodeError:
            if lineno == len(lines) - 1:
                break  # torn tail from a crash mid-write; never acked
            raise ValueError(
                f"corrupt journal line {lineno + 1} in {path}") from None
    return events
