"""HTTP-level tests: endpoint behavior plus golden-schema validation."""

from __future__ import annotations

import json
import time
from pathlib import Path

import pytest
from fastapi.testclient import TestClient
from jsonschema import Draft202012Validator
from referencing import Registry, Resource
from referencing.jsonschema import DRAFT202012

from emovac.lang import phrase_to_vad
from emovac.service import api_schemas_dir, create_app
from emovac.sessions import Session
from emovac.vadspace import default_lexicon

FAST = dict(alpha=5.0, opt_iters=12, opt_restarts=1, train_epochs=10)


# ---------------------------------------------------------------------------
# Golden schema machinery


def _schema_registry() -> Registry:
    resources = []
    for path in sorted(api_schemas_dir().glob("*.json")):
        doc = json.loads(path.read_text(encoding="utf-8"))
        resources.append((doc["$id"], Resource(contents=doc,
                                               specification=DRAFT202012)))
    return Registry().with_resources(resources)


_REGISTRY = _schema_registry()


def check_schema(payload, ref: str) -> None:
    """Validate a live response against one frozen schema fragment."""
    validator = Draft202012Validator({"$ref": ref}, registry=_REGISTRY)
    errors = sorted(validator.iter_errors(payload), key=str)
    assert not errors, f"{ref} violations: " + "; ".join(
        e.message for e in errors[:5])


def test_golden_schema_files_exist_and_parse():
    names = {p.name for p in api_schemas_dir().glob("*.json")}
    assert {"common.json", "session_status.json", "queries.json",
            "label.json", "train.json", "eval.json", "metrics.json",
            "vad.json"} <= names
    for path in api_schemas_dir().glob("*.json"):
        Draft202012Validator.check_schema(
            json.loads(path.read_text(encoding="utf-8")))


# ---------------------------------------------------------------------------
# Fixtures


@pytest.fixture()
def client(tmp_path):
    app = create_app(tmp_path)
    with TestClient(app) as c:
        yield c
    app.state.registry.shutdown()


def new_session(client, *, rounds=1, batch_size=2, n_emotions=2,
                tasks_per_emotion=1, seed=0, session_id=None, **extra):
    body = {"rounds": rounds, "batch_size": batch_size,
            "n_emotions": n_emotions, "tasks_per_emotion": tasks_per_emotion,
            "seed": seed, **FAST, **extra}
    if session_id is not None:
        body["session_id"] = session_id
    resp = client.post("/sessions", json=body)
    assert resp.status_code == 201, resp.text
    check_schema(resp.json(), "emovac/v1/session_status")
    return resp.json()["session_id"]


def wait_for(client, session_id, statuses, timeout=120.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        payload = client.get(f"/sessions/{session_id}").json()
        if payload.get("job_error"):
            raise AssertionError(f"worker failed: {payload['job_error']}")
        if payload["status"] in statuses:
            return payload
        time.sleep(0.02)
    raise TimeoutError(f"session never reached {statuses}")


def label_all(client, session_id, queries=None):
    if queries is None:
        queries = client.get(f"/sessions/{session_id}/queries").json()
    k = queries["round"]
    for q in queries["queries"]:
        if q["labeled"]:
            continue
        resp = client.post(
            f"/sessions/{session_id}/labels",
            json={"round": k, "index": q["index"],
                  "request_id": f"r{k}-{q['index']}",
                  "vad": [0.2, -0.1, 0.3]})
        assert resp.status_code == 200, resp.text


def run_to_eval(client, session_id):
    status = wait_for(client, session_id, {"awaiting_labels"})
    for k in range(1, status["rounds_total"] + 1):
        label_all(client, session_id)
        resp = client.post(f"/sessions/{session_id}/train",
                           json={"request_id": f"train-{k}"})
        assert resp.status_code == 202, resp.text
        wait_for(client, session_id, {"awaiting_labels", "evaluating"})
    return wait_for(client, session_id, {"evaluating"})


def answer_until_done(client, session_id):
    while True:
        nxt = client.get(f"/sessions/{session_id}/eval/next").json()
        check_schema(nxt, "emovac/v1/eval#/definitions/next_response")
        if nxt["done"]:
            return
        item = nxt["item"]
        body = {"index": item["index"], "request_id": f"ans-{item['index']}"}
        if item["kind"] == "likert":
            body["score"] = 4
        else:
            body["first"], body["second"] = item["options"][:2]
        resp = client.post(f"/sessions/{session_id}/eval/answer", json=body)
        assert resp.status_code == 200, resp.text
        check_schema(resp.json(), "emovac/v1/eval#/definitions/answer_response")


# ---------------------------------------------------------------------------
# Creation, status, queries


def test_create_and_fetch_queries(client):
    sid = new_session(client, batch_size=3)
    status = wait_for(client, sid, {"awaiting_labels"})
    check_schema(status, "emovac/v1/session_status")
    assert status["rounds_planned"] == 1

    queries = client.get(f"/sessions/{sid}/queries").json()
    check_schema(queries, "emovac/v1/queries")
    assert queries["round"] == 1
    assert len(queries["queries"]) == 3
    frames = queries["queries"][0]["frames"]
    assert frames["fps"] == 30.0
    assert frames["duration"] > 0
    assert not any(q["labeled"] for q in queries["queries"])


def test_queries_before_planning_finishes_are_a_conflict(client):
    # Deliberately heavy planning so the worker is still busy when we ask.
    sid = new_session(client, batch_size=2, opt_iters=3000, opt_restarts=3)
    resp = client.get(f"/sessions/{sid}/queries")
    if resp.status_code == 200:  # worker may already have finished
        return
    assert resp.status_code == 409
    assert "planned" in resp.json()["detail"]


def test_unknown_session_is_404(client):
    assert client.get("/sessions/nope").status_code == 404
    assert client.get("/sessions/nope/queries").status_code == 404
    resp = client.post("/sessions/nope/labels",
                       json={"round": 1, "index": 0, "request_id": "x",
                             "vad": [0, 0, 0]})
    assert resp.status_code == 404


def test_duplicate_session_id_conflicts(client):
    new_session(client, session_id="dup")
    resp = client.post("/sessions", json={
        "rounds": 1, "batch_size": 2, "n_emotions": 2,
        "tasks_per_emotion": 1, "session_id": "dup"})
    assert resp.status_code == 409


# ---------------------------------------------------------------------------
# Labels


def test_label_roundtrip_and_conflicts(client):
    sid = new_session(client)
    wait_for(client, sid, {"awaiting_labels"})
    body = {"round": 1, "index": 0, "request_id": "rid-1",
            "vad": [0.5, -0.25, 1.0]}
    check_schema(body, "emovac/v1/label#/definitions/request")
    resp = client.post(f"/sessions/{sid}/labels", json=body)
    assert resp.status_code == 200
    payload = resp.json()
    check_schema(payload, "emovac/v1/label#/definitions/response")
    assert payload["vad"] == [0.5, -0.25, 1.0]
    assert payload["source"] == "direct"

    again = client.post(f"/sessions/{sid}/labels", json=body)
    assert again.status_code == 200 and again.json() == payload

    conflict = client.post(f"/sessions/{sid}/labels", json={
        **body, "request_id": "rid-2", "vad": [0.0, 0.0, 0.0]})
    assert conflict.status_code == 409

    queries = client.get(f"/sessions/{sid}/queries").json()
    assert queries["queries"][0]["labeled"] is True


def test_text_label_resolves_and_flags_language_source(client):
    sid = new_session(client)
    wait_for(client, sid, {"awaiting_labels"})
    resp = client.post(f"/sessions/{sid}/labels", json={
        "round": 1, "index": 0, "request_id": "rid-t", "text": "furious"})
    assert resp.status_code == 200
    payload = resp.json()
    check_schema(payload, "emovac/v1/label#/definitions/response")
    expected = phrase_to_vad("furious", default_lexicon())
    assert payload["source"] == "language"
    assert payload["text"] == "furious"
    assert payload["vad"] == pytest.approx(list(expected.vad.as_tuple()))

    miss = client.post(f"/sessions/{sid}/labels", json={
        "round": 1, "index": 1, "request_id": "rid-m", "text": "zzzqqq"})
    assert miss.status_code == 422


def test_label_validation_errors(client):
    sid = new_session(client)
    wait_for(client, sid, {"awaiting_labels"})
    base = {"round": 1, "index": 0, "request_id": "rid"}
    for bad in ({"vad": [2.0, 0.0, 0.0]}, {"vad": [0.0, 0.0]},
                {}, {"vad": [0.0, 0.0, 0.0], "text": "joy"}):
        resp = client.post(f"/sessions/{sid}/labels", json={**base, **bad})
        assert resp.status_code == 422, bad


# ---------------------------------------------------------------------------
# Training round-trips


def test_train_rejects_incomplete_rounds_with_missing_indices(client):
    sid = new_session(client, batch_size=3)
    wait_for(client, sid, {"awaiting_labels"})
    client.post(f"/sessions/{sid}/labels",
                json={"round": 1, "index": 1, "request_id": "only",
                      "vad": [0, 0, 0]})
    resp = client.post(f"/sessions/{sid}/train", json={"request_id": "t1"})
    assert resp.status_code == 422
    payload = resp.json()
    check_schema(payload, "emovac/v1/train#/definitions/incomplete_error")
    assert payload["missing_indices"] == [0, 2]


def test_label_train_advance_to_round_two(client):
    sid = new_session(client, rounds=2, batch_size=2)
    wait_for(client, sid, {"awaiting_labels"})
    label_all(client, sid)
    resp = client.post(f"/sessions/{sid}/train", json={"request_id": "t1"})
    assert resp.status_code == 202
    check_schema(resp.json(), "emovac/v1/train#/definitions/response")
    assert resp.json()["status"] == "training"

    # Idempotent retry while the worker runs; fresh ids conflict.
    retry = client.post(f"/sessions/{sid}/train", json={"request_id": "t1"})
    assert retry.status_code == 202
    status = wait_for(client, sid, {"awaiting_labels"})
    assert status["rounds_planned"] == 2
    assert status["rounds_trained"] == 1
    assert status["labels_done"] == 2
    queries = client.get(f"/sessions/{sid}/queries").json()
    assert queries["round"] == 2
    assert not any(q["labeled"] for q in queries["queries"])


# ---------------------------------------------------------------------------
# The questionnaire over HTTP


def test_full_session_flow_and_metrics(client):
    sid = new_session(client, rounds=1, batch_size=2, n_emotions=2,
                      tasks_per_emotion=1)
    status = run_to_eval(client, sid)
    assert status["eval_total"] == 4  # one likert set of 2 plus 2 choices

    nxt = client.get(f"/sessions/{sid}/eval/next").json()
    item = nxt["item"]
    assert "emotion" not in item and "side" not in item
    if item["kind"] == "likert":
        assert sorted(item["pair"]) == ["joy", "sadness"]

    # Out-of-order and malformed answers are rejected.
    out = client.post(f"/sessions/{sid}/eval/answer",
                      json={"index": 3, "request_id": "x", "score": 4})
    assert out.status_code == 422
    bad = client.post(f"/sessions/{sid}/eval/answer",
                      json={"index": item["index"], "request_id": "x",
                            "score": 9})
    assert bad.status_code == 422

    answer_until_done(client, sid)
    done = client.get(f"/sessions/{sid}").json()
    assert done["status"] == "done"

    metrics = client.get(f"/sessions/{sid}/metrics")
    assert metrics.status_code == 200
    payload = metrics.json()
    check_schema(payload, "emovac/v1/metrics")
    assert payload["query_count"] == 2
    assert payload["chance"] == {"quality": 4.0, "top1": 0.5, "top2": 1.0}


def test_metrics_before_done_conflict(client):
    sid = new_session(client)
    wait_for(client, sid, {"awaiting_labels"})
    assert client.get(f"/sessions/{sid}/metrics").status_code == 409
    assert client.get(f"/sessions/{sid}/eval/next").status_code == 409


def test_eval_answers_never_mutate_training_data(client, tmp_path):
    sid = new_session(client, rounds=1, batch_size=2)
    run_to_eval(client, sid)
    before = client.get(f"/sessions/{sid}").json()
    answer_until_done(client, sid)
    after = client.get(f"/sessions/{sid}").json()
    assert after["labels_done"] == before["labels_done"]
    assert after["rounds_trained"] == before["rounds_trained"]


# ---------------------------------------------------------------------------
# Language endpoint


def test_vad_endpoint(client):
    resp = client.post("/vad", json={"text": "furious"})
    assert resp.status_code == 200
    payload = resp.json()
    check_schema(payload, "emovac/v1/vad#/definitions/response")
    expected = phrase_to_vad("furious", default_lexicon())
    assert payload["found"] is True
    assert payload["vad"] == pytest.approx(list(expected.vad.as_tuple()))
    assert payload["matched"] == ["furious"]

    miss = client.post("/vad", json={"text": "zzzqqq"}).json()
    check_schema(miss, "emovac/v1/vad#/definitions/response")
    assert miss["found"] is False and miss["vad"] is None


# ---------------------------------------------------------------------------
# Restart behavior


def test_restarted_service_serves_the_same_session(client, tmp_path):
    data_dir = client.app.state.registry.data_dir
    sid = new_session(client, rounds=1, batch_size=2)
    wait_for(client, sid, {"awaiting_labels"})
    label_all(client, sid)
    before = client.get(f"/sessions/{sid}").json()
    queries_before = client.get(f"/sessions/{sid}/queries").json()

    fresh_app = create_app(data_dir)
    with TestClient(fresh_app) as fresh:
        status = fresh.get(f"/sessions/{sid}").json()
        assert status == before
        assert fresh.get(f"/sessions/{sid}/queries").json() == queries_before
        # Byte-level check of the reloaded engine state.
        dir_ = Path(data_dir) / "sessions" / sid
        assert Session.load(dir_).export_bytes() \
            == client.app.state.registry.get(sid).export_bytes()
    fresh_app.state.registry.shutdown()


def test_restart_resumes_pending_compute(client):
    data_dir = client.app.state.registry.data_dir
    sid = new_session(client, rounds=1, batch_size=2)
    wait_for(client, sid, {"awaiting_labels"})
    label_all(client, sid)
    # Journal the train request directly (as if the service crashed before
    # its worker picked the job up), then start a fresh service.
    session = client.app.state.registry.get(sid)
    session.request_train("t-crash")
    assert session.pending_compute() == {"kind": "train_round", "round": 1}

    fresh_app = create_app(data_dir)
    with TestClient(fresh_app) as fresh:
        wait_for(fresh, sid, {"evaluating"})
    fresh_app.state.registry.shutdown()
