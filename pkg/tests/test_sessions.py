"""Tests for the journaled live-session engine."""

from __future__ import annotations

import json

import pytest

from emovac.evaluation import significance_vs_random
from emovac.lang import phrase_to_vad
from emovac.sessions import (
    ConflictError,
    Session,
    StateError,
    ValidationError,
    session_config,
)
from emovac.vadspace import default_lexicon

FAST = dict(alpha=5.0, opt_iters=12, opt_restarts=1, train_epochs=10,
            hidden=8, hidden2=4)


def make_session(tmp_path, *, session_id="s-test", rounds=1, batch_size=2,
                 n_emotions=2, tasks_per_emotion=1, seed=0, **overrides):
    cfg = session_config(session_id, rounds=rounds, batch_size=batch_size,
                         n_emotions=n_emotions,
                         tasks_per_emotion=tasks_per_emotion, seed=seed,
                         **{**FAST, **overrides})
    return Session.create(tmp_path / session_id, cfg, session_id)


def label_round(session, round_index, prefix="r"):
    for i in session.missing_label_indices(round_index):
        session.set_label(round_index, i, f"{prefix}{round_index}-{i}",
                          vad=(0.1 * (i % 3) - 0.1, 0.2, -0.3))


def drive_to_eval(session):
    session.run_all_pending()
    for k in range(1, session.config.rounds + 1):
        label_round(session, k)
        session.request_train(f"train-{k}")
        session.run_all_pending()
    assert session.status == "evaluating"


def answer_all(session, *, perfect=False):
    while (item := session.next_eval_item()) is not None:
        if item.kind == "likert":
            score = (7 if item.side == "B" else 1) if perfect else 4
            session.answer_eval(item.index, f"a{item.index}",
                                {"score": score})
        else:
            names = session.emotion_set.names
            first = item.emotion if perfect else names[0]
            second = next(n for n in names if n != first)
            session.answer_eval(item.index, f"a{item.index}",
                                {"first": first, "second": second})


# ---------------------------------------------------------------------------
# Status machine and protocol shape


def test_lifecycle_statuses(tmp_path):
    s = make_session(tmp_path, rounds=2)
    assert s.status == "training"  # round 1 queries being planned
    s.run_all_pending()
    assert s.status == "awaiting_labels"
    assert s.current_round.round_index == 1

    label_round(s, 1)
    assert s.status == "awaiting_labels"
    s.request_train("t1")
    assert s.status == "training"
    s.run_all_pending()
    assert s.status == "awaiting_labels"
    assert s.current_round.round_index == 2

    label_round(s, 2)
    s.request_train("t2")
    s.run_all_pending()
    assert s.status == "evaluating"
    answer_all(s)
    assert s.status == "done"


def test_round_k_plus_1_requires_complete_round_k(tmp_path):
    s = make_session(tmp_path, rounds=2, batch_size=3)
    s.run_all_pending()
    s.set_label(1, 0, "only-one", vad=(0.0, 0.0, 0.0))
    with pytest.raises(ValidationError) as exc:
        s.request_train("t1")
    assert exc.value.missing_indices == (1, 2)
    # No round-2 queries may exist while round 1 is incomplete.
    assert len(s.rounds) == 1
    assert s.pending_compute() is None


def test_training_pairs_count_k_times_b(tmp_path):
    s = make_session(tmp_path, rounds=2, batch_size=3)
    s.run_all_pending()
    assert s.training_pairs() == 0
    label_round(s, 1)
    s.request_train("t1")
    s.run_all_pending()
    assert s.training_pairs() == 3
    assert len(s.checkpoints) == 1
    label_round(s, 2)
    s.request_train("t2")
    s.run_all_pending()
    assert s.training_pairs() == 6
    assert len(s.checkpoints) == 2


def test_questionnaire_composition(tmp_path):
    s = make_session(tmp_path, rounds=1, batch_size=2, n_emotions=4,
                     tasks_per_emotion=2)
    drive_to_eval(s)
    items = s.eval_items
    assert items is not None
    likert = [i for i in items if i.kind == "likert"]
    choice = [i for i in items if i.kind == "choice"]
    # N/2 contiguous Likert sets of 2M items, then the choice block.
    assert [i.kind for i in items] == ["likert"] * 8 + ["choice"] * 8
    pairs = s.emotion_set.pairs()
    for set_idx, pair in enumerate(pairs):
        block = likert[set_idx * 4:(set_idx + 1) * 4]
        assert all(i.pair == pair for i in block)
        assert sorted(i.side for i in block) == ["A", "A", "B", "B"]
    assert sorted(i.emotion for i in choice) == sorted(
        n for n in s.emotion_set.names for _ in range(2))


def test_eval_answers_do_not_touch_training_state(tmp_path):
    s = make_session(tmp_path)
    drive_to_eval(s)
    pairs_before = s.training_pairs()
    checkpoints_before = [p.weights["W1"].tobytes() for p in s.checkpoints]
    answer_all(s)
    assert s.training_pairs() == pairs_before
    assert [p.weights["W1"].tobytes() for p in s.checkpoints] \
        == checkpoints_before


# ---------------------------------------------------------------------------
# Labeling rules


def test_direct_label_roundtrip_and_validation(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    entry = s.set_label(1, 0, "rid-1", vad=(0.5, -0.25, 1.0))
    assert entry.vad.as_tuple() == (0.5, -0.25, 1.0)
    assert entry.source == "direct"
    with pytest.raises(ValidationError):
        s.set_label(1, 1, "rid-2", vad=(1.5, 0.0, 0.0))
    with pytest.raises(ValidationError):
        s.set_label(1, 1, "rid-3", vad=(0.0, 0.0))
    with pytest.raises(ValidationError):
        s.set_label(1, 1, "rid-4")
    with pytest.raises(ValidationError):
        s.set_label(1, 1, "rid-5", vad=(0.0, 0.0, 0.0), text="joy")


def test_text_label_resolves_through_the_lexicon(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    entry = s.set_label(1, 0, "rid-1", text="furious")
    expected = phrase_to_vad("furious", default_lexicon())
    assert expected.found
    assert entry.vad == expected.vad
    assert entry.source == "language"
    assert entry.text == "furious"
    with pytest.raises(ValidationError):
        s.set_label(1, 1, "rid-2", text="zzzqqq xyzzy")


def test_label_idempotency_and_conflicts(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    first = s.set_label(1, 0, "rid-1", vad=(0.1, 0.2, 0.3))
    again = s.set_label(1, 0, "rid-1", vad=(0.1, 0.2, 0.3))
    assert again == first
    journal = (s.directory / "journal.jsonl").read_text().splitlines()
    assert sum("label_set" in line for line in journal) == 1
    with pytest.raises(ConflictError):
        s.set_label(1, 0, "rid-1", vad=(0.9, 0.2, 0.3))
    with pytest.raises(ConflictError):
        s.set_label(1, 0, "rid-other", vad=(0.9, 0.2, 0.3))


def test_train_request_idempotent_across_round_advance(tmp_path):
    s = make_session(tmp_path, rounds=2)
    s.run_all_pending()
    label_round(s, 1)
    assert s.request_train("t1") == {"round": 1, "queued": True}
    assert s.request_train("t1") == {"round": 1, "queued": True}
    s.run_all_pending()
    # A late retry of the round-1 request still acks after round 2 opened.
    assert s.request_train("t1") == {"round": 1, "queued": True}
    with pytest.raises(ValidationError):
        s.request_train("t2")  # round 2 has no labels yet


# ---------------------------------------------------------------------------
# Questionnaire rules


def test_eval_strict_order_and_idempotency(tmp_path):
    s = make_session(tmp_path)
    drive_to_eval(s)
    items = s.eval_items
    with pytest.raises(ValidationError):
        s.answer_eval(1, "skip", _answer_for(s, items[1]))
    first = s.answer_eval(0, "a0", _answer_for(s, items[0]))
    assert s.answer_eval(0, "a0", _answer_for(s, items[0])) == first
    with pytest.raises(ConflictError):
        s.answer_eval(0, "a0-different", _answer_for(s, items[0]))
    bad = dict(_answer_for(s, items[0]))
    if "score" in bad and bad["score"] is not None:
        bad["score"] = (bad["score"] % 7) + 1
    else:
        bad["first"], bad["second"] = bad["second"], bad["first"]
    with pytest.raises(ConflictError):
        s.answer_eval(0, "a0", bad)


def _answer_for(session, item):
    if item.kind == "likert":
        return {"score": 4}
    names = session.emotion_set.names
    return {"first": names[0], "second": names[1]}


def test_eval_answer_validation(tmp_path):
    s = make_session(tmp_path)
    with pytest.raises(StateError):
        s.next_eval_item()
    drive_to_eval(s)
    item = s.next_eval_item()
    likert_idx = item.index if item.kind == "likert" else None
    if likert_idx is not None:
        with pytest.raises(ValidationError):
            s.answer_eval(likert_idx, "bad", {"score": 9})
        with pytest.raises(ValidationError):
            s.answer_eval(likert_idx, "bad", {"score": True})
        with pytest.raises(ValidationError):
            s.answer_eval(likert_idx, "bad", {"first": "joy",
                                              "second": "sadness"})


def test_choice_answers_must_be_distinct_emotions(tmp_path):
    s = make_session(tmp_path)
    drive_to_eval(s)
    while (item := s.next_eval_item()) is not None and item.kind != "choice":
        s.answer_eval(item.index, f"a{item.index}", {"score": 4})
    assert item is not None
    with pytest.raises(ValidationError):
        s.answer_eval(item.index, "dup", {"first": "joy", "second": "joy"})
    with pytest.raises(ValidationError):
        s.answer_eval(item.index, "alien", {"first": "joy",
                                            "second": "boredom"})


# ---------------------------------------------------------------------------
# Metrics


def test_metrics_from_known_answers(tmp_path):
    s = make_session(tmp_path)
    drive_to_eval(s)
    with pytest.raises(StateError):
        s.metrics_record()
    for item in s.eval_items:
        if item.kind == "likert":
            # A-items scored 2 -> q=6; B-items scored 6 -> q=6.
            score = 6 if item.side == "B" else 2
            s.answer_eval(item.index, f"a{item.index}", {"score": score})
        else:
            second = next(n for n in s.emotion_set.names
                          if n != item.emotion)
            s.answer_eval(item.index, f"a{item.index}",
                          {"first": item.emotion, "second": second})
    record = s.metrics_record()
    assert record.quality_mean == 6.0
    assert record.top1 == 1.0
    assert record.top2 == 1.0
    assert record.query_count == s.config.rounds * s.config.batch_size
    assert record.method == "ours"
    assert record.likert_items == 2 and record.choice_items == 2


def test_ceiling_sessions_reject_chance(tmp_path):
    # N=4 keeps every chance level strictly below ceiling (top2 chance 1/2).
    records = []
    for seed in (0, 1):
        s = make_session(tmp_path, session_id=f"ceil-{seed}", seed=seed,
                         n_emotions=4)
        drive_to_eval(s)
        answer_all(s, perfect=True)
        records.append(s.metrics_record())
    for metric in ("quality", "top1", "top2"):
        result = significance_vs_random(records, metric)
        assert result["overall"].reject


# ---------------------------------------------------------------------------
# Persistence


def test_reload_is_byte_equivalent_at_every_stage(tmp_path):
    s = make_session(tmp_path, rounds=2)

    def check():
        reloaded = Session.load(s.directory)
        assert reloaded.export_bytes() == s.export_bytes()
        assert reloaded.status == s.status
        assert reloaded.pending_compute() == s.pending_compute()

    check()  # creation only
    s.run_all_pending()
    check()  # round 1 planned
    s.set_label(1, 0, "rid-0", vad=(0.2, 0.0, -0.2))
    check()  # partial labels
    label_round(s, 1)
    s.request_train("t1")
    check()  # queued training (crash before the worker ran)
    s.run_pending_compute()
    check()  # trained but round 2 not yet planned
    s.run_all_pending()
    label_round(s, 2)
    s.request_train("t2")
    s.run_all_pending()
    check()  # questionnaire planned
    answer_all(s)
    check()  # done


def test_crash_mid_compute_resumes_cleanly(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    label_round(s, 1)
    s.request_train("t1")
    # Crash now: the train request is journaled but no compute has run.
    fresh = Session.load(s.directory)
    assert fresh.status == "training"
    assert fresh.pending_compute() == {"kind": "train_round", "round": 1}
    fresh.run_all_pending()
    assert fresh.status == "evaluating"


def test_torn_journal_tail_is_ignored(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    before = s.export_bytes()
    with open(s.directory / "journal.jsonl", "a", encoding="utf-8") as fh:
        fh.write('{"event": "label_set", "round": 1, "ind')  # torn write
    reloaded = Session.load(s.directory)
    assert reloaded.export_bytes() == before


def test_corrupt_interior_journal_line_raises(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    path = s.directory / "journal.jsonl"
    lines = path.read_text().splitlines()
    lines.insert(1, "not json")
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError, match="corrupt journal line 2"):
        Session.load(s.directory)


def test_snapshot_file_matches_export(tmp_path):
    s = make_session(tmp_path)
    s.run_all_pending()
    snapshot = json.loads((s.directory / "snapshot.json").read_text())
    assert snapshot == s.export_payload()


def test_same_seed_sessions_are_identical(tmp_path):
    exports = []
    for sub in ("a", "b"):
        cfg = session_config("twin", rounds=1, batch_size=2, n_emotions=2,
                             tasks_per_emotion=1, seed=7, **FAST)
        s = Session.create(tmp_path / sub, cfg, "twin")
        s.run_all_pending()
        label_round(s, 1)
        s.request_train("t1")
        s.run_all_pending()
        answer_all(s)
        exports.append(s.export_bytes())
    assert exports[0] == exports[1]


def test_session_config_guards(tmp_path):
    cfg = session_config("bad", rounds=1, batch_size=2, n_emotions=2,
                         tasks_per_emotion=1)
    sim = cfg.__class__.from_json_dict(
        {**cfg.to_json_dict(), "oracle": "simulated"})
    with pytest.raises(ValidationError):
        Session.create(tmp_path / "x", sim, "bad")
    sep = cfg.__class__.from_json_dict(
        {**cfg.to_json_dict(), "method": "sep"})
    with pytest.raises(ValidationError):
        Session.create(tmp_path / "y", sep, "bad")
