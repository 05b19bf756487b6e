"""Tests for the experiment harness: metric functions against exact rational
oracles, significance tests against a hand-computed fixture, record/CSV
schema guarantees, and the determinism of full (tiny-budget) experiment runs.
"""

import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from emovac import evaluation
from emovac.evaluation import (
    CSV_COLUMNS,
    ExperimentConfig,
    MetricRecord,
    aggregate_records,
    load_config,
    load_metrics_csv,
    quality_score,
    render_metrics_csv,
    run_experiment,
    run_experiment_to_dir,
    significance_vs_random,
    topx_accuracy,
    write_metrics_csv,
)
from emovac.vadspace import EVAL_EMOTION_NAMES

from .oracles import quality_oracle, topx_oracle

NAMES = EVAL_EMOTION_NAMES


def tiny_config(**overrides) -> ExperimentConfig:
    base = dict(exp_id="tiny", method="ours", n_emotions=2, rounds=1,
                batch_size=2, tasks_per_emotion=1, seeds=(0,),
                opt_iters=25, opt_restarts=2, train_epochs=20,
                hidden=8, hidden2=4)
    base.update(overrides)
    return ExperimentConfig(**base)


def make_record(**overrides) -> MetricRecord:
    base = dict(method="ours", n_emotions=6, seed=0, query_count=20,
                quality_mean=5.0, quality_se=0.2, top1=0.5, top1_se=0.1,
                top2=0.7, top2_se=0.1, likert_items=36, choice_items=36,
                per_emotion_top1={name: 0.5 for name in NAMES})
    base.update(overrides)
    return MetricRecord(**base)


# ---------------------------------------------------------------------------
# Metric functions


def test_quality_score_perfect_alignment():
    responses = [(7, "B")] * 5 + [(1, "A")] * 5
    assert quality_score(responses) == 7.0


def test_quality_score_single_a_response():
    assert quality_score([(2, "A")]) == 6.0


def test_quality_score_rejects_bad_input():
    with pytest.raises(ValueError):
        quality_score([])
    with pytest.raises(ValueError):
        quality_score([(0, "A")])
    with pytest.raises(ValueError):
        quality_score([(8, "B")])
    with pytest.raises(ValueError):
        quality_score([(4, "C")])


def test_quality_score_uniform_random_sits_at_chance():
    rng = np.random.default_rng(7)
    responses = [(int(rng.integers(1, 8)), ("A", "B")[rng.integers(2)])
                 for _ in range(50_000)]
    assert quality_score(responses) == pytest.approx(4.0, abs=0.05)


def test_topx_perfect_chooser():
    choices = [(n, NAMES[(i + 1) % 6], n) for i, n in enumerate(NAMES)]
    assert topx_accuracy(choices, 1) == 1.0
    assert topx_accuracy(choices, 2) == 1.0


def test_topx_random_chooser_matches_combinatorial_chance():
    rng = np.random.default_rng(11)
    choices = []
    for _ in range(50_000):
        first, second = rng.choice(6, size=2, replace=False)
        choices.append((NAMES[first], NAMES[second], NAMES[0]))
    assert topx_accuracy(choices, 1) == pytest.approx(1 / 6, abs=0.02)
    assert topx_accuracy(choices, 2) == pytest.approx(1 / 3, abs=0.02)


def test_topx_validation():
    with pytest.raises(ValueError):
        topx_accuracy([("a", "b", "a")], 3)
    with pytest.raises(ValueError):
        topx_accuracy([], 1)


def test_metrics_match_exact_rational_oracles_on_1000_fixtures():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n_resp = int(rng.integers(1, 21))
        responses = [(int(rng.integers(1, 8)), ("A", "B")[rng.integers(2)])
                     for _ in range(n_resp)]
        assert quality_score(responses) == float(quality_oracle(responses))

        n_choice = int(rng.integers(1, 21))
        choices = []
        for _ in range(n_choice):
            first, second = rng.choice(6, size=2, replace=False)
            choices.append((NAMES[first], NAMES[second],
                            NAMES[rng.integers(6)]))
        top1 = topx_accuracy(choices, 1)
        top2 = topx_accuracy(choices, 2)
        assert top1 == float(topx_oracle(choices, 1))
        assert top2 == float(topx_oracle(choices, 2))
        assert top1 <= top2


# ---------------------------------------------------------------------------
# Significance tests


def session_records(top1_values, n_emotions=6, quality=5.0):
    return [make_record(seed=i, n_emotions=n_emotions, quality_mean=quality,
                        top1=v, top2=min(1.0, v + 0.1),
                        per_emotion_top1={
                            name: v for name in NAMES[:n_emotions]})
            for i, v in enumerate(top1_values)]


def test_t_statistic_matches_hand_computation_on_three_sessions():
    # For top1 sessions 0.5/0.6/0.7 against chance 1/6: mean 0.6, sample
    # standard deviation 0.1, so t = (0.6 - 1/6) / (0.1 / sqrt(3)) and, for
    # two degrees of freedom, p = 1 - t / sqrt(t^2 + 2).
    results = significance_vs_random(session_records([0.5, 0.6, 0.7]), "top1")
    overall = results["overall"]
    assert overall.t_stat == pytest.approx(7.505553499465137, abs=1e-12)
    assert overall.p_value == pytest.approx(0.017292370176009153, abs=1e-12)
    assert overall.reject
    assert overall.chance == pytest.approx(1 / 6)
    assert overall.n_sessions == 3


def test_sessions_exactly_at_chance_do_not_reject():
    records = session_records([1 / 6, 1 / 6, 1 / 6])
    overall = significance_vs_random(records, "top1")["overall"]
    assert overall.p_value == 1.0
    assert overall.t_stat == 0.0
    assert not overall.reject


def test_ceiling_sessions_reject_even_with_zero_variance():
    records = session_records([0.9, 0.9], quality=7.0)
    top = significance_vs_random(records, "top1")["overall"]
    qual = significance_vs_random(records, "quality")["overall"]
    assert top.reject and top.p_value == 0.0 and math.isinf(top.t_stat)
    assert qual.reject and qual.chance == 4.0


def test_significance_input_validation():
    with pytest.raises(ValueError):
        significance_vs_random(session_records([0.5]), "top1")
    mixed = session_records([0.5, 0.6]) + session_records([0.5], n_emotions=2)
    with pytest.raises(ValueError):
        significance_vs_random(mixed, "top1")
    with pytest.raises(ValueError):
        significance_vs_random(session_records([0.5, 0.6]), "accuracy")


def test_significance_reports_per_emotion_for_top1_only():
    records = session_records([0.5, 0.6, 0.7])
    top1 = significance_vs_random(records, "top1")
    assert set(top1) == {"overall", *NAMES}
    assert top1["joy"].scope == "joy"
    quality = significance_vs_random(records, "quality")
    assert set(quality) == {"overall"}


# ---------------------------------------------------------------------------
# Config and record schema


def test_experiment_config_json_roundtrip(tmp_path):
    cfg = tiny_config(seeds=(3, 1, 4), label_noise_std=0.05, alpha=12.5)
    payload = cfg.to_json_dict()
    assert ExperimentConfig.from_json_dict(payload) == cfg
    path = tmp_path / "cfg.json"
    import json

    path.write_text(json.dumps(payload))
    assert load_config(path) == cfg


def test_experiment_config_validation():
    with pytest.raises(ValueError):
        tiny_config(method="theirs")
    with pytest.raises(ValueError):
        tiny_config(n_emotions=3)
    with pytest.raises(ValueError):
        tiny_config(seeds=())
    with pytest.raises(ValueError):
        tiny_config(seeds=(1, 1))
    with pytest.raises(ValueError):
        tiny_config(eval_cadence="sometimes")
    with pytest.raises(ValueError):
        tiny_config(exp_id="a/b")
    with pytest.raises(ValueError):
        tiny_config(tasks_per_emotion=0)


def test_metric_record_validation():
    with pytest.raises(ValueError):
        make_record(quality_mean=7.5)
    with pytest.raises(ValueError):
        make_record(top1=0.8, top2=0.5)
    with pytest.raises(ValueError):
        make_record(failed=True)  # failure without diagnostic
    with pytest.raises(ValueError):
        make_record(failed=True, diagnostic="boom")  # finite metrics
    failure = MetricRecord.failure("sep", 4, 2, 40, "ValueError: boom")
    assert failure.failed and math.isnan(failure.top1)
    assert failure.query_count == 40


def test_csv_schema_is_frozen_and_roundtrips(tmp_path):
    records = [make_record(),
               MetricRecord.failure("sep", 6, 1, 0, "Err: a,b\nnext")]
    text = render_metrics_csv(records)
    header = text.splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)
    failure_row = text.splitlines()[2]
    assert "\n" not in failure_row and "Err: a,b next" in failure_row
    path = tmp_path / "metrics.csv"
    write_metrics_csv(records, path)
    back = load_metrics_csv(path)
    assert back[0] == records[0]
    assert back[1].failed and math.isnan(back[1].quality_mean)
    assert back[1].diagnostic == "Err: a,b next"


def test_aggregate_records_means_and_standard_errors():
    records = [make_record(seed=0, top1=0.5), make_record(seed=1, top1=0.7)]
    stats = aggregate_records(records + [
        MetricRecord.failure("ours", 6, 2, 20, "X: y")])
    entry = stats[("ours", 6, 20)]
    assert entry["n_seeds"] == 2.0  # the failed record is excluded
    assert entry["top1"] == pytest.approx(0.6)
    assert entry["top1_se"] == pytest.approx(0.1)  # sqrt(0.02) / sqrt(2)
    assert entry["quality"] == pytest.approx(5.0)
    assert entry["quality_se"] == 0.0


# ---------------------------------------------------------------------------
# Full (tiny) experiment runs


def test_run_experiment_shape_and_determinism():
    cfg = tiny_config(seeds=(0, 1))
    records = run_experiment(cfg)
    assert [r.query_count for r in records] == [0, 2, 0, 2]
    for r in records:
        assert not r.failed
        assert r.likert_items == cfg.n_emotions * cfg.tasks_per_emotion
        assert r.choice_items == cfg.n_emotions * cfg.tasks_per_emotion
        assert r.top1 <= r.top2 <= 1.0
        assert set(r.per_emotion_top1) == set(NAMES[:2])
    again = run_experiment(cfg)
    assert render_metrics_csv(records) == render_metrics_csv(again)


def test_run_experiment_final_only_cadence():
    cfg = tiny_config(rounds=2, eval_cadence="final_only")
    records = run_experiment(cfg)
    assert [r.query_count for r in records] == [0, 4]


def test_run_experiment_covers_baseline_methods():
    for method in ("sep", "sep_all"):
        records = run_experiment(tiny_config(method=method))
        assert [r.query_count for r in records] == [0, 2]
        assert all(not r.failed for r in records)


def test_run_experiment_rejects_live_oracle():
    with pytest.raises(ValueError):
        run_experiment(tiny_config(oracle="live"))


def test_evaluation_tasks_are_paired_across_methods_and_disjoint_from_training(
        monkeypatch):
    captured: list[tuple] = []
    real = evaluation.sample_task_rng

    def spy(rng, *args, **kwargs):
        task = real(rng, *args, **kwargs)
        captured.append((tuple(task.start.as_array()), tuple(task.dust)))
        return task

    monkeypatch.setattr(evaluation, "sample_task_rng", spy)
    segments = {}
    for method in ("ours", "sep"):
        captured.clear()
        run_experiment(tiny_config(method=method))
        n_eval = 4  # 2 Likert + 2 choice items for N=2, M=1
        segments[method] = {
            "eval0": captured[:n_eval],
            "train": captured[n_eval:n_eval + 2],
            "eval1": captured[n_eval + 2:],
        }
    assert segments["ours"]["eval0"] == segments["sep"]["eval0"]
    assert segments["ours"]["eval1"] == segments["sep"]["eval1"]
    assert segments["ours"]["train"] != segments["sep"]["train"]
    for method in ("ours", "sep"):
        eval_tasks = set(segments[method]["eval0"] + segments[method]["eval1"])
        assert eval_tasks.isdisjoint(segments[method]["train"])


def test_failed_seed_emits_diagnostic_and_spares_other_seeds(monkeypatch):
    def explode(*args, **kwargs):
        raise RuntimeError("synthetic failure")

    monkeypatch.setattr(evaluation, "train", explode)
    records = run_experiment(tiny_config(seeds=(0, 1)))
    by_seed = {}
    for r in records:
        by_seed.setdefault(r.seed, []).append(r)
    for seed in (0, 1):
        ok = [r for r in by_seed[seed] if not r.failed]
        bad = [r for r in by_seed[seed] if r.failed]
        assert len(ok) == 1 and ok[0].query_count == 0
        assert len(bad) == 1
        assert "RuntimeError: synthetic failure" in bad[0].diagnostic


def test_run_experiment_to_dir_writes_all_outputs(tmp_path):
    cfg = tiny_config(seeds=(0, 1))
    out = run_experiment_to_dir(cfg, tmp_path)
    assert out == tmp_path / "tiny"
    names = sorted(p.name for p in out.iterdir())
    assert names == ["config.json", "fig4.svg", "fig5.svg", "metrics.csv"]
    back = load_metrics_csv(out / "metrics.csv")
    assert render_metrics_csv(back) == (out / "metrics.csv").read_text()
    for fig in ("fig4.svg", "fig5.svg"):
        text = (out / fig).read_text()
        ET.fromstring(text)  # well-formed XML
        assert "polyline" in text and "stroke-dasharray" in text
    assert load_config(out / "config.json") == cfg
