"""Tests for the per-emotion cost baselines: query planning statistics,
label accounting in both modes, training, gradients, and checkpoints."""

import numpy as np
import pytest

from emovac.baselines import (
    PerEmotionModel,
    SepTrainingError,
    UnknownEmotionError,
    find_model,
    init_sep_models,
    load_sep_checkpoint,
    save_sep_checkpoint,
    sep_query_plan,
    sep_style_cost,
    sep_train_round,
)
from emovac.sim import Trajectory
from emovac.sim_human import default_heuristics, sh_emotion_cost
from emovac.stylenet import (
    TrainConfig,
    init_params,
    scalar_output_grad_arrays,
)
from emovac.vadspace import default_lexicon, eval_emotion_set

from .oracles import fd_gradient, random_trajectory_arrays, relative_error

ES6 = eval_emotion_set(default_lexicon(), 6)


def _random_traj(rng, n=7):
    w, dts = random_trajectory_arrays(rng, n_waypoints=n)
    return Trajectory.from_arrays(w, dts)


# ---------------------------------------------------------------------------
# Query planning


def test_plan_is_deterministic_and_supported():
    a = sep_query_plan(2, 4, 123, ES6)
    b = sep_query_plan(2, 4, 123, ES6)
    assert a == b
    assert set(a) <= {"sadness", "joy"}
    assert len(a) == 4


def test_plan_frequencies_are_uniform():
    for n in (2, 4, 6):
        plan = sep_query_plan(n, 10_000, 7, ES6)
        counts = {name: plan.count(name) for name in set(plan)}
        assert set(counts) == set(ES6.names[:n])
        for c in counts.values():
            assert abs(c / 10_000 - 1.0 / n) < 0.02


def test_plan_uses_only_the_first_n_names():
    plan = sep_query_plan(6, 500, 3, ES6)
    assert set(plan) <= set(ES6.names)
    with pytest.raises(ValueError):
        sep_query_plan(1, 5, 0, ES6)


# ---------------------------------------------------------------------------
# Models and training


def test_models_share_the_backbone_shapes():
    models = init_sep_models(ES6.names, 0)
    vad_net = init_params(0)
    assert len(models) == 6
    for m in models:
        w = m.params.weights
        assert w["W1"].shape == vad_net.weights["W1"].shape
        assert w["W2"].shape == vad_net.weights["W2"].shape
        assert w["W3"].shape == (vad_net.weights["W3"].shape[0], 1)
        assert w["b3"].shape == (1,)
    # Independent streams: different emotions get different weights.
    assert not np.array_equal(models[0].params.weights["W1"],
                              models[1].params.weights["W1"])
    again = init_sep_models(ES6.names, 0)
    assert np.array_equal(models[2].params.weights["W1"],
                          again[2].params.weights["W1"])


def test_scalar_head_is_rejected_for_vad_nets():
    with pytest.raises(ValueError):
        PerEmotionModel(emotion="joy", params=init_params(0))


def test_label_accounting_sep_vs_sep_all():
    rng = np.random.default_rng(11)
    cfg = default_heuristics()
    schedule = TrainConfig(epochs=5)
    for mode, per_query in (("sep", 1), ("sep_all", 4)):
        models = init_sep_models(ES6.names[:4], 1)
        total = 0
        for k in range(2):
            plan = sep_query_plan(4, 20, 100 + k, ES6)
            queries = [(name, _random_traj(rng)) for name in plan]
            models = sep_train_round(models, queries, mode, ES6, cfg,
                                     schedule)
            total += 20 * per_query
            assert sum(len(m.pairs) for m in models) == total
    # Spec'd example figures: B=20, N=4 -> 20 (sep) vs 80 (sep_all) per round.
    assert 20 * 1 == 20 and 20 * 4 == 80


def test_sep_all_labels_match_the_oracle_for_every_emotion():
    rng = np.random.default_rng(21)
    cfg = default_heuristics()
    traj = _random_traj(rng)
    models = init_sep_models(ES6.names[:2], 2)
    models = sep_train_round(models, [("joy", traj)], "sep_all", ES6, cfg,
                             TrainConfig(epochs=1), rng_seed=5)
    for m in models:
        assert len(m.pairs) == 1
        stored = m.pairs[0][1]
        expected = sh_emotion_cost(traj, ES6.anchor(m.emotion), cfg,
                                   (5, 0))
        assert stored == expected


def test_memorizes_a_duplicated_pair():
    rng = np.random.default_rng(31)
    traj = _random_traj(rng, n=6)
    cfg = default_heuristics()
    target_cost = sh_emotion_cost(traj, ES6.anchor("joy"), cfg)
    models = init_sep_models(["joy"], 3)
    queries = [("joy", traj)] * 6
    models = sep_train_round(models, queries, "sep", ES6, cfg,
                             TrainConfig(epochs=800))
    pred = sep_style_cost(models[0], traj)
    assert abs(pred - target_cost) < 1e-2
    assert pred >= 0.0


def test_training_failure_carries_the_emotion_name():
    rng = np.random.default_rng(41)
    model = init_sep_models(["fear"], 4)[0]
    poisoned = model.with_pairs([(_random_traj(rng), float("nan"))])
    with np.errstate(invalid="ignore"):
        with pytest.raises(SepTrainingError) as err:
            sep_train_round([poisoned], [], "sep", ES6,
                            default_heuristics(), TrainConfig(epochs=3))
    assert err.value.emotion == "fear"


def test_unknown_emotion_is_an_error():
    models = init_sep_models(ES6.names[:2], 5)
    with pytest.raises(UnknownEmotionError):
        find_model(models, "anger")
    assert find_model(models, "joy").emotion == "joy"
    rng = np.random.default_rng(51)
    with pytest.raises(UnknownEmotionError):
        sep_train_round(models, [("anger", _random_traj(rng))], "sep", ES6,
                        default_heuristics(), TrainConfig(epochs=1))
    with pytest.raises(ValueError):
        sep_train_round(models, [], "other", ES6, default_heuristics(),
                        TrainConfig(epochs=1))


# ---------------------------------------------------------------------------
# Cost output and gradient


def test_cost_is_nonnegative_everywhere():
    rng = np.random.default_rng(61)
    model = init_sep_models(["joy"], 6)[0]
    for _ in range(20):
        assert sep_style_cost(model, _random_traj(rng)) >= 0.0


def test_cost_gradient_matches_finite_differences():
    rng = np.random.default_rng(71)
    model = init_sep_models(["joy"], 7, hidden=8, hidden2=5)[0]
    w, dts = random_trajectory_arrays(rng, n_waypoints=6)
    y, dw, ddts = scalar_output_grad_arrays(model.params, w, dts)
    assert y.shape == ()
    packed = np.concatenate([w.ravel(), dts])

    def f(z):
        wz = z[: w.size].reshape(w.shape)
        dz = z[w.size:]
        return float(sep_style_cost(model, Trajectory.from_arrays(wz, dz)))

    # from_arrays wraps angles; keep them in range so FD probes stay smooth.
    assert np.all(np.abs(w[:, 2]) < np.pi - 1e-3)
    fd = fd_gradient(f, packed)
    analytic = np.concatenate([dw.ravel(), ddts])
    assert relative_error(fd, analytic) < 1e-6


def test_batched_scalar_output_matches_single():
    rng = np.random.default_rng(81)
    model = init_sep_models(["joy"], 8)[0]
    ws, dts = [], []
    for _ in range(3):
        w, d = random_trajectory_arrays(rng, n_waypoints=5)
        ws.append(w)
        dts.append(d)
    W = np.stack(ws)
    D = np.stack(dts)
    y, _, _ = scalar_output_grad_arrays(model.params, W, D)
    for i in range(3):
        single = sep_style_cost(model, Trajectory.from_arrays(ws[i], dts[i]))
        assert abs(float(y[i]) - single) < 1e-12


# ---------------------------------------------------------------------------
# Checkpoints


def test_checkpoint_round_trip_with_emotion_tag(tmp_path):
    import json

    model = init_sep_models(["patience"], 9)[0]
    path = tmp_path / "sep_patience.json"
    save_sep_checkpoint(model, path)
    payload = json.loads(path.read_text())
    assert payload["output_width"] == 1
    assert payload["emotion"] == "patience"
    assert payload["out_dim"] == 1
    loaded = load_sep_checkpoint(path)
    assert loaded.emotion == "patience"
    for key, value in model.params.weights.items():
        np.testing.assert_array_equal(loaded.params.weights[key], value)
