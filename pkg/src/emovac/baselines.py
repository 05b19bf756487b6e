"""Per-emotion cost baselines.

Instead of one shared network mapping trajectories to VAD, these baselines
keep an independent scalar cost network per evaluation emotion, trained on
cost labels for that emotion only:

* ``sep`` — each query trajectory is optimized for one sampled emotion and
  yields a single cost label for that emotion's model (the labeling budget is
  split across emotions);
* ``sep_all`` — each query yields a cost label for every emotion's model
  (an N-times larger effective budget from the same number of queries).

Each per-emotion network reuses the shared per-waypoint + pooling backbone
with a scalar nonnegative output head, so the learned representation is the
only thing that differs from the shared-VAD approach.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .sim import Trajectory
from .sim_human import HeuristicConfig, sh_emotion_cost
from .stylenet import (
    StyleNetParams,
    TrainConfig,
    TrainingDiverged,
    forward_arrays,
    init_params,
    load_checkpoint,
    save_checkpoint,
    train_arrays,
    trajectory_features,
)
from .vadspace import EvalEmotionSet


class UnknownEmotionError(KeyError):
    """Raised when asking a per-emotion ensemble for an emotion it lacks."""


class SepTrainingError(RuntimeError):
    """Training failure of one per-emotion model, tagged with its emotion."""

    def __init__(self, emotion: str, cause: Exception):
        super().__init__(f"training failed for emotion {emotion!r}: {cause}")
        self.emotion = emotion
        self.cause = cause


@dataclass(frozen=True)
class PerEmotionModel:
    """A scalar cost network dedicated to one named emotion."""

    emotion: str
    params: StyleNetParams
    pairs: tuple[tuple[Trajectory, float], ...] = ()

    def __post_init__(self) -> None:
        if self.params.head != "softplus" or self.params.out_dim != 1:
            raise ValueError("per-emotion models use a scalar nonnegative head")

    def with_pairs(self, pairs) -> "PerEmotionModel":
        return replace(self, pairs=tuple(pairs))


def init_sep_models(names: Sequence[str], rng_seed, hidden: int = 32,
                    hidden2: int = 16) -> list[PerEmotionModel]:
    """Independently initialized scalar nets, one per emotion name."""
    if len(set(names)) != len(names):
        raise ValueError("emotion names must be unique")
    streams = np.random.SeedSequence(rng_seed).spawn(len(names))
    models = []
    for name, stream in zip(names, streams):
        params = init_params(stream, hidden=hidden, hidden2=hidden2,
                             head="softplus")
        models.append(PerEmotionModel(emotion=name, params=params))
    return models


def sep_query_plan(N: int, B: int, rng_seed,
                   emotion_set: EvalEmotionSet) -> list[str]:
    """B emotion names drawn i.i.d. uniform from the first N eval emotions."""
    if N < 2:
        raise ValueError("need at least two emotions")
    if len(emotion_set.names) < N:
        raise ValueError("emotion set smaller than N")
    names = emotion_set.names[:N]
    rng = np.random.default_rng(rng_seed)
    return [names[i] for i in rng.integers(0, N, size=B)]


def _cost_labels(traj: Trajectory, emotions: Sequence[str],
                 emotion_set: EvalEmotionSet, cfg: HeuristicConfig | None,
                 rng_seed) -> dict[str, float]:
    return {
        name: sh_emotion_cost(traj, emotion_set.anchor(name), cfg, rng_seed)
        for name in emotions
    }


def _train_model(model: PerEmotionModel,
                 schedule: TrainConfig) -> PerEmotionModel:
    feats = [trajectory_features(t) for t, _ in model.pairs]
    t_max = max(f.shape[0] for f in feats)
    X = np.zeros((len(feats), t_max, feats[0].shape[1]))
    mask = np.zeros((len(feats), t_max))
    for i, f in enumerate(feats):
        X[i, : f.shape[0]] = f
        mask[i, : f.shape[0]] = 1.0
    labels = np.array([[c] for _, c in model.pairs])
    try:
        trained = train_arrays(model.params, X, mask, labels, schedule)
    except TrainingDiverged as exc:
        raise SepTrainingError(model.emotion, exc) from exc
    return replace(model, params=trained)


def sep_train_round(models: Sequence[PerEmotionModel],
                    queries: Sequence[tuple[str, Trajectory]],
                    mode: str,
                    emotion_set: EvalEmotionSet,
                    cfg: HeuristicConfig | None = None,
                    schedule: TrainConfig = TrainConfig(),
                    rng_seed=0) -> list[PerEmotionModel]:
    """Label this round's queries with scalar costs and retrain each model.

    ``queries`` pairs each planned emotion name with its optimized
    trajectory.  In mode ``sep`` a query labels only its own emotion's model;
    in mode ``sep_all`` it labels every model.  Models that end the round
    with at least one pair retrain from their current weights.
    """
    if mode not in ("sep", "sep_all"):
        raise ValueError("mode must be 'sep' or 'sep_all'")
    by_name = {m.emotion: m for m in models}
    new_pairs: dict[str, list[tuple[Trajectory, float]]] = {
        m.emotion: list(m.pairs) for m in models
    }
    for i, (name, traj) in enumerate(queries):
        if name not in by_name:
            raise UnknownEmotionError(name)
        targets = list(by_name) if mode == "sep_all" else [name]
        labels = _cost_labels(traj, targets, emotion_set, cfg,
                              (rng_seed, i))
        for target, cost in labels.items():
            new_pairs[target].append((traj, cost))

    updated = []
    for model in models:
        model = model.with_pairs(new_pairs[model.emotion])
        if model.pairs:
            model = _train_model(model, schedule)
        updated.append(model)
    return updated


def find_model(models: Sequence[PerEmotionModel],
               emotion: str) -> PerEmotionModel:
    """The model for a named emotion; unknown names are a contract error."""
    for model in models:
        if model.emotion == emotion:
            return model
    raise UnknownEmotionError(emotion)


def sep_style_cost(model: PerEmotionModel, traj: Trajectory) -> float:
    """The model's predicted cost for one trajectory (always ≥ 0)."""
    X = trajectory_features(traj)
    y = forward_arrays(model.params, X)
    return float(y[0])


def save_sep_checkpoint(model: PerEmotionModel, path: str | Path) -> None:
    save_checkpoint(model.params, path,
                    extra={"output_width": 1, "emotion": model.emotion})


def load_sep_checkpoint(path: str | Path) -> PerEmotionModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    params = load_checkpoint(path)
    return PerEmotionModel(emotion=str(payload["emotion"]), params=params)
