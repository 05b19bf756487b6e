"""Active selection of the emotion points queried each labeling round.

Round 1 samples emotion points uniformly from the cube (the untrained
discriminator gives them no meaning yet).  Later rounds choose the batch that,
together with every label collected so far, best covers the lexicon's
empirical VAD distribution: minimize the sum over lexicon entries of the
squared distance to the nearest chosen-or-prior point.  The minimization runs
as k-means with the prior labels as frozen centers, restarted from several
seeded initializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from .sim import Task, Trajectory, sample_task_rng
from .stylenet import StyleNetParams
from .trajopt import (
    CostConfig,
    OptimizationDiverged,
    OptimizerConfig,
    VadStyleTerm,
    optimize_batch,
)
from .vadspace import EmotionLexicon, Vad

EM_MAX_ITERS = 100
EM_DEFAULT_INITS = 8


class QueryPlanningError(RuntimeError):
    """A round's query optimization failed; names the offending samples."""

    def __init__(self, round_index: int, sample_indices: Sequence[int]):
        self.round_index = int(round_index)
        self.sample_indices = tuple(int(i) for i in sample_indices)
        super().__init__(
            f"round {self.round_index}: query optimization diverged for "
            f"sample index(es) {list(self.sample_indices)}"
        )


def first_round_samples(B: int, rng_seed) -> list[Vad]:
    """Uniform points in the emotion cube for the bootstrap round."""
    if B < 1:
        raise ValueError("need at least one sample per round")
    rng = np.random.default_rng(rng_seed)
    pts = rng.uniform(-1.0, 1.0, (B, 3))
    return [Vad.from_array(p) for p in pts]


def _as_points(items: Sequence[Vad]) -> np.ndarray:
    if len(items) == 0:
        return np.zeros((0, 3))
    return np.stack([v.as_array() for v in items])


def coverage_objective(candidates: Sequence[Vad], prior_labels: Sequence[Vad],
                       lexicon: EmotionLexicon) -> float:
    """Sum over lexicon entries of squared distance to the nearest point."""
    centers = np.concatenate([_as_points(candidates), _as_points(prior_labels)])
    if centers.shape[0] == 0:
        raise ValueError("need at least one candidate or prior label")
    d2 = np.sum(
        (lexicon.points[:, None, :] - centers[None, :, :]) ** 2, axis=-1
    )
    return float(d2.min(axis=1).sum())


def _em_run(init_centers: np.ndarray, frozen: np.ndarray, pts: np.ndarray
            ) -> tuple[np.ndarray, list[float]]:
    """One k-means run with frozen extra centers; returns objective history.

    Free centers come first, so the argmin tie-break (lowest index) prefers
    them; frozen centers never move.
    """
    B = init_centers.shape[0]
    centers = init_centers.copy()
    history: list[float] = []
    prev_assign: np.ndarray | None = None

    for step in range(EM_MAX_ITERS + 1):
        all_centers = np.concatenate([centers, frozen])
        d2 = np.sum((pts[:, None, :] - all_centers[None, :, :]) ** 2, axis=-1)
        assign = np.argmin(d2, axis=1)
        min_d2 = d2[np.arange(pts.shape[0]), assign]
        history.append(float(min_d2.sum()))
        if step == EM_MAX_ITERS or (
            prev_assign is not None and np.array_equal(assign, prev_assign)
        ):
            break
        prev_assign = assign

        counts = np.bincount(assign, minlength=all_centers.shape[0])[:B]
        sums = np.zeros((all_centers.shape[0], 3))
        np.add.at(sums, assign, pts)
        occupied = counts > 0
        centers[occupied] = sums[:B][occupied] / counts[occupied, None]
        if not np.all(occupied):
            # Re-seed starved centers at the worst-covered lexicon points.
            order = np.argsort(-min_d2, kind="stable")
            centers[~occupied] = pts[order[: int(np.sum(~occupied))]]
        centers = np.clip(centers, -1.0, 1.0)

    return centers, history


def select_samples(B: int, prior_labels: Sequence[Vad],
                   lexicon: EmotionLexicon, rng_seed,
                   n_init: int = EM_DEFAULT_INITS) -> list[Vad]:
    """Choose B emotion points minimizing the lexicon coverage objective."""
    if B < 1:
        raise ValueError("need at least one sample per round")
    if n_init < 1:
        raise ValueError("need at least one initialization")
    rng = np.random.default_rng(rng_seed)
    pts = lexicon.points
    frozen = _as_points(prior_labels)

    best_centers: np.ndarray | None = None
    best_obj = np.inf
    for _ in range(n_init):
        picks = rng.choice(pts.shape[0], size=min(B, pts.shape[0]),
                           replace=False)
        init = pts[picks]
        if B > pts.shape[0]:
            extra = rng.uniform(-1.0, 1.0, (B - pts.shape[0], 3))
            init = np.concatenate([init, extra])
        centers, history = _em_run(init, frozen, pts)
        if history[-1] < best_obj:
            best_obj = history[-1]
            best_centers = centers

    assert best_centers is not None
    return [Vad.from_array(c) for c in best_centers]


@dataclass(frozen=True)
class QueryRoundState:
    """One labeling round: chosen emotion points and their query trajectories."""

    round_index: int
    batch_size: int
    samples: tuple[Vad, ...]
    queries: tuple[Trajectory, ...]
    tasks: tuple[Task, ...]

    def __post_init__(self) -> None:
        if self.round_index < 1:
            raise ValueError("rounds are numbered from 1")
        if not (len(self.samples) == len(self.queries) == len(self.tasks)
                == self.batch_size):
            raise ValueError("samples, queries and tasks must all have size B")

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "round_index": self.round_index,
            "batch_size": self.batch_size,
            "samples": [list(s.as_tuple()) for s in self.samples],
            "tasks": [t.to_json_dict() for t in self.tasks],
            "queries": [q.to_json_dict() for q in self.queries],
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "QueryRoundState":
        return cls(
            round_index=int(obj["round_index"]),
            batch_size=int(obj["batch_size"]),
            samples=tuple(Vad(*s) for s in obj["samples"]),
            tasks=tuple(Task.from_json_dict(t) for t in obj["tasks"]),
            queries=tuple(Trajectory.from_json_dict(q) for q in obj["queries"]),
        )

    def save(self, directory: str | Path) -> Path:
        path = Path(directory) / f"round_{self.round_index}.json"
        path.write_text(json.dumps(self.to_json_dict()), encoding="utf-8")
        return path

    @classmethod
    def load(cls, path: str | Path) -> "QueryRoundState":
        return cls.from_json_dict(
            json.loads(Path(path).read_text(encoding="utf-8"))
        )


def build_round(
    k: int,
    model: StyleNetParams,
    B: int,
    prior_labels: Sequence[Vad],
    lexicon: EmotionLexicon,
    rng_seed,
    cost: CostConfig = CostConfig(),
    opt: OptimizerConfig = OptimizerConfig(),
    task_sampler: Callable[[np.random.Generator], Task] = sample_task_rng,
) -> QueryRoundState:
    """Assemble one round: pick emotion points, then plan a query for each."""
    if k < 1:
        raise ValueError("rounds are numbered from 1")
    if isinstance(rng_seed, np.random.SeedSequence):
        root = rng_seed
    else:
        root = np.random.SeedSequence(rng_seed)
    sample_seed, task_seed, opt_seed = root.spawn(3)

    if k == 1:
        samples = first_round_samples(B, sample_seed)
    else:
        samples = select_samples(B, prior_labels, lexicon, sample_seed)

    task_rng = np.random.default_rng(task_seed)
    tasks = [task_sampler(task_rng) for _ in range(B)]
    targets = np.stack([s.as_array() for s in samples])
    try:
        result = optimize_batch(tasks, VadStyleTerm(model, targets), cost,
                                opt, seed=opt_seed)
    except OptimizationDiverged as exc:
        raise QueryPlanningError(k, exc.task_indices) from exc
    return QueryRoundState(
        round_index=k,
        batch_size=B,
        samples=tuple(samples),
        queries=tuple(result.trajectories),
        tasks=tuple(tasks),
    )
