"""Experiment harness: rating metrics, the method-comparison matrix, and
significance tests against analytic chance levels.

An experiment compares query-and-train methods ("ours" learns one VAD
predictor from emotive labels; "sep"/"sep_all" learn one scalar cost net per
emotion) across emotion-set sizes and seeds.  Each seed alternates labeling
rounds with an evaluation pass that plans fresh trajectories for every
evaluation emotion and scores them through the simulated rater:

* Likert items: for each diametric anchor pair (A, B), trajectories are
  planned for both ends and rated 1..7 on the A->B axis; the quality score
  maps a rating ``s`` to ``s`` for B-targets and ``8 - s`` for A-targets, so
  7 is perfect expression and 4 is chance.
* Choice items: one trajectory per emotion; the rater picks its two nearest
  emotions, and Top-1/Top-2 accuracy is the fraction of items whose intended
  emotion appears among them.

Determinism contract: every random decision draws from a seed stream derived
only from ``(seed, purpose)``, so reruns are byte-identical and evaluation
tasks are paired across methods (the evaluation streams do not depend on the
method) while remaining disjoint from training tasks.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np
from scipy import stats

from .baselines import (
    find_model,
    init_sep_models,
    sep_query_plan,
    sep_train_round,
)
from .sim import Trajectory, sample_task_rng
from .sim_human import (
    HeuristicConfig,
    default_heuristics,
    sh_label,
    sh_likert,
    sh_top_choices,
)
from .stylenet import (
    LabeledDataset,
    TrainConfig,
    init_params,
    stack_weights,
    train,
)
from .trajopt import (
    CostConfig,
    OptimizerConfig,
    ScalarStyleTerm,
    VadStyleTerm,
    optimize_batch,
)
from .vadspace import EvalEmotionSet, chance_levels, default_lexicon, eval_emotion_set

__all__ = [
    "METHODS",
    "METRICS",
    "CSV_COLUMNS",
    "ExperimentConfig",
    "MetricRecord",
    "TestResult",
    "quality_score",
    "topx_accuracy",
    "run_experiment",
    "run_experiment_to_dir",
    "render_metrics_csv",
    "write_metrics_csv",
    "load_metrics_csv",
    "aggregate_records",
    "significance_vs_random",
    "standard_error",
    "load_config",
]

METHODS = ("ours", "sep", "sep_all")
METRICS = ("quality", "top1", "top2")
EVAL_CADENCES = ("per_round", "final_only")
ORACLES = ("simulated", "live")

# Salt constants separating the seed streams.  Evaluation streams depend only
# on the seed (pairing evaluations across methods); training streams are
# additionally salted by method so methods explore independently.
_EVAL_SALT = 991
_METHOD_SALT = {"ours": 101, "sep": 202, "sep_all": 303}

CSV_COLUMNS = (
    "method",
    "n_emotions",
    "seed",
    "query_count",
    "quality_mean",
    "quality_se",
    "top1",
    "top1_se",
    "top2",
    "top2_se",
    "likert_items",
    "choice_items",
    "top1_sadness",
    "top1_joy",
    "top1_fear",
    "top1_confidence",
    "top1_anger",
    "top1_patience",
    "failed",
    "diagnostic",
)


# ---------------------------------------------------------------------------
# Configuration


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    """Declarative description of one experiment arm.

    ``alpha``/``opt_iters``/``opt_restarts``/``train_epochs`` are the
    experiment-level planner and training budgets; they intentionally push
    harder than the interactive defaults because the comparison needs the
    planner to track the learned style term closely.
    """

    exp_id: str
    method: str
    n_emotions: int
    rounds: int
    batch_size: int
    tasks_per_emotion: int
    seeds: tuple[int, ...]
    eval_cadence: str = "per_round"
    oracle: str = "simulated"
    label_noise_std: float = 0.0
    alpha: float = 50.0
    opt_iters: int = 1200
    opt_restarts: int = 3
    train_epochs: int = 2000
    hidden: int = 32
    hidden2: int = 16

    def __post_init__(self) -> None:
        if not self.exp_id or "/" in self.exp_id:
            raise ValueError("exp_id must be a non-empty path-safe name")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.n_emotions not in (2, 4, 6):
            raise ValueError("n_emotions must be an even count in {2, 4, 6}")
        if self.rounds < 1 or self.batch_size < 1:
            raise ValueError("need rounds >= 1 and batch_size >= 1")
        if self.tasks_per_emotion < 1:
            raise ValueError("tasks_per_emotion must be >= 1")
        if not self.seeds:
            raise ValueError("seeds must be non-empty")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("seeds must be unique")
        if self.eval_cadence not in EVAL_CADENCES:
            raise ValueError(f"eval_cadence must be one of {EVAL_CADENCES}")
        if self.oracle not in ORACLES:
            raise ValueError(f"oracle must be one of {ORACLES}")
        if self.label_noise_std < 0:
            raise ValueError("label_noise_std must be nonnegative")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if self.opt_iters < 1 or self.opt_restarts < 1:
            raise ValueError("need opt_iters >= 1 and opt_restarts >= 1")
        if self.train_epochs < 1:
            raise ValueError("train_epochs must be >= 1")
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))

    def to_json_dict(self) -> dict:
        return {
            "exp_id": self.exp_id,
            "method": self.method,
            "n_emotions": self.n_emotions,
            "rounds": self.rounds,
            "batch_size": self.batch_size,
            "tasks_per_emotion": self.tasks_per_emotion,
            "seeds": list(self.seeds),
            "eval_cadence": self.eval_cadence,
            "oracle": self.oracle,
            "label_noise_std": self.label_noise_std,
            "planner": {
                "alpha": self.alpha,
                "opt_iters": self.opt_iters,
                "opt_restarts": self.opt_restarts,
            },
            "training": {
                "train_epochs": self.train_epochs,
                "hidden": self.hidden,
                "hidden2": self.hidden2,
            },
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "ExperimentConfig":
        data = dict(payload)
        planner = dict(data.pop("planner", {}))
        training = dict(data.pop("training", {}))
        kwargs = dict(data)
        kwargs["seeds"] = tuple(data["seeds"])
        for key in ("alpha", "opt_iters", "opt_restarts"):
            if key in planner:
                kwargs[key] = planner[key]
        for key in ("train_epochs", "hidden", "hidden2"):
            if key in training:
                kwargs[key] = training[key]
        return cls(**kwargs)


def load_config(path: str | Path) -> ExperimentConfig:
    """Read a declarative experiment config from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        return ExperimentConfig.from_json_dict(json.load(fh))


# ---------------------------------------------------------------------------
# Metrics


def quality_score(responses: Sequence[tuple[float, str]]) -> float:
    """Mean alignment score of Likert responses on diametric axes.

    Each response is ``(s, optimized_for)`` where ``s`` is the 1..7 rating on
    the A->B axis and ``optimized_for`` says which end the trajectory was
    planned for.  B-targets score ``s`` directly; A-targets score ``8 - s``.
    """
    if not responses:
        raise ValueError("need at least one response")
    total = 0.0
    for s, side in responses:
        if not 1 <= s <= 7:
            raise ValueError(f"Likert score {s!r} outside [1, 7]")
        if side == "B":
            total += float(s)
        elif side == "A":
            total += 8.0 - float(s)
        else:
            raise ValueError(f"optimized_for must be 'A' or 'B', got {side!r}")
    return total / len(responses)


def topx_accuracy(choices: Sequence[tuple[str, str, str]], x: int) -> float:
    """Fraction of (first, second, intended) picks with intended in the top x."""
    if x not in (1, 2):
        raise ValueError("x must be 1 or 2")
    if not choices:
        raise ValueError("need at least one choice item")
    hits = 0
    for first, second, intended in choices:
        top = (first,) if x == 1 else (first, second)
        hits += intended in top
    return hits / len(choices)


def standard_error(values: Sequence[float]) -> float:
    arr = np.asarray(values, dtype=float)
    if arr.size < 2:
        return 0.0
    return float(np.std(arr, ddof=1) / math.sqrt(arr.size))


# ---------------------------------------------------------------------------
# Records


_NAN_WHEN_FAILED = (
    "quality_mean", "quality_se", "top1", "top1_se", "top2", "top2_se",
)


@dataclass(frozen=True, slots=True)
class MetricRecord:
    """One evaluation point for one (method, N, seed) at a query count."""

    method: str
    n_emotions: int
    seed: int
    query_count: int
    quality_mean: float
    quality_se: float
    top1: float
    top1_se: float
    top2: float
    top2_se: float
    likert_items: int
    choice_items: int
    per_emotion_top1: Mapping[str, float] = field(default_factory=dict)
    failed: bool = False
    diagnostic: str = ""

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.n_emotions not in (2, 4, 6):
            raise ValueError("n_emotions must be in {2, 4, 6}")
        if self.query_count < 0:
            raise ValueError("query_count must be nonnegative")
        object.__setattr__(self, "per_emotion_top1",
                           dict(self.per_emotion_top1))
        if self.failed:
            if not self.diagnostic:
                raise ValueError("failed records need a diagnostic message")
            for name in _NAN_WHEN_FAILED:
                if not math.isnan(getattr(self, name)):
                    raise ValueError("failed records carry NaN metrics")
            return
        if not 1.0 <= self.quality_mean <= 7.0:
            raise ValueError("quality_mean must lie in [1, 7]")
        if not 0.0 <= self.top1 <= self.top2 <= 1.0:
            raise ValueError("need 0 <= top1 <= top2 <= 1")
        if self.likert_items < 1 or self.choice_items < 1:
            raise ValueError("evaluation must contain items")
        for name, value in self.per_emotion_top1.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"per-emotion top1 for {name} outside [0, 1]")

    @classmethod
    def failure(cls, method: str, n_emotions: int, seed: int,
                query_count: int, diagnostic: str) -> "MetricRecord":
        nan = float("nan")
        return cls(method=method, n_emotions=n_emotions, seed=seed,
                   query_count=query_count, quality_mean=nan, quality_se=nan,
                   top1=nan, top1_se=nan, top2=nan, top2_se=nan,
                   likert_items=0, choice_items=0, per_emotion_top1={},
                   failed=True, diagnostic=diagnostic)


# ---------------------------------------------------------------------------
# Method state: query planning, labeling, retraining, evaluation styling


class _OursState:
    """Single VAD-predicting network trained on emotive labels."""

    def __init__(self, cfg: ExperimentConfig, es: EvalEmotionSet,
                 sh_cfg: HeuristicConfig, net_seed: np.random.SeedSequence):
        self.cfg = cfg
        self.es = es
        self.sh_cfg = sh_cfg
        self.params = init_params(net_seed, hidden=cfg.hidden,
                                  hidden2=cfg.hidden2, head="tanh")
        self.data = LabeledDataset()
        self.schedule = TrainConfig(epochs=cfg.train_epochs)

    def plan_round(self, query_rng: np.random.Generator) -> list[str]:
        idx = query_rng.integers(0, self.cfg.n_emotions,
                                 size=self.cfg.batch_size)
        return [self.es.names[i] for i in idx]

    def style_for(self, emotions: Sequence[str]) -> VadStyleTerm:
        targets = np.stack([self.es.anchor(e).as_array() for e in emotions])
        return VadStyleTerm(self.params, targets)

    def absorb_round(self, emotions: Sequence[str],
                     trajectories: Sequence[Trajectory], round_index: int,
                     sh_seed: np.random.SeedSequence) -> None:
        item_seeds = sh_seed.spawn(len(trajectories))
        for traj, item_seed in zip(trajectories, item_seeds):
            label = sh_label(traj, self.sh_cfg, rng_seed=item_seed)
            self.data.append(traj, label, round_index)
        self.params = train(self.params, self.data, self.schedule)


class _SepState:
    """One scalar cost network per evaluation emotion."""

    def __init__(self, cfg: ExperimentConfig, es: EvalEmotionSet,
                 sh_cfg: HeuristicConfig, net_seed: np.random.SeedSequence):
        self.cfg = cfg
        self.es = es
        self.sh_cfg = sh_cfg
        self.models = init_sep_models(es.names, _ss_int(net_seed),
                                      hidden=cfg.hidden, hidden2=cfg.hidden2)
        self.schedule = TrainConfig(epochs=cfg.train_epochs)

    def plan_round(self, query_rng: np.random.Generator) -> list[str]:
        return sep_query_plan(self.cfg.n_emotions, self.cfg.batch_size,
                              query_rng, self.es)

    def style_for(self, emotions: Sequence[str]) -> ScalarStyleTerm:
        params = [find_model(self.models, e).params for e in emotions]
        return ScalarStyleTerm(params[0], stack_weights(params))

    def absorb_round(self, emotions: Sequence[str],
                     trajectories: Sequence[Trajectory], round_index: int,
                     sh_seed: np.random.SeedSequence) -> None:
        queries = list(zip(emotions, trajectories))
        self.models = sep_train_round(
            self.models, queries, self.cfg.method, self.es,
            cfg=self.sh_cfg, schedule=self.schedule,
            rng_seed=_ss_int(sh_seed))


def _ss_int(ss: np.random.SeedSequence) -> int:
    """Collapse a seed stream into one integer seed."""
    return int(ss.generate_state(1, np.uint64)[0])


# ---------------------------------------------------------------------------
# Evaluation pass


def _evaluate(state, cfg: ExperimentConfig, query_count: int, seed: int,
              eval_task_rng: np.random.Generator,
              opt_seed: np.random.SeedSequence,
              sh_seed: np.random.SeedSequence,
              cost_cfg: CostConfig, opt_cfg: OptimizerConfig) -> MetricRecord:
    es: EvalEmotionSet = state.es
    m = cfg.tasks_per_emotion

    # Likert items: for each diametric pair, M trajectories per end.
    likert_specs: list[tuple[str, str, int]] = []  # (emotion, side, pair idx)
    for pair_idx, (name_a, name_b) in enumerate(es.pairs()):
        likert_specs += [(name_a, "A", pair_idx)] * m
        likert_specs += [(name_b, "B", pair_idx)] * m
    # Choice items: M trajectories per emotion.
    choice_specs = [name for name in es.names for _ in range(m)]

    emotions = [spec[0] for spec in likert_specs] + choice_specs
    tasks = [sample_task_rng(eval_task_rng) for _ in emotions]
    result = optimize_batch(tasks, state.style_for(emotions), cost_cfg,
                            opt_cfg, seed=opt_seed)
    trajectories = result.trajectories
    item_seeds = sh_seed.spawn(len(emotions))

    responses: list[tuple[int, str]] = []
    item_q: list[float] = []
    pairs = es.pairs()
    for i, (emotion, side, pair_idx) in enumerate(likert_specs):
        anchor_a = es.anchor(pairs[pair_idx][0])
        anchor_b = es.anchor(pairs[pair_idx][1])
        s = sh_likert(trajectories[i], (anchor_a, anchor_b), state.sh_cfg,
                      rng_seed=item_seeds[i])
        responses.append((s, side))
        item_q.append(float(s) if side == "B" else 8.0 - float(s))

    offset = len(likert_specs)
    choices: list[tuple[str, str, str]] = []
    for j, intended in enumerate(choice_specs):
        first, second = sh_top_choices(trajectories[offset + j], es,
                                       state.sh_cfg,
                                       rng_seed=item_seeds[offset + j])
        choices.append((first, second, intended))

    top1_hits = [float(c[2] == c[0]) for c in choices]
    top2_hits = [float(c[2] in c[:2]) for c in choices]
    per_emotion = {
        name: topx_accuracy([c for c in choices if c[2] == name], 1)
        for name in es.names
    }
    return MetricRecord(
        method=cfg.method, n_emotions=cfg.n_emotions, seed=seed,
        query_count=query_count,
        quality_mean=quality_score(responses), quality_se=standard_error(item_q),
        top1=topx_accuracy(choices, 1), top1_se=standard_error(top1_hits),
        top2=topx_accuracy(choices, 2), top2_se=standard_error(top2_hits),
        likert_items=len(responses), choice_items=len(choices),
        per_emotion_top1=per_emotion,
    )


# ---------------------------------------------------------------------------
# The experiment loop


def _run_seed(cfg: ExperimentConfig, seed: int, es: EvalEmotionSet,
              sh_cfg: HeuristicConfig) -> list[MetricRecord]:
    cost_cfg = CostConfig(alpha=cfg.alpha)
    opt_cfg = OptimizerConfig(iters=cfg.opt_iters, restarts=cfg.opt_restarts)

    # Evaluation streams are method-independent: evaluations at the same
    # (seed, round) see identical tasks and optimizer noise for every method.
    eval_ss = np.random.SeedSequence((seed, _EVAL_SALT))
    eval_task_ss, eval_opt_ss, eval_sh_ss = eval_ss.spawn(3)
    eval_task_rng = np.random.default_rng(eval_task_ss)
    eval_opt_seeds = eval_opt_ss.spawn(cfg.rounds + 1)
    eval_sh_seeds = eval_sh_ss.spawn(cfg.rounds + 1)

    # Training streams are method-salted.
    train_ss = np.random.SeedSequence((seed, _METHOD_SALT[cfg.method]))
    net_ss, task_ss, query_ss, sh_ss, opt_ss = train_ss.spawn(5)
    train_task_rng = np.random.default_rng(task_ss)
    query_rng = np.random.default_rng(query_ss)
    train_sh_seeds = sh_ss.spawn(cfg.rounds)
    train_opt_seeds = opt_ss.spawn(cfg.rounds)

    state_cls = _OursState if cfg.method == "ours" else _SepState
    query_count = 0
    records: list[MetricRecord] = []
    try:
        state = state_cls(cfg, es, sh_cfg, net_ss)
        records.append(_evaluate(state, cfg, 0, seed, eval_task_rng,
                                 eval_opt_seeds[0], eval_sh_seeds[0],
                                 cost_cfg, opt_cfg))
        for k in range(1, cfg.rounds + 1):
            emotions = state.plan_round(query_rng)
            tasks = [sample_task_rng(train_task_rng) for _ in emotions]
            result = optimize_batch(tasks, state.style_for(emotions),
                                    cost_cfg, opt_cfg,
                                    seed=train_opt_seeds[k - 1])
            state.absorb_round(emotions, result.trajectories, k,
                               train_sh_seeds[k - 1])
            query_count = k * cfg.batch_size
            if cfg.eval_cadence == "per_round" or k == cfg.rounds:
                records.append(_evaluate(state, cfg, query_count, seed,
                                         eval_task_rng, eval_opt_seeds[k],
                                         eval_sh_seeds[k], cost_cfg, opt_cfg))
    except Exception as exc:  # noqa: BLE001 - a failed seed must not sink the run
        records.append(MetricRecord.failure(
            cfg.method, cfg.n_emotions, seed, query_count,
            f"{type(exc).__name__}: {exc}"))
    return records


def run_experiment(cfg: ExperimentConfig) -> list[MetricRecord]:
    """Run every seed of one experiment arm and return its metric records.

    Live-oracle configs are driven interactively through the labeling
    service, not this batch loop.
    """
    if cfg.oracle == "live":
        raise ValueError(
            "live-oracle experiments collect labels through the session "
            "service; run_experiment only drives the simulated rater")
    lexicon = default_lexicon()
    es = eval_emotion_set(lexicon, cfg.n_emotions)
    sh_cfg = default_heuristics()
    if cfg.label_noise_std > 0:
        sh_cfg = sh_cfg.with_noise(cfg.label_noise_std)
    records: list[MetricRecord] = []
    for seed in cfg.seeds:
        records.extend(_run_seed(cfg, seed, es, sh_cfg))
    return records


# ---------------------------------------------------------------------------
# CSV emission


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        if value == int(value) and abs(value) < 1e15:
            return str(int(value)) + ".0"
        return repr(value)
    return str(value)


def _record_row(record: MetricRecord) -> list[str]:
    base = {
        "method": record.method,
        "n_emotions": record.n_emotions,
        "seed": record.seed,
        "query_count": record.query_count,
        "quality_mean": record.quality_mean,
        "quality_se": record.quality_se,
        "top1": record.top1,
        "top1_se": record.top1_se,
        "top2": record.top2,
        "top2_se": record.top2_se,
        "likert_items": record.likert_items,
        "choice_items": record.choice_items,
        "failed": record.failed,
        "diagnostic": record.diagnostic.replace("\n", " ").replace("\r", " "),
    }
    for column in CSV_COLUMNS:
        if column.startswith("top1_") and column != "top1_se":
            name = column[len("top1_"):]
            base[column] = record.per_emotion_top1.get(name)
    return [_format_cell(base[column]) for column in CSV_COLUMNS]


def render_metrics_csv(records: Sequence[MetricRecord]) -> str:
    """Deterministic CSV text with the frozen column schema."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(_record_row(record))
    return buffer.getvalue()


def write_metrics_csv(records: Sequence[MetricRecord],
                      path: str | Path) -> None:
    Path(path).write_text(render_metrics_csv(records), encoding="utf-8")


def load_metrics_csv(path: str | Path) -> list[MetricRecord]:
    """Rehydrate records from a metrics CSV file."""
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError("unexpected metrics CSV columns")
        for row in reader:
            def fnum(key: str, row=row) -> float:
                return float(row[key]) if row[key] else float("nan")

            per_emotion = {}
            for column in CSV_COLUMNS:
                if column.startswith("top1_") and column != "top1_se":
                    if row[column]:
                        per_emotion[column[len("top1_"):]] = float(row[column])
            records.append(MetricRecord(
                method=row["method"], n_emotions=int(row["n_emotions"]),
                seed=int(row["seed"]), query_count=int(row["query_count"]),
                quality_mean=fnum("quality_mean"),
                quality_se=fnum("quality_se"),
                top1=fnum("top1"), top1_se=fnum("top1_se"),
                top2=fnum("top2"), top2_se=fnum("top2_se"),
                likert_items=int(row["likert_items"]),
                choice_items=int(row["choice_items"]),
                per_emotion_top1=per_emotion,
                failed=row["failed"] == "true",
                diagnostic=row["diagnostic"],
            ))
    return records


def run_experiment_to_dir(cfg: ExperimentConfig,
                          results_root: str | Path) -> Path:
    """Run an experiment and write metrics.csv plus figure SVGs."""
    from . import plots

    records = run_experiment(cfg)
    out_dir = Path(results_root) / cfg.exp_id
    out_dir.mkdir(parents=True, exist_ok=True)
    write_metrics_csv(records, out_dir / "metrics.csv")
    (out_dir / "fig4.svg").write_text(plots.learning_curves_svg(records),
                                      encoding="utf-8")
    (out_dir / "fig5.svg").write_text(plots.final_vs_n_svg(records),
                                      encoding="utf-8")
    (out_dir / "config.json").write_text(
        json.dumps(cfg.to_json_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    return out_dir


# ---------------------------------------------------------------------------
# Aggregation and statistics


def aggregate_records(records: Sequence[MetricRecord]
                      ) -> dict[tuple[str, int, int], dict[str, float]]:
    """Mean and across-seed standard error per (method, N, query_count)."""
    groups: dict[tuple[str, int, int], list[MetricRecord]] = {}
    for record in records:
        if record.failed:
            continue
        key = (record.method, record.n_emotions, record.query_count)
        groups.setdefault(key, []).append(record)
    out = {}
    for key, group in groups.items():
        entry: dict[str, float] = {"n_seeds": float(len(group))}
        for metric, attr in (("quality", "quality_mean"), ("top1", "top1"),
                             ("top2", "top2")):
            values = [getattr(r, attr) for r in group]
            entry[metric] = float(np.mean(values))
            entry[f"{metric}_se"] = standard_error(values)
        out[key] = entry
    return out


@dataclass(frozen=True, slots=True)
class TestResult:
    """One-sample t-test of session metrics against the chance level."""

    metric: str
    scope: str
    chance: float
    n_sessions: int
    mean: float
    t_stat: float
    p_value: float
    reject: bool


def _one_sample_test(values: Sequence[float], chance: float, level: float,
                     metric: str, scope: str) -> TestResult:
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if float(np.ptp(arr)) == 0.0:
        # Zero variance: the t statistic is undefined.  Identical-to-chance
        # sessions show no effect; identical-off-chance sessions are an
        # unambiguous (degenerate) rejection.
        if mean == chance:
            t_stat, p_value = 0.0, 1.0
        else:
            t_stat = math.copysign(math.inf, mean - chance)
            p_value = 0.0
    else:
        t_stat, p_value = stats.ttest_1samp(arr, chance)
    return TestResult(metric=metric, scope=scope, chance=chance,
                      n_sessions=int(arr.size), mean=mean,
                      t_stat=float(t_stat), p_value=float(p_value),
                      reject=bool(p_value < level))


def significance_vs_random(records: Sequence[MetricRecord], metric: str,
                           level: float = 0.05) -> dict[str, TestResult]:
    """t-tests of per-session metrics against analytic chance.

    Returns an ``overall`` result, plus one per evaluation emotion when the
    metric is ``top1`` (the only metric recorded per emotion).
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}")
    live = [r for r in records if not r.failed]
    if len(live) < 2:
        raise ValueError("need at least two sessions")
    sizes = {r.n_emotions for r in live}
    if len(sizes) != 1:
        raise ValueError("sessions must share one emotion-set size")
    n = sizes.pop()
    chance = chance_levels(n)[metric]
    attr = "quality_mean" if metric == "quality" else metric
    results = {"overall": _one_sample_test([getattr(r, attr) for r in live],
                                           chance, level, metric, "overall")}
    if metric == "top1":
        names = live[0].per_emotion_top1.keys()
        for name in names:
            values = [r.per_emotion_top1[name] for r in live
                      if name in r.per_emotion_top1]
            if len(values) == len(live):
                results[name] = _one_sample_test(values, chance, level,
                                                 metric, name)
    return results
