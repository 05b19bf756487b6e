"""A heuristic stand-in for a human labeler of VacuumBot motion.

The simulated human watches a trajectory, extracts five interpretable motion
features, and mixes them linearly into a VAD judgment:

* speed — time-weighted mean planar speed;
* height — time-weighted mean height above ground;
* smoothness — one minus normalized linear jerk (acceleration change rate);
* bounce — vertical direction reversals (sign flips of vy) per second;
* posture — time-weighted mean of cos(phi), i.e. uprightness.

Speed, height and bounce are squashed through ``(value - ref)/(value + ref)``,
which spans exactly [-1, 1) for nonnegative values: -1 at rest, 0 at the
reference scale, saturating toward 1.  Smoothness is ``tanh(1 - jerk/ref)``
and posture is already in [-1, 1].  Each VAD axis is dominated by one motion
quality — valence by posture (an upright robot reads as content, a drooping
or inverted one as dejected), arousal by speed, dominance by height — with
small garnish terms (gentle motion nudges valence up, jerky motion nudges
arousal up, lively bobbing nudges dominance up).  The mixing matrix and
reference scales are
frozen in the shipped ``sh_default.json`` so every experiment runs against
the same perceptual model.  The same label also powers the questionnaire
answers: Likert scores project the label onto the axis between two emotion
anchors, forced-choice answers pick the nearest anchors, and scalar cost
feedback is the squared distance from the label to the requested emotion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .sim import Trajectory
from .vadspace import EvalEmotionSet, Vad, nearest_emotions

FEATURE_ORDER = ("speed", "height", "smoothness", "bounce", "posture")
CONFIG_FORMAT = 1

# Vertical speeds below this (m/s) count as "not moving vertically" when
# detecting direction reversals.  The band is perceptual, not numerical: a
# reversal only registers when the robot visibly moves up and then down, so
# optimizer jitter around vy=0 cannot read as bobbing, and any motion that
# does read as bobbing leaves a footprint (time spent at |vy| >= 0.05 with
# bounded altitude) that downstream trajectory statistics can detect.
_VY_DEADBAND = 0.05


@dataclass(frozen=True)
class HeuristicConfig:
    """Feature scales, mixing matrix and label noise of the simulated human."""

    speed_ref: float = 0.6
    height_ref: float = 0.3
    jerk_ref: float = 240.0
    bounce_ref: float = 0.35
    mixing: np.ndarray = None  # (3, 5) rows V/A/D over FEATURE_ORDER
    label_noise_std: float = 0.0

    def __post_init__(self) -> None:
        for name in ("speed_ref", "height_ref", "jerk_ref", "bounce_ref"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.label_noise_std < 0:
            raise ValueError("label_noise_std must be nonnegative")
        mixing = np.asarray(
            self.mixing if self.mixing is not None else _DEFAULT_MIXING,
            dtype=float,
        )
        if mixing.shape != (3, len(FEATURE_ORDER)):
            raise ValueError("mixing must be 3 rows over the 5 features")
        if not np.all(np.isfinite(mixing)):
            raise ValueError("mixing must be finite")
        mixing.setflags(write=False)
        object.__setattr__(self, "mixing", mixing)

    def with_noise(self, std: float) -> "HeuristicConfig":
        return replace(self, label_noise_std=std)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "format_version": CONFIG_FORMAT,
            "feature_order": list(FEATURE_ORDER),
            "speed_ref": self.speed_ref,
            "height_ref": self.height_ref,
            "jerk_ref": self.jerk_ref,
            "bounce_ref": self.bounce_ref,
            "mixing": {
                "valence": self.mixing[0].tolist(),
                "arousal": self.mixing[1].tolist(),
                "dominance": self.mixing[2].tolist(),
            },
            "label_noise_std": self.label_noise_std,
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "HeuristicConfig":
        if obj.get("format_version") != CONFIG_FORMAT:
            raise ValueError("unsupported heuristic config format")
        if obj.get("feature_order") != list(FEATURE_ORDER):
            raise ValueError("heuristic config feature order mismatch")
        mixing = np.array(
            [obj["mixing"]["valence"], obj["mixing"]["arousal"],
             obj["mixing"]["dominance"]],
            dtype=float,
        )
        return cls(
            speed_ref=float(obj["speed_ref"]),
            height_ref=float(obj["height_ref"]),
            jerk_ref=float(obj["jerk_ref"]),
            bounce_ref=float(obj["bounce_ref"]),
            mixing=mixing,
            label_noise_std=float(obj["label_noise_std"]),
        )


_DEFAULT_MIXING = (
    (0.0, 0.0, 0.10, 0.0, 0.90),
    (0.90, 0.0, -0.10, 0.0, 0.0),
    (0.0, 0.90, 0.0, 0.10, 0.0),
)

_default_cache: HeuristicConfig | None = None


def default_heuristics() -> HeuristicConfig:
    """The frozen configuration shipped with the package."""
    global _default_cache
    if _default_cache is None:
        text = (
            resources.files("emovac.data")
            .joinpath("sh_default.json")
            .read_text(encoding="utf-8")
        )
        _default_cache = HeuristicConfig.from_json_dict(json.loads(text))
    return _default_cache


def load_heuristics(path: str | Path) -> HeuristicConfig:
    return HeuristicConfig.from_json_dict(
        json.loads(Path(path).read_text(encoding="utf-8"))
    )


# ---------------------------------------------------------------------------
# Features


def sh_features(traj: Trajectory,
                cfg: HeuristicConfig | None = None) -> dict[str, float]:
    """Raw (unnormalized) motion features of one trajectory."""
    cfg = cfg or default_heuristics()
    w, dts = traj.to_arrays()
    total = float(dts.sum())

    def time_mean(values: np.ndarray) -> float:
        seg = 0.5 * (values[:-1] + values[1:]) * dts
        return float(seg.sum() / total)

    speed = time_mean(np.hypot(w[:, 3], w[:, 4]))
    height = time_mean(w[:, 1])
    posture = time_mean(np.cos(w[:, 2]))

    if traj.length >= 3:
        acc = (w[1:, 3:5] - w[:-1, 3:5]) / dts[:, None]
        jumps = np.linalg.norm(acc[1:] - acc[:-1], axis=1)
        dt_mid = 0.5 * (dts[:-1] + dts[1:])
        jerk = float(np.mean(jumps / dt_mid))
    else:
        jerk = 0.0

    vy_sign = np.sign(w[:, 4])
    vy_sign[np.abs(w[:, 4]) < _VY_DEADBAND] = 0.0
    moving = vy_sign[vy_sign != 0.0]
    flips = int(np.sum(moving[1:] != moving[:-1])) if moving.size else 0
    bounce = flips / total

    return {
        "speed": speed,
        "height": height,
        "smoothness": jerk,  # raw jerk; normalization flips the sign
        "bounce": bounce,
        "posture": posture,
    }


def _saturating(value: float, ref: float) -> float:
    """Map a nonnegative quantity to [-1, 1): -1 at zero, 0 at ``ref``."""
    v = max(value, 0.0)
    return (v - ref) / (v + ref)


def normalized_features(traj: Trajectory, cfg: HeuristicConfig) -> np.ndarray:
    """The five squashed features, ordered per ``FEATURE_ORDER``."""
    raw = sh_features(traj, cfg)
    return np.array(
        [
            _saturating(raw["speed"], cfg.speed_ref),
            _saturating(raw["height"], cfg.height_ref),
            np.tanh(1.0 - raw["smoothness"] / cfg.jerk_ref),
            _saturating(raw["bounce"], cfg.bounce_ref),
            raw["posture"],
        ]
    )


# ---------------------------------------------------------------------------
# Labeling and questionnaire answers


def sh_label(traj: Trajectory, cfg: HeuristicConfig | None = None,
             rng_seed=0) -> Vad:
    """The simulated human's VAD judgment of one trajectory."""
    cfg = cfg or default_heuristics()
    vad = cfg.mixing @ normalized_features(traj, cfg)
    if cfg.label_noise_std > 0:
        rng = np.random.default_rng(rng_seed)
        vad = vad + rng.normal(0.0, cfg.label_noise_std, 3)
    return Vad.from_array(np.clip(vad, -1.0, 1.0))


def likert_from_vad(v: Vad, anchor_a: Vad, anchor_b: Vad) -> int:
    """Project a VAD point onto the A->B axis and read a 1..7 score."""
    a, b = anchor_a.as_array(), anchor_b.as_array()
    axis = b - a
    denom = float(axis @ axis)
    if denom == 0.0:
        raise ValueError("anchors must differ")
    t = float((v.as_array() - a) @ axis) / denom
    return int(np.rint(1.0 + 6.0 * np.clip(t, 0.0, 1.0)))


def sh_likert(traj: Trajectory, pair: tuple[Vad, Vad],
              cfg: HeuristicConfig | None = None, rng_seed=0) -> int:
    """Rate a trajectory on the 1..7 axis between two emotion anchors."""
    return likert_from_vad(sh_label(traj, cfg, rng_seed), pair[0], pair[1])


def top_choices_from_vad(v: Vad, emotion_set: EvalEmotionSet
                         ) -> tuple[str, str]:
    first, second = nearest_emotions(v, emotion_set, 2)
    return first, second


def sh_top_choices(traj: Trajectory, emotion_set: EvalEmotionSet,
                   cfg: HeuristicConfig | None = None, rng_seed=0
                   ) -> tuple[str, str]:
    """The two evaluation emotions nearest the simulated human's label."""
    return top_choices_from_vad(sh_label(traj, cfg, rng_seed), emotion_set)


def sh_emotion_cost(traj: Trajectory, target: Vad,
                    cfg: HeuristicConfig | None = None, rng_seed=0) -> float:
    """Scalar expressiveness cost: squared distance from label to target."""
    delta = sh_label(traj, cfg, rng_seed).as_array() - target.as_array()
    return float(delta @ delta)
