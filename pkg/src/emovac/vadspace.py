"""The valence-arousal-dominance (VAD) emotion space and the word lexicon.

The latent space is the cube [-1, 1]^3.  An emotion lexicon maps curated
emotive words onto points of that cube; its empirical distribution drives
query selection, and six named evaluation emotions (three diametric pairs)
anchor the benchmark protocol.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

# Canonical evaluation-emotion order; consecutive entries form diametric
# pairs (sadness/joy, fear/confidence, anger/patience).  Benchmarks with
# fewer emotions always use a prefix of this list.
EVAL_EMOTION_NAMES = ("sadness", "joy", "fear", "confidence", "anger", "patience")


class LexiconError(ValueError):
    """Raised when a lexicon file cannot be parsed."""


@dataclass(frozen=True, slots=True)
class Vad:
    """A point in the emotion space: valence, arousal, dominance in [-1, 1]."""

    valence: float
    arousal: float
    dominance: float

    def __post_init__(self) -> None:
        for name in ("valence", "arousal", "dominance"):
            value = getattr(self, name)
            if not np.isfinite(value) or not -1.0 <= value <= 1.0:
                raise ValueError(f"{name}={value!r} outside [-1, 1]")

    @classmethod
    def of(cls, valence: float, arousal: float, dominance: float,
           clamp: bool = False) -> "Vad":
        """Construct a point, optionally clamping components into [-1, 1]."""
        vals = [float(valence), float(arousal), float(dominance)]
        if clamp:
            vals = [min(1.0, max(-1.0, v)) for v in vals]
        return cls(*vals)

    @classmethod
    def from_array(cls, arr: Iterable[float], clamp: bool = False) -> "Vad":
        v, a, d = (float(x) for x in arr)
        return cls.of(v, a, d, clamp=clamp)

    def as_array(self) -> np.ndarray:
        return np.array([self.valence, self.arousal, self.dominance])

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.valence, self.arousal, self.dominance)


@dataclass(frozen=True)
class EmotionLexicon:
    """Curated emotive words with their VAD coordinates (signed scale)."""

    words: tuple[str, ...]
    points: np.ndarray  # (D, 3), each row in [-1, 1]^3

    def __post_init__(self) -> None:
        if len(self.words) != self.points.shape[0]:
            raise ValueError("word list and point matrix disagree in length")
        if len(set(self.words)) != len(self.words):
            raise ValueError("lexicon words must be unique")
        if any((not w) or (w != w.lower()) for w in self.words):
            raise ValueError("lexicon words must be non-empty and lower-case")
        if self.points.shape[1:] != (3,):
            raise ValueError("points must be (D, 3)")
        if np.any(np.abs(self.points) > 1.0) or not np.all(np.isfinite(self.points)):
            raise ValueError("lexicon points must lie in [-1, 1]^3")
        self.points.setflags(write=False)

    @property
    def count(self) -> int:
        return len(self.words)

    @property
    def entries(self) -> list[tuple[str, Vad]]:
        return [(w, Vad.from_array(p)) for w, p in zip(self.words, self.points)]

    def lookup(self, word: str) -> Vad | None:
        idx = self._index().get(word.lower())
        return None if idx is None else Vad.from_array(self.points[idx])

    def _index(self) -> dict[str, int]:
        cached = getattr(self, "_word_index", None)
        if cached is None:
            cached = {w: i for i, w in enumerate(self.words)}
            object.__setattr__(self, "_word_index", cached)
        return cached


@dataclass(frozen=True)
class EvalEmotionSet:
    """The ordered evaluation emotions with their lexicon-derived anchors."""

    names: tuple[str, ...]
    anchors: np.ndarray  # (N, 3)

    def __post_init__(self) -> None:
        n = len(self.names)
        if n not in (2, 4, 6) or n % 2 != 0:
            raise ValueError("evaluation set size must be one of {2, 4, 6}")
        if self.names != EVAL_EMOTION_NAMES[:n]:
            raise ValueError(
                f"evaluation emotions must be the first {n} of {EVAL_EMOTION_NAMES}"
            )
        if self.anchors.shape != (n, 3):
            raise ValueError("anchor matrix must be (N, 3)")
        # Consecutive entries must be exact diametric partners.
        for i in range(0, n, 2):
            if not np.array_equal(self.anchors[i], -self.anchors[i + 1]):
                raise ValueError(
                    f"{self.names[i]} and {self.names[i + 1]} are not diametric"
                )
        self.anchors.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.names)

    def anchor(self, name: str) -> Vad:
        return Vad.from_array(self.anchors[self.names.index(name)])

    def pairs(self) -> list[tuple[str, str]]:
        """Diametric pairs in order: [(sadness, joy), (fear, confidence), ...]."""
        return [(self.names[i], self.names[i + 1]) for i in range(0, self.n, 2)]


def scale_unit_to_signed(x: np.ndarray | float) -> np.ndarray | float:
    """Affine rescale [0, 1] -> [-1, 1]."""
    return 2.0 * x - 1.0


def unscale_signed_to_unit(x: np.ndarray | float) -> np.ndarray | float:
    """Inverse of :func:`scale_unit_to_signed`."""
    return (x + 1.0) / 2.0


def load_lexicon(path: str | Path, raw_scale: str = "unit_interval") -> EmotionLexicon:
    """Parse a tab-separated ``word<TAB>V<TAB>A<TAB>D`` file with one header line.

    ``raw_scale`` is ``unit_interval`` (values in [0, 1], rescaled to [-1, 1])
    or ``signed`` (values already in [-1, 1]).  Duplicate words keep their
    first occurrence; a warning reports how many rows were dropped.
    """
    if raw_scale not in ("unit_interval", "signed"):
        raise ValueError(f"unknown raw_scale {raw_scale!r}")
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if len(lines) < 2:
        raise LexiconError(f"{path}: empty lexicon (need header plus rows)")

    words: list[str] = []
    rows: list[list[float]] = []
    seen: set[str] = set()
    duplicates = 0
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise LexiconError(f"{path}:{lineno}: expected 4 tab-separated fields")
        word = parts[0].strip().lower()
        if not word:
            raise LexiconError(f"{path}:{lineno}: empty word")
        try:
            triple = [float(p) for p in parts[1:]]
        except ValueError as exc:
            raise LexiconError(f"{path}:{lineno}: non-numeric value") from exc
        if word in seen:
            duplicates += 1
            continue
        seen.add(word)
        words.append(word)
        rows.append(triple)
    if not words:
        raise LexiconError(f"{path}: no data rows")
    if duplicates:
        warnings.warn(f"{path}: ignored {duplicates} duplicate word rows")

    points = np.asarray(rows, dtype=float)
    if raw_scale == "unit_interval":
        if np.any(points < 0.0) or np.any(points > 1.0):
            raise LexiconError(f"{path}: values outside [0, 1] for unit_interval")
        points = scale_unit_to_signed(points)
    else:
        if np.any(np.abs(points) > 1.0):
            raise LexiconError(f"{path}: values outside [-1, 1] for signed scale")
    return EmotionLexicon(words=tuple(words), points=points)


def default_lexicon() -> EmotionLexicon:
    """Load the lexicon file shipped with the package (1672 words)."""
    ref = resources.files("emovac").joinpath("data/vad_lexicon.tsv")
    with resources.as_file(ref) as path:
        return load_lexicon(path, raw_scale="unit_interval")


def diametric_partner(vad: Vad) -> Vad:
    """Component-wise negation; an exact involution."""
    return Vad(-vad.valence, -vad.arousal, -vad.dominance)


def nearest_emotions(vad: Vad, eval_set: EvalEmotionSet, count: int) -> list[str]:
    """Names of the ``count`` nearest evaluation emotions by Euclidean distance.

    Ties break toward the earlier entry in the evaluation order.
    """
    if not 1 <= count <= eval_set.n:
        raise ValueError(f"count must be in [1, {eval_set.n}]")
    deltas = eval_set.anchors - vad.as_array()
    dists = np.sqrt(np.sum(deltas * deltas, axis=1))
    # Stable sort keeps list order on ties.
    order = np.argsort(dists, kind="stable")
    return [eval_set.names[i] for i in order[:count]]


def eval_emotion_set(lexicon: EmotionLexicon, n: int) -> EvalEmotionSet:
    """Build the first-``n`` evaluation set with anchors looked up in ``lexicon``."""
    if n not in (2, 4, 6):
        raise ValueError("evaluation set size must be one of {2, 4, 6}")
    names = EVAL_EMOTION_NAMES[:n]
    anchors = []
    for name in names:
        vad = lexicon.lookup(name)
        if vad is None:
            raise LexiconError(f"evaluation emotion {name!r} missing from lexicon")
        anchors.append(vad.as_array())
    return EvalEmotionSet(names=tuple(names), anchors=np.asarray(anchors))


def chance_levels(n: int) -> dict[str, float]:
    """Analytic chance baselines for quality and Top-1/Top-2 accuracies."""
    return {"quality": 4.0, "top1": 1.0 / n, "top2": 2.0 / n}
