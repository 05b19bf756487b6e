"""Interactive emotive-style learning for a simulated 2-D vacuum robot.

The package learns a mapping from robot trajectories to the
valence-arousal-dominance (VAD) emotion space from human (or simulated-human)
labels, uses the learned mapping as a style cost inside trajectory
optimization, selects informative label queries by covering an emotion-word
lexicon, and ships an experiment harness, an HTTP labeling service, and a CLI.
"""

__version__ = "0.1.0"

from .vadspace import (  # noqa: F401
    Vad,
    EmotionLexicon,
    EvalEmotionSet,
    EVAL_EMOTION_NAMES,
    load_lexicon,
    default_lexicon,
    diametric_partner,
    nearest_emotions,
    eval_emotion_set,
)
