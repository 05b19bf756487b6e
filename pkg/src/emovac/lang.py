"""Natural-language grounding: map words and phrases to VAD targets.

Single words are exact (case-folded) lexicon lookups.  Phrases tokenize on
non-letter characters, look every token up, and average the hits, so the
result always lies inside the convex hull of the matched words' coordinates.
A miss is a regular value (`VadLookup` with ``found=False``), not an
exception: callers routinely probe arbitrary user text.

The ``provider`` field names the backend that produced the mapping; only the
built-in ``"lexicon-mean"`` provider exists today, but the field keeps the
response schema stable if a learned sentence encoder is plugged in later.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .vadspace import EmotionLexicon, Vad, default_lexicon

__all__ = ["VadLookup", "word_to_vad", "phrase_to_vad", "tokenize"]

_TOKEN_RE = re.compile(r"[^a-z]+")
PROVIDER = "lexicon-mean"


@dataclass(frozen=True)
class VadLookup:
    """Outcome of a text-to-VAD query; a miss is a value, not an error."""

    found: bool
    vad: Vad | None = None
    matched: tuple[str, ...] = ()
    provider: str = PROVIDER

    def __post_init__(self) -> None:
        if self.found and self.vad is None:
            raise ValueError("found lookups must carry a VAD point")
        if not self.found and self.vad is not None:
            raise ValueError("missed lookups must not carry a VAD point")


_MISS = VadLookup(found=False)


def tokenize(text: str) -> list[str]:
    """Lower-cased alphabetic tokens; everything else is a separator."""
    return [tok for tok in _TOKEN_RE.split(text.lower()) if tok]


def word_to_vad(word: str, lexicon: EmotionLexicon | None = None) -> VadLookup:
    """Exact case-folded lookup of one word."""
    lexicon = lexicon if lexicon is not None else default_lexicon()
    hit = lexicon.lookup(word.strip().lower())
    if hit is None:
        return _MISS
    return VadLookup(found=True, vad=hit, matched=(word.strip().lower(),))


def phrase_to_vad(text: str, lexicon: EmotionLexicon | None = None
                  ) -> VadLookup:
    """Mean VAD of the phrase's lexicon-known tokens.

    Tokens missing from the lexicon are skipped; if nothing matches (or the
    input has no tokens at all) the result is a miss.
    """
    lexicon = lexicon if lexicon is not None else default_lexicon()
    matched: list[str] = []
    points: list[np.ndarray] = []
    for token in tokenize(text):
        hit = lexicon.lookup(token)
        if hit is not None:
            matched.append(token)
            points.append(hit.as_array())
    if not points:
        return _MISS
    mean = np.mean(np.stack(points), axis=0)
    return VadLookup(found=True, vad=Vad.from_array(mean),
                     matched=tuple(matched))
