#!/usr/bin/env python3
"""Regenerate the curated VAD lexicon shipped with the package.

The distributed NRC-style lexicon cannot be redistributed here, so the repo
ships a reconstruction: a hand-curated table of emotive stems grouped into
affect families, expanded with regular English morphology, scored by family
VAD centers plus a per-word deterministic jitter, and truncated to exactly
1672 entries by priority order (stem order approximates a frequency rank).

The six evaluation emotions are pinned to dyadic unit-scale values so that
after the [0,1] -> [-1,1] rescale each diametric pair negates exactly.

Outputs (relative to repo root):
    src/emovac/data/vad_lexicon.tsv
    src/emovac/data/curated_words.txt
"""

from __future__ import annotations

import hashlib
from pathlib import Path

TARGET_COUNT = 1672

# Unit-scale pins for the evaluation emotions. Chosen dyadic so the signed
# values are exact floats and each consecutive pair is an exact negation:
#   sadness/joy, fear/confidence, anger/patience.
PINNED = {
    "sadness": (0.125, 0.21875, 0.1875),
    "joy": (0.875, 0.78125, 0.8125),
    "fear": (0.15625, 0.8125, 0.125),
    "confidence": (0.84375, 0.1875, 0.875),
    "anger": (0.1875, 0.84375, 0.78125),
    "patience": (0.8125, 0.15625, 0.21875),
}

# Family VAD centers in signed scale [-1, 1].
FAMILIES = {
    "joy": (0.72, 0.55, 0.60),
    "serenity": (0.65, -0.60, 0.30),
    "confidence": (0.62, -0.45, 0.70),
    "patience": (0.55, -0.65, -0.45),
    "affection": (0.75, 0.25, 0.35),
    "excitement": (0.62, 0.75, 0.40),
    "hope": (0.60, 0.15, 0.25),
    "gratitude": (0.70, 0.10, 0.10),
    "amusement": (0.68, 0.45, 0.30),
    "desire": (0.45, 0.50, 0.15),
    "interest": (0.50, 0.35, 0.30),
    "surprise": (0.15, 0.70, -0.10),
    "sadness": (-0.70, -0.45, -0.55),
    "loneliness": (-0.65, -0.35, -0.60),
    "fatigue": (-0.40, -0.65, -0.35),
    "boredom": (-0.35, -0.55, -0.20),
    "fear": (-0.65, 0.60, -0.65),
    "anxiety": (-0.55, 0.45, -0.50),
    "anger": (-0.60, 0.65, 0.45),
    "contempt": (-0.45, 0.25, 0.55),
    "disgust": (-0.60, 0.35, 0.20),
    "shame": (-0.60, 0.00, -0.60),
    "guilt": (-0.55, 0.10, -0.50),
    "envy": (-0.45, 0.30, -0.15),
    "pain": (-0.70, 0.30, -0.40),
    "courage": (0.55, 0.30, 0.65),
}

# Stem table: (word, pos, family). pos in {adj, noun, verb, fixed}.
# "fixed" ships the word with no derived forms. Order is the priority rank
# used by the final truncation, so the most load-bearing words come first.
STEMS = [
    # Pinned evaluation emotions first (must survive truncation).
    ("sadness", "fixed", "sadness"),
    ("joy", "noun", "joy"),
    ("fear", "noun", "fear"),
    ("confidence", "fixed", "confidence"),
    ("anger", "noun", "anger"),
    ("patience", "fixed", "patience"),
    # Core high-frequency affect vocabulary.
    ("happy", "adj", "joy"),
    ("sad", "adj", "sadness"),
    ("glad", "adj", "joy"),
    ("afraid", "fixed", "fear"),
    ("angry", "adj", "anger"),
    ("furious", "adj", "anger"),
    ("calm", "adj", "serenity"),
    ("love", "verb", "affection"),
    ("hate", "verb", "anger"),
    ("hope", "verb", "hope"),
    ("worry", "verb", "anxiety"),
    ("proud", "adj", "confidence"),
    ("patient", "adj", "patience"),
    ("confident", "adj", "confidence"),
    ("scared", "fixed", "fear"),
    ("terrified", "fixed", "fear"),
    ("delighted", "fixed", "joy"),
    ("miserable", "adj", "sadness"),
    ("cheerful", "adj", "joy"),
    ("gloomy", "adj", "sadness"),
    ("nervous", "adj", "anxiety"),
    ("brave", "adj", "courage"),
    ("bold", "adj", "courage"),
    ("timid", "adj", "fear"),
    ("serene", "adj", "serenity"),
    ("peaceful", "adj", "serenity"),
    ("anxious", "adj", "anxiety"),
    ("tense", "adj", "anxiety"),
    ("relaxed", "fixed", "serenity"),
    ("excited", "fixed", "excitement"),
    ("bored", "fixed", "boredom"),
    ("tired", "fixed", "fatigue"),
    ("weary", "adj", "fatigue"),
    ("lonely", "adj", "loneliness"),
    ("grateful", "adj", "gratitude"),
    ("thankful", "adj", "gratitude"),
    ("hopeful", "adj", "hope"),
    ("hopeless", "adj", "sadness"),
    ("fearless", "adj", "courage"),
    ("joyful", "adj", "joy"),
    ("joyless", "adj", "sadness"),
    ("merry", "adj", "joy"),
    ("jolly", "adj", "joy"),
    ("gleeful", "adj", "joy"),
    ("glee", "fixed", "joy"),
    ("blissful", "adj", "joy"),
    ("bliss", "fixed", "joy"),
    ("ecstatic", "adj", "excitement"),
    ("ecstasy", "fixed", "excitement"),
    ("euphoric", "adj", "excitement"),
    ("euphoria", "fixed", "excitement"),
    ("jubilant", "adj", "joy"),
    ("jubilation", "fixed", "joy"),
    ("elated", "fixed", "joy"),
    ("elation", "fixed", "joy"),
    ("overjoyed", "fixed", "joy"),
    ("radiant", "adj", "joy"),
    ("sunny", "adj", "joy"),
    ("festive", "adj", "joy"),
    ("playful", "adj", "amusement"),
    ("cheery", "adj", "joy"),
    ("upbeat", "fixed", "joy"),
    ("buoyant", "adj", "joy"),
    ("jovial", "adj", "joy"),
    ("blithe", "adj", "joy"),
    ("rejoice", "verb", "joy"),
    ("celebrate", "verb", "joy"),
    ("celebration", "noun", "joy"),
    ("laugh", "verb", "amusement"),
    ("laughter", "fixed", "amusement"),
    ("smile", "verb", "joy"),
    ("grin", "verb", "amusement"),
    ("giggle", "verb", "amusement"),
    ("chuckle", "verb", "amusement"),
    ("amuse", "verb", "amusement"),
    ("amusement", "fixed", "amusement"),
    ("funny", "adj", "amusement"),
    ("hilarious", "adj", "amusement"),
    ("witty", "adj", "amusement"),
    ("humorous", "adj", "amusement"),
    ("humor", "fixed", "amusement"),
    ("comic", "adj", "amusement"),
    ("delight", "verb", "joy"),
    ("delightful", "adj", "joy"),
    ("pleasure", "noun", "joy"),
    ("pleasant", "adj", "serenity"),
    ("pleased", "fixed", "joy"),
    ("enjoy", "verb", "joy"),
    ("enjoyment", "fixed", "joy"),
    ("satisfy", "verb", "gratitude"),
    ("satisfaction", "fixed", "gratitude"),
    ("satisfied", "fixed", "gratitude"),
    ("content", "adj", "serenity"),
    ("contentment", "fixed", "serenity"),
    ("fulfilled", "fixed", "gratitude"),
    ("fulfillment", "fixed", "gratitude"),
    ("gratified", "fixed", "gratitude"),
    ("gratitude", "fixed", "gratitude"),
    ("appreciate", "verb", "gratitude"),
    ("appreciation", "fixed", "gratitude"),
    ("thank", "verb", "gratitude"),
    ("blessed", "fixed", "gratitude"),
    ("blessing", "noun", "gratitude"),
    ("lucky", "adj", "joy"),
    ("fortunate", "adj", "gratitude"),
    # Serenity / calm.
    ("tranquil", "adj", "serenity"),
    ("placid", "adj", "serenity"),
    ("mellow", "adj", "serenity"),
    ("gentle", "adj", "patience"),
    ("soothing", "fixed", "serenity"),
    ("soothe", "verb", "serenity"),
    ("restful", "adj", "serenity"),
    ("cozy", "adj", "serenity"),
    ("comfortable", "adj", "serenity"),
    ("comfort", "verb", "serenity"),
    ("ease", "verb", "serenity"),
    ("easygoing", "fixed", "serenity"),
    ("carefree", "adj", "serenity"),
    ("untroubled", "adj", "serenity"),
    ("unhurried", "adj", "patience"),
    ("quiet", "adj", "serenity"),
    ("still", "adj", "serenity"),
    ("settled", "fixed", "serenity"),
    ("composed", "fixed", "serenity"),
    ("composure", "fixed", "serenity"),
    ("poise", "fixed", "confidence"),
    ("poised", "fixed", "confidence"),
    ("balanced", "fixed", "serenity"),
    ("harmonious", "adj", "serenity"),
    ("harmony", "fixed", "serenity"),
    ("peace", "fixed", "serenity"),
    ("serenity", "fixed", "serenity"),
    ("repose", "fixed", "serenity"),
    ("leisure", "fixed", "serenity"),
    ("leisurely", "fixed", "patience"),
    ("unruffled", "adj", "serenity"),
    ("relieved", "fixed", "serenity"),
    ("relief", "fixed", "serenity"),
    # Confidence / pride / courage.
    ("assured", "fixed", "confidence"),
    ("assurance", "fixed", "confidence"),
    ("assertive", "adj", "confidence"),
    ("certain", "adj", "confidence"),
    ("certainty", "fixed", "confidence"),
    ("secure", "adj", "confidence"),
    ("security", "fixed", "confidence"),
    ("strong", "adj", "confidence"),
    ("strength", "fixed", "confidence"),
    ("capable", "adj", "confidence"),
    ("competent", "adj", "confidence"),
    ("competence", "fixed", "confidence"),
    ("empowered", "fixed", "confidence"),
    ("powerful", "adj", "confidence"),
    ("power", "fixed", "confidence"),
    ("mighty", "adj", "confidence"),
    ("dominant", "adj", "confidence"),
    ("dominance", "fixed", "confidence"),
    ("command", "verb", "confidence"),
    ("commanding", "fixed", "confidence"),
    ("masterful", "adj", "confidence"),
    ("mastery", "fixed", "confidence"),
    ("triumphant", "adj", "confidence"),
    ("triumph", "verb", "confidence"),
    ("victorious", "adj", "confidence"),
    ("victory", "noun", "confidence"),
    ("winning", "fixed", "confidence"),
    ("successful", "adj", "confidence"),
    ("success", "fixed", "confidence"),
    ("accomplished", "fixed", "confidence"),
    ("accomplishment", "noun", "confidence"),
    ("achievement", "noun", "confidence"),
    ("achieve", "verb", "confidence"),
    ("pride", "fixed", "confidence"),
    ("dignity", "fixed", "confidence"),
    ("dignified", "fixed", "confidence"),
    ("noble", "adj", "confidence"),
    ("heroic", "adj", "courage"),
    ("hero", "noun", "courage"),
    ("courage", "fixed", "courage"),
    ("courageous", "adj", "courage"),
    ("daring", "fixed", "courage"),
    ("dare", "verb", "courage"),
    ("valiant", "adj", "courage"),
    ("valor", "fixed", "courage"),
    ("gallant", "adj", "courage"),
    ("intrepid", "adj", "courage"),
    ("dauntless", "adj", "courage"),
    ("determined", "fixed", "confidence"),
    ("determination", "fixed", "confidence"),
    ("resolute", "adj", "confidence"),
    ("resolve", "verb", "confidence"),
    ("steadfast", "adj", "confidence"),
    ("unshakable", "adj", "confidence"),
    ("invincible", "adj", "confidence"),
    ("unstoppable", "adj", "confidence"),
    ("decisive", "adj", "confidence"),
    ("ambitious", "adj", "confidence"),
    ("ambition", "noun", "confidence"),
    # Patience / humility / tolerance.
    ("humble", "adj", "patience"),
    ("humility", "fixed", "patience"),
    ("modest", "adj", "patience"),
    ("modesty", "fixed", "patience"),
    ("meek", "adj", "patience"),
    ("mild", "adj", "patience"),
    ("docile", "adj", "patience"),
    ("obedient", "adj", "patience"),
    ("obedience", "fixed", "patience"),
    ("yielding", "fixed", "patience"),
    ("tolerant", "adj", "patience"),
    ("tolerance", "fixed", "patience"),
    ("forgiving", "fixed", "patience"),
    ("forgive", "verb", "patience"),
    ("forgiveness", "fixed", "patience"),
    ("lenient", "adj", "patience"),
    ("accepting", "fixed", "patience"),
    ("acceptance", "fixed", "patience"),
    ("enduring", "fixed", "patience"),
    ("endure", "verb", "patience"),
    ("endurance", "fixed", "patience"),
    ("persevere", "verb", "patience"),
    ("perseverance", "fixed", "patience"),
    ("steady", "adj", "patience"),
    ("calmness", "fixed", "serenity"),
    ("temperate", "adj", "patience"),
    ("prudent", "adj", "patience"),
    ("prudence", "fixed", "patience"),
    ("careful", "adj", "patience"),
    ("cautious", "adj", "anxiety"),
    ("caution", "fixed", "anxiety"),
    ("wary", "adj", "anxiety"),
    ("watchful", "adj", "anxiety"),
    # Affection / love / warmth.
    ("adore", "verb", "affection"),
    ("adoration", "fixed", "affection"),
    ("cherish", "verb", "affection"),
    ("affection", "fixed", "affection"),
    ("affectionate", "adj", "affection"),
    ("fond", "adj", "affection"),
    ("fondness", "fixed", "affection"),
    ("tender", "adj", "affection"),
    ("tenderness", "fixed", "affection"),
    ("warm", "adj", "affection"),
    ("warmth", "fixed", "affection"),
    ("caring", "fixed", "affection"),
    ("care", "verb", "affection"),
    ("devoted", "fixed", "affection"),
    ("devotion", "fixed", "affection"),
    ("loyal", "adj", "affection"),
    ("loyalty", "fixed", "affection"),
    ("faithful", "adj", "affection"),
    ("trust", "verb", "hope"),
    ("trusting", "fixed", "hope"),
    ("trustworthy", "adj", "hope"),
    ("kind", "adj", "affection"),
    ("kindness", "fixed", "affection"),
    ("kindly", "fixed", "affection"),
    ("friendly", "adj", "affection"),
    ("friendship", "noun", "affection"),
    ("friend", "noun", "affection"),
    ("companion", "noun", "affection"),
    ("companionship", "fixed", "affection"),
    ("beloved", "fixed", "affection"),
    ("darling", "noun", "affection"),
    ("sweetheart", "noun", "affection"),
    ("sweet", "adj", "affection"),
    ("lovable", "adj", "affection"),
    ("lovely", "adj", "affection"),
    ("loving", "fixed", "affection"),
    ("romance", "noun", "affection"),
    ("romantic", "adj", "affection"),
    ("passion", "noun", "desire"),
    ("passionate", "adj", "desire"),
    ("intimate", "adj", "affection"),
    ("intimacy", "fixed", "affection"),
    ("embrace", "verb", "affection"),
    ("hug", "verb", "affection"),
    ("kiss", "verb", "affection"),
    ("cuddle", "verb", "affection"),
    ("compassion", "fixed", "affection"),
    ("compassionate", "adj", "affection"),
    ("sympathy", "noun", "affection"),
    ("sympathetic", "adj", "affection"),
    ("empathy", "fixed", "affection"),
    ("empathetic", "adj", "affection"),
    ("generous", "adj", "affection"),
    ("generosity", "fixed", "affection"),
    ("gracious", "adj", "gratitude"),
    ("charitable", "adj", "affection"),
    ("charity", "noun", "affection"),
    ("nurture", "verb", "affection"),
    ("protect", "verb", "courage"),
    ("protective", "adj", "courage"),
    # Excitement / energy / thrill.
    ("excitement", "fixed", "excitement"),
    ("excite", "verb", "excitement"),
    ("thrill", "verb", "excitement"),
    ("thrilling", "fixed", "excitement"),
    ("thrilled", "fixed", "excitement"),
    ("exhilarated", "fixed", "excitement"),
    ("exhilaration", "fixed", "excitement"),
    ("eager", "adj", "excitement"),
    ("eagerness", "fixed", "excitement"),
    ("enthusiastic", "adj", "excitement"),
    ("enthusiasm", "fixed", "excitement"),
    ("keen", "adj", "interest"),
    ("zeal", "fixed", "excitement"),
    ("zealous", "adj", "excitement"),
    ("zest", "fixed", "excitement"),
    ("fervent", "adj", "excitement"),
    ("fervor", "fixed", "excitement"),
    ("animated", "fixed", "excitement"),
    ("animation", "fixed", "excitement"),
    ("lively", "adj", "excitement"),
    ("vibrant", "adj", "excitement"),
    ("energetic", "adj", "excitement"),
    ("energy", "fixed", "excitement"),
    ("energized", "fixed", "excitement"),
    ("spirited", "fixed", "excitement"),
    ("vigorous", "adj", "excitement"),
    ("vigor", "fixed", "excitement"),
    ("dynamic", "adj", "excitement"),
    ("exuberant", "adj", "excitement"),
    ("exuberance", "fixed", "excitement"),
    ("electrified", "fixed", "excitement"),
    ("electrifying", "fixed", "excitement"),
    ("invigorated", "fixed", "excitement"),
    ("invigorating", "fixed", "excitement"),
    ("frisky", "adj", "amusement"),
    ("peppy", "adj", "excitement"),
    ("perky", "adj", "excitement"),
    ("bubbly", "adj", "excitement"),
    ("giddy", "adj", "excitement"),
    ("adventurous", "adj", "excitement"),
    ("adventure", "noun", "excitement"),
    # Hope / optimism / inspiration.
    ("optimistic", "adj", "hope"),
    ("optimism", "fixed", "hope"),
    ("faith", "fixed", "hope"),
    ("inspire", "verb", "hope"),
    ("inspiration", "fixed", "hope"),
    ("inspired", "fixed", "hope"),
    ("uplifted", "fixed", "hope"),
    ("uplifting", "fixed", "hope"),
    ("encouraged", "fixed", "hope"),
    ("encourage", "verb", "hope"),
    ("encouragement", "fixed", "hope"),
    ("motivated", "fixed", "hope"),
    ("motivate", "verb", "hope"),
    ("motivation", "fixed", "hope"),
    ("aspire", "verb", "hope"),
    ("aspiration", "noun", "hope"),
    ("dream", "verb", "hope"),
    ("dreamy", "adj", "serenity"),
    ("wish", "verb", "desire"),
    ("wishful", "adj", "desire"),
    ("anticipate", "verb", "interest"),
    ("anticipation", "fixed", "interest"),
    ("expectant", "adj", "interest"),
    ("promising", "fixed", "hope"),
    ("bright", "adj", "hope"),
    ("renewed", "fixed", "hope"),
    ("reborn", "fixed", "hope"),
    ("refreshed", "fixed", "serenity"),
    ("rejuvenated", "fixed", "hope"),
    # Desire / longing.
    ("desire", "verb", "desire"),
    ("crave", "verb", "desire"),
    ("craving", "noun", "desire"),
    ("longing", "fixed", "desire"),
    ("long", "verb", "desire"),
    ("yearn", "verb", "desire"),
    ("yearning", "fixed", "desire"),
    ("lust", "verb", "desire"),
    ("tempted", "fixed", "desire"),
    ("temptation", "noun", "desire"),
    ("hunger", "verb", "desire"),
    ("hungry", "adj", "desire"),
    ("thirsty", "adj", "desire"),
    ("ache", "verb", "pain"),
    ("covet", "verb", "envy"),
    # Interest / curiosity / wonder.
    ("curious", "adj", "interest"),
    ("curiosity", "fixed", "interest"),
    ("fascinated", "fixed", "interest"),
    ("fascinating", "fixed", "interest"),
    ("fascination", "fixed", "interest"),
    ("intrigued", "fixed", "interest"),
    ("intriguing", "fixed", "interest"),
    ("interested", "fixed", "interest"),
    ("interesting", "fixed", "interest"),
    ("absorbed", "fixed", "interest"),
    ("engrossed", "fixed", "interest"),
    ("captivated", "fixed", "interest"),
    ("captivating", "fixed", "interest"),
    ("enchanted", "fixed", "interest"),
    ("enchanting", "fixed", "interest"),
    ("spellbound", "fixed", "interest"),
    ("mesmerized", "fixed", "interest"),
    ("wonder", "verb", "interest"),
    ("wonderful", "adj", "joy"),
    ("wondrous", "adj", "interest"),
    ("marvel", "verb", "interest"),
    ("marvelous", "adj", "joy"),
    ("awe", "fixed", "interest"),
    ("awesome", "adj", "excitement"),
    ("awestruck", "adj", "surprise"),
    ("amazed", "fixed", "surprise"),
    ("amazing", "fixed", "excitement"),
    ("amazement", "fixed", "surprise"),
    ("astonished", "fixed", "surprise"),
    ("astonishing", "fixed", "surprise"),
    ("astonishment", "fixed", "surprise"),
    ("astounded", "fixed", "surprise"),
    ("astounding", "fixed", "surprise"),
    # Surprise / shock.
    ("surprise", "verb", "surprise"),
    ("surprising", "fixed", "surprise"),
    ("shock", "verb", "surprise"),
    ("shocking", "fixed", "surprise"),
    ("startle", "verb", "surprise"),
    ("startling", "fixed", "surprise"),
    ("stunned", "fixed", "surprise"),
    ("stunning", "fixed", "surprise"),
    ("dumbfounded", "adj", "surprise"),
    ("flabbergasted", "fixed", "surprise"),
    ("bewildered", "fixed", "surprise"),
    ("bewildering", "fixed", "surprise"),
    ("bewilderment", "fixed", "surprise"),
    ("baffled", "fixed", "surprise"),
    ("baffling", "fixed", "surprise"),
    ("perplexed", "fixed", "surprise"),
    ("perplexing", "fixed", "surprise"),
    ("puzzled", "fixed", "surprise"),
    ("puzzling", "fixed", "surprise"),
    ("confused", "fixed", "surprise"),
    ("confusing", "fixed", "surprise"),
    ("confusion", "fixed", "surprise"),
    ("disoriented", "fixed", "surprise"),
    ("unexpected", "adj", "surprise"),
    ("sudden", "adj", "surprise"),
    # Sadness / grief / despair.
    ("unhappy", "adj", "sadness"),
    ("sorrow", "noun", "sadness"),
    ("sorrowful", "adj", "sadness"),
    ("grief", "fixed", "sadness"),
    ("grieve", "verb", "sadness"),
    ("grieving", "fixed", "sadness"),
    ("mourn", "verb", "sadness"),
    ("mournful", "adj", "sadness"),
    ("mourning", "fixed", "sadness"),
    ("weep", "verb", "sadness"),
    ("cry", "verb", "sadness"),
    ("tearful", "adj", "sadness"),
    ("tear", "noun", "sadness"),
    ("sob", "verb", "sadness"),
    ("misery", "fixed", "sadness"),
    ("despair", "verb", "sadness"),
    ("despairing", "fixed", "sadness"),
    ("desperate", "adj", "anxiety"),
    ("desperation", "fixed", "anxiety"),
    ("melancholy", "fixed", "sadness"),
    ("melancholic", "adj", "sadness"),
    ("dejected", "fixed", "sadness"),
    ("dejection", "fixed", "sadness"),
    ("despondent", "adj", "sadness"),
    ("forlorn", "adj", "sadness"),
    ("heartbroken", "adj", "sadness"),
    ("heartbreak", "fixed", "sadness"),
    ("heartache", "fixed", "sadness"),
    ("crushed", "fixed", "sadness"),
    ("devastated", "fixed", "sadness"),
    ("devastating", "fixed", "sadness"),
    ("devastation", "fixed", "sadness"),
    ("anguish", "fixed", "sadness"),
    ("anguished", "adj", "sadness"),
    ("woe", "noun", "sadness"),
    ("woeful", "adj", "sadness"),
    ("grim", "adj", "sadness"),
    ("bleak", "adj", "sadness"),
    ("dismal", "adj", "sadness"),
    ("dreary", "adj", "boredom"),
    ("somber", "adj", "sadness"),
    ("glum", "adj", "sadness"),
    ("morose", "adj", "sadness"),
    ("sullen", "adj", "sadness"),
    ("downcast", "adj", "sadness"),
    ("downhearted", "adj", "sadness"),
    ("disheartened", "fixed", "sadness"),
    ("discouraged", "fixed", "sadness"),
    ("discouragement", "fixed", "sadness"),
    ("demoralized", "fixed", "sadness"),
    ("defeated", "fixed", "sadness"),
    ("defeat", "noun", "sadness"),
    ("loss", "noun", "sadness"),
    ("lost", "fixed", "sadness"),
    ("grave", "adj", "sadness"),
    ("tragic", "adj", "sadness"),
    ("tragedy", "noun", "sadness"),
    ("pitiful", "adj", "sadness"),
    ("pity", "verb", "sadness"),
    ("pathetic", "adj", "contempt"),
    ("regretful", "adj", "guilt"),
    ("regret", "verb", "guilt"),
    ("remorse", "fixed", "guilt"),
    ("remorseful", "adj", "guilt"),
    ("wistful", "adj", "sadness"),
    ("nostalgic", "adj", "sadness"),
    ("nostalgia", "fixed", "sadness"),
    ("homesick", "adj", "loneliness"),
    ("disappointment", "noun", "sadness"),
    ("disappointed", "fixed", "sadness"),
    ("disappointing", "fixed", "sadness"),
    ("letdown", "fixed", "sadness"),
    ("grievance", "noun", "anger"),
    ("hurt", "verb", "pain"),
    ("hurtful", "adj", "pain"),
    ("painful", "adj", "pain"),
    ("pain", "noun", "pain"),
    ("suffer", "verb", "pain"),
    ("suffering", "fixed", "pain"),
    ("agony", "fixed", "pain"),
    ("agonizing", "fixed", "pain"),
    ("torment", "verb", "pain"),
    ("torture", "verb", "pain"),
    ("wound", "verb", "pain"),
    ("wounded", "fixed", "pain"),
    ("broken", "fixed", "sadness"),
    ("shattered", "fixed", "sadness"),
    ("ruined", "fixed", "sadness"),
    ("ruin", "verb", "sadness"),
    ("doomed", "fixed", "fear"),
    ("doom", "fixed", "fear"),
    ("hopelessness", "fixed", "sadness"),
    ("helpless", "adj", "fear"),
    ("helplessness", "fixed", "fear"),
    ("powerless", "adj", "fear"),
    ("weak", "adj", "fatigue"),
    ("weakness", "fixed", "fatigue"),
    ("fragile", "adj", "anxiety"),
    ("vulnerable", "adj", "anxiety"),
    ("vulnerability", "fixed", "anxiety"),
    # Loneliness / isolation.
    ("loneliness", "fixed", "loneliness"),
    ("alone", "fixed", "loneliness"),
    ("isolated", "fixed", "loneliness"),
    ("isolation", "fixed", "loneliness"),
    ("abandoned", "fixed", "loneliness"),
    ("abandonment", "fixed", "loneliness"),
    ("neglected", "fixed", "loneliness"),
    ("neglect", "verb", "loneliness"),
    ("forsaken", "fixed", "loneliness"),
    ("forgotten", "fixed", "loneliness"),
    ("unwanted", "adj", "loneliness"),
    ("unloved", "adj", "loneliness"),
    ("rejected", "fixed", "loneliness"),
    ("rejection", "fixed", "loneliness"),
    ("excluded", "fixed", "loneliness"),
    ("exclusion", "fixed", "loneliness"),
    ("outcast", "noun", "loneliness"),
    ("alienated", "fixed", "loneliness"),
    ("alienation", "fixed", "loneliness"),
    ("estranged", "fixed", "loneliness"),
    ("solitary", "adj", "loneliness"),
    ("solitude", "fixed", "loneliness"),
    ("friendless", "adj", "loneliness"),
    ("distant", "adj", "loneliness"),
    ("withdrawn", "fixed", "loneliness"),
    # Fatigue / boredom / apathy.
    ("exhausted", "fixed", "fatigue"),
    ("exhausting", "fixed", "fatigue"),
    ("exhaustion", "fixed", "fatigue"),
    ("fatigued", "fixed", "fatigue"),
    ("fatigue", "fixed", "fatigue"),
    ("drained", "fixed", "fatigue"),
    ("sleepy", "adj", "fatigue"),
    ("drowsy", "adj", "fatigue"),
    ("sluggish", "adj", "fatigue"),
    ("listless", "adj", "fatigue"),
    ("lethargic", "adj", "fatigue"),
    ("lethargy", "fixed", "fatigue"),
    ("apathetic", "adj", "boredom"),
    ("apathy", "fixed", "boredom"),
    ("indifferent", "adj", "boredom"),
    ("indifference", "fixed", "boredom"),
    ("unmoved", "adj", "boredom"),
    ("uninterested", "adj", "boredom"),
    ("boredom", "fixed", "boredom"),
    ("boring", "fixed", "boredom"),
    ("dull", "adj", "boredom"),
    ("tedious", "adj", "boredom"),
    ("tedium", "fixed", "boredom"),
    ("monotonous", "adj", "boredom"),
    ("monotony", "fixed", "boredom"),
    ("numb", "adj", "boredom"),
    ("numbness", "fixed", "boredom"),
    ("empty", "adj", "loneliness"),
    ("emptiness", "fixed", "loneliness"),
    ("hollow", "adj", "loneliness"),
    ("burnout", "fixed", "fatigue"),
    ("overworked", "adj", "fatigue"),
    ("jaded", "adj", "boredom"),
    ("stale", "adj", "boredom"),
    ("restless", "adj", "anxiety"),
    ("restlessness", "fixed", "anxiety"),
    # Fear / terror / horror.
    ("fearful", "adj", "fear"),
    ("frightened", "fixed", "fear"),
    ("frightening", "fixed", "fear"),
    ("fright", "fixed", "fear"),
    ("terror", "noun", "fear"),
    ("terrifying", "fixed", "fear"),
    ("terrify", "verb", "fear"),
    ("horrified", "fixed", "fear"),
    ("horrifying", "fixed", "fear"),
    ("horror", "noun", "fear"),
    ("horrible", "adj", "fear"),
    ("horrid", "adj", "disgust"),
    ("dread", "verb", "fear"),
    ("dreadful", "adj", "fear"),
    ("panic", "fixed", "fear"),
    ("panicked", "fixed", "fear"),
    ("panicky", "adj", "fear"),
    ("alarm", "verb", "fear"),
    ("alarmed", "fixed", "fear"),
    ("alarming", "fixed", "fear"),
    ("petrified", "fixed", "fear"),
    ("spooked", "fixed", "fear"),
    ("spooky", "adj", "fear"),
    ("creepy", "adj", "fear"),
    ("eerie", "adj", "fear"),
    ("sinister", "adj", "fear"),
    ("menacing", "fixed", "fear"),
    ("menace", "noun", "fear"),
    ("threatening", "fixed", "fear"),
    ("threaten", "verb", "fear"),
    ("threat", "noun", "fear"),
    ("danger", "noun", "fear"),
    ("dangerous", "adj", "fear"),
    ("perilous", "adj", "fear"),
    ("peril", "noun", "fear"),
    ("hazardous", "adj", "fear"),
    ("ominous", "adj", "fear"),
    ("foreboding", "fixed", "fear"),
    ("trembling", "fixed", "fear"),
    ("tremble", "verb", "fear"),
    ("shiver", "verb", "fear"),
    ("shudder", "verb", "fear"),
    ("quiver", "verb", "fear"),
    ("cowardly", "fixed", "fear"),
    ("coward", "noun", "fear"),
    ("cowardice", "fixed", "fear"),
    ("skittish", "adj", "fear"),
    ("jumpy", "adj", "anxiety"),
    ("jittery", "adj", "anxiety"),
    ("shaky", "adj", "anxiety"),
    ("terrorized", "fixed", "fear"),
    ("intimidated", "fixed", "fear"),
    ("intimidating", "fixed", "fear"),
    ("intimidation", "fixed", "fear"),
    ("paranoid", "adj", "anxiety"),
    ("paranoia", "fixed", "anxiety"),
    ("phobia", "noun", "fear"),
    ("nightmare", "noun", "fear"),
    ("nightmarish", "adj", "fear"),
    # Anxiety / stress / unease.
    ("anxiety", "fixed", "anxiety"),
    ("stressed", "fixed", "anxiety"),
    ("stressful", "adj", "anxiety"),
    ("stress", "fixed", "anxiety"),
    ("strained", "fixed", "anxiety"),
    ("strain", "fixed", "anxiety"),
    ("uneasy", "adj", "anxiety"),
    ("unease", "fixed", "anxiety"),
    ("uneasiness", "fixed", "anxiety"),
    ("apprehensive", "adj", "anxiety"),
    ("apprehension", "fixed", "anxiety"),
    ("troubled", "fixed", "anxiety"),
    ("troubling", "fixed", "anxiety"),
    ("trouble", "verb", "anxiety"),
    ("distressed", "fixed", "anxiety"),
    ("distressing", "fixed", "anxiety"),
    ("distress", "fixed", "anxiety"),
    ("disturbed", "fixed", "anxiety"),
    ("disturbing", "fixed", "anxiety"),
    ("agitated", "fixed", "anxiety"),
    ("agitation", "fixed", "anxiety"),
    ("frantic", "adj", "anxiety"),
    ("frazzled", "fixed", "anxiety"),
    ("flustered", "fixed", "anxiety"),
    ("overwhelmed", "fixed", "anxiety"),
    ("overwhelming", "fixed", "anxiety"),
    ("pressured", "fixed", "anxiety"),
    ("pressure", "fixed", "anxiety"),
    ("burdened", "fixed", "anxiety"),
    ("burden", "noun", "anxiety"),
    ("dreading", "fixed", "anxiety"),
    ("insecure", "adj", "anxiety"),
    ("insecurity", "fixed", "anxiety"),
    ("doubtful", "adj", "anxiety"),
    ("doubt", "verb", "anxiety"),
    ("uncertain", "adj", "anxiety"),
    ("uncertainty", "fixed", "anxiety"),
    ("hesitant", "adj", "anxiety"),
    ("hesitation", "fixed", "anxiety"),
    ("suspicious", "adj", "anxiety"),
    ("suspicion", "noun", "anxiety"),
    ("distrust", "verb", "anxiety"),
    ("mistrust", "fixed", "anxiety"),
    ("concerned", "fixed", "anxiety"),
    ("concern", "noun", "anxiety"),
    ("worried", "fixed", "anxiety"),
    ("worrisome", "adj", "anxiety"),
    ("fret", "verb", "anxiety"),
    ("fretful", "adj", "anxiety"),
    ("unnerved", "fixed", "anxiety"),
    ("unnerving", "fixed", "anxiety"),
    ("unsettled", "fixed", "anxiety"),
    ("unsettling", "fixed", "anxiety"),
    ("edgy", "adj", "anxiety"),
    ("panicking", "fixed", "fear"),
    # Anger / rage / hostility.
    ("rage", "noun", "anger"),
    ("raging", "fixed", "anger"),
    ("enraged", "fixed", "anger"),
    ("fury", "fixed", "anger"),
    ("irate", "adj", "anger"),
    ("livid", "adj", "anger"),
    ("incensed", "fixed", "anger"),
    ("infuriated", "fixed", "anger"),
    ("infuriating", "fixed", "anger"),
    ("outraged", "fixed", "anger"),
    ("outrage", "noun", "anger"),
    ("outrageous", "adj", "anger"),
    ("wrath", "fixed", "anger"),
    ("wrathful", "adj", "anger"),
    ("hostile", "adj", "anger"),
    ("hostility", "fixed", "anger"),
    ("aggressive", "adj", "anger"),
    ("aggression", "fixed", "anger"),
    ("violent", "adj", "anger"),
    ("violence", "fixed", "anger"),
    ("fierce", "adj", "anger"),
    ("ferocious", "adj", "anger"),
    ("savage", "adj", "anger"),
    ("brutal", "adj", "anger"),
    ("ruthless", "adj", "contempt"),
    ("vicious", "adj", "anger"),
    ("annoyed", "fixed", "anger"),
    ("annoying", "fixed", "anger"),
    ("annoyance", "noun", "anger"),
    ("irritated", "fixed", "anger"),
    ("irritating", "fixed", "anger"),
    ("irritation", "fixed", "anger"),
    ("irritable", "adj", "anger"),
    ("aggravated", "fixed", "anger"),
    ("aggravating", "fixed", "anger"),
    ("exasperated", "fixed", "anger"),
    ("exasperating", "fixed", "anger"),
    ("exasperation", "fixed", "anger"),
    ("frustrated", "fixed", "anger"),
    ("frustrating", "fixed", "anger"),
    ("frustration", "noun", "anger"),
    ("resentful", "adj", "anger"),
    ("resentment", "fixed", "anger"),
    ("resent", "verb", "anger"),
    ("bitter", "adj", "anger"),
    ("bitterness", "fixed", "anger"),
    ("grudge", "noun", "anger"),
    ("vengeful", "adj", "anger"),
    ("vengeance", "fixed", "anger"),
    ("revenge", "fixed", "anger"),
    ("spite", "fixed", "anger"),
    ("spiteful", "adj", "anger"),
    ("malice", "fixed", "anger"),
    ("malicious", "adj", "anger"),
    ("cruel", "adj", "anger"),
    ("cruelty", "fixed", "anger"),
    ("heated", "fixed", "anger"),
    ("fuming", "fixed", "anger"),
    ("seething", "fixed", "anger"),
    ("boiling", "fixed", "anger"),
    ("explosive", "adj", "anger"),
    ("stormy", "adj", "anger"),
    ("fiery", "adj", "anger"),
    ("snappy", "adj", "anger"),
    ("grumpy", "adj", "anger"),
    ("grouchy", "adj", "anger"),
    ("cranky", "adj", "anger"),
    ("cross", "adj", "anger"),
    ("offended", "fixed", "anger"),
    ("offensive", "adj", "anger"),
    ("insulted", "fixed", "anger"),
    ("insulting", "fixed", "anger"),
    ("insult", "verb", "anger"),
    ("provoked", "fixed", "anger"),
    ("provoking", "fixed", "anger"),
    ("provocation", "fixed", "anger"),
    ("quarrel", "verb", "anger"),
    ("quarrelsome", "adj", "anger"),
    ("argue", "verb", "anger"),
    ("argument", "noun", "anger"),
    ("conflict", "noun", "anger"),
    ("fight", "verb", "anger"),
    ("attack", "verb", "anger"),
    ("destroy", "verb", "anger"),
    ("destructive", "adj", "anger"),
    ("destruction", "fixed", "anger"),
    # Contempt / scorn / disdain.
    ("contempt", "fixed", "contempt"),
    ("contemptuous", "adj", "contempt"),
    ("scorn", "verb", "contempt"),
    ("scornful", "adj", "contempt"),
    ("disdain", "verb", "contempt"),
    ("disdainful", "adj", "contempt"),
    ("sneer", "verb", "contempt"),
    ("mock", "verb", "contempt"),
    ("mockery", "fixed", "contempt"),
    ("ridicule", "verb", "contempt"),
    ("ridiculous", "adj", "contempt"),
    ("arrogant", "adj", "contempt"),
    ("arrogance", "fixed", "contempt"),
    ("haughty", "adj", "contempt"),
    ("smug", "adj", "contempt"),
    ("condescending", "fixed", "contempt"),
    ("patronizing", "fixed", "contempt"),
    ("dismissive", "adj", "contempt"),
    ("belittle", "verb", "contempt"),
    ("demean", "verb", "contempt"),
    ("demeaning", "fixed", "contempt"),
    ("degrading", "fixed", "contempt"),
    ("degrade", "verb", "contempt"),
    ("snobbish", "adj", "contempt"),
    ("superior", "adj", "contempt"),
    ("superiority", "fixed", "contempt"),
    # Disgust / revulsion.
    ("disgust", "verb", "disgust"),
    ("disgusted", "fixed", "disgust"),
    ("disgusting", "fixed", "disgust"),
    ("revolted", "fixed", "disgust"),
    ("revolting", "fixed", "disgust"),
    ("revulsion", "fixed", "disgust"),
    ("repulsed", "fixed", "disgust"),
    ("repulsive", "adj", "disgust"),
    ("repugnant", "adj", "disgust"),
    ("repellent", "adj", "disgust"),
    ("nauseous", "adj", "disgust"),
    ("nauseated", "fixed", "disgust"),
    ("nauseating", "fixed", "disgust"),
    ("nausea", "fixed", "disgust"),
    ("sickened", "fixed", "disgust"),
    ("sickening", "fixed", "disgust"),
    ("sick", "adj", "disgust"),
    ("queasy", "adj", "disgust"),
    ("loathe", "verb", "disgust"),
    ("loathing", "fixed", "disgust"),
    ("loathsome", "adj", "disgust"),
    ("despise", "verb", "contempt"),
    ("detest", "verb", "disgust"),
    ("detestable", "adj", "disgust"),
    ("abhor", "verb", "disgust"),
    ("abhorrent", "adj", "disgust"),
    ("vile", "adj", "disgust"),
    ("foul", "adj", "disgust"),
    ("gross", "adj", "disgust"),
    ("grotesque", "adj", "disgust"),
    ("hideous", "adj", "disgust"),
    ("ugly", "adj", "disgust"),
    ("filthy", "adj", "disgust"),
    ("filth", "fixed", "disgust"),
    ("rotten", "adj", "disgust"),
    ("putrid", "adj", "disgust"),
    ("rancid", "adj", "disgust"),
    ("offend", "verb", "disgust"),
    ("distaste", "fixed", "disgust"),
    ("distasteful", "adj", "disgust"),
    ("objectionable", "adj", "disgust"),
    ("obnoxious", "adj", "disgust"),
    ("odious", "adj", "disgust"),
    ("appalled", "fixed", "disgust"),
    ("appalling", "fixed", "disgust"),
    # Shame / embarrassment / guilt.
    ("shame", "noun", "shame"),
    ("ashamed", "fixed", "shame"),
    ("shameful", "adj", "shame"),
    ("shameless", "adj", "contempt"),
    ("embarrassed", "fixed", "shame"),
    ("embarrassing", "fixed", "shame"),
    ("embarrassment", "fixed", "shame"),
    ("humiliated", "fixed", "shame"),
    ("humiliating", "fixed", "shame"),
    ("humiliation", "fixed", "shame"),
    ("mortified", "fixed", "shame"),
    ("mortifying", "fixed", "shame"),
    ("disgraced", "fixed", "shame"),
    ("disgraceful", "adj", "shame"),
    ("disgrace", "noun", "shame"),
    ("dishonor", "fixed", "shame"),
    ("dishonorable", "adj", "shame"),
    ("sheepish", "adj", "shame"),
    ("awkward", "adj", "shame"),
    ("awkwardness", "fixed", "shame"),
    ("blush", "verb", "shame"),
    ("guilty", "adj", "guilt"),
    ("guilt", "fixed", "guilt"),
    ("culpable", "adj", "guilt"),
    ("blame", "verb", "guilt"),
    ("blameworthy", "adj", "guilt"),
    ("apologetic", "adj", "guilt"),
    ("apologize", "verb", "guilt"),
    ("apology", "noun", "guilt"),
    ("sorry", "fixed", "guilt"),
    ("repentant", "adj", "guilt"),
    ("repent", "verb", "guilt"),
    ("penitent", "adj", "guilt"),
    ("contrite", "adj", "guilt"),
    ("sinful", "adj", "guilt"),
    ("sin", "noun", "guilt"),
    # Envy / jealousy.
    ("envy", "verb", "envy"),
    ("envious", "adj", "envy"),
    ("jealous", "adj", "envy"),
    ("jealousy", "fixed", "envy"),
    ("resenting", "fixed", "envy"),
    ("begrudge", "verb", "envy"),
    # Additional positive vocabulary.
    ("good", "adj", "gratitude"),
    ("great", "adj", "joy"),
    ("excellent", "adj", "joy"),
    ("superb", "adj", "joy"),
    ("splendid", "adj", "joy"),
    ("fabulous", "adj", "joy"),
    ("fantastic", "adj", "excitement"),
    ("terrific", "adj", "excitement"),
    ("incredible", "adj", "surprise"),
    ("magnificent", "adj", "joy"),
    ("glorious", "adj", "joy"),
    ("glory", "fixed", "confidence"),
    ("beautiful", "adj", "affection"),
    ("beauty", "fixed", "affection"),
    ("gorgeous", "adj", "affection"),
    ("charming", "fixed", "affection"),
    ("charm", "verb", "affection"),
    ("graceful", "adj", "serenity"),
    ("grace", "fixed", "serenity"),
    ("elegant", "adj", "serenity"),
    ("elegance", "fixed", "serenity"),
    ("precious", "adj", "affection"),
    ("treasure", "verb", "affection"),
    ("admire", "verb", "affection"),
    ("admiration", "fixed", "affection"),
    ("admirable", "adj", "affection"),
    ("respect", "verb", "gratitude"),
    ("respectful", "adj", "gratitude"),
    ("honor", "verb", "confidence"),
    ("honorable", "adj", "confidence"),
    ("praise", "verb", "gratitude"),
    ("praiseworthy", "adj", "gratitude"),
    ("applaud", "verb", "gratitude"),
    ("applause", "fixed", "gratitude"),
    ("congratulate", "verb", "joy"),
    ("congratulation", "noun", "joy"),
    ("welcome", "verb", "affection"),
    ("welcoming", "fixed", "affection"),
    ("hospitable", "adj", "affection"),
    ("hospitality", "fixed", "affection"),
    ("supportive", "adj", "affection"),
    ("support", "verb", "affection"),
    ("helpful", "adj", "gratitude"),
    ("help", "verb", "gratitude"),
    ("reassured", "fixed", "serenity"),
    ("reassuring", "fixed", "serenity"),
    ("reassurance", "fixed", "serenity"),
    ("safe", "adj", "serenity"),
    ("safety", "fixed", "serenity"),
    ("shelter", "verb", "serenity"),
    ("sheltered", "fixed", "serenity"),
    ("healed", "fixed", "hope"),
    ("healing", "fixed", "hope"),
    ("heal", "verb", "hope"),
    ("healthy", "adj", "hope"),
    ("thriving", "fixed", "confidence"),
    ("thrive", "verb", "confidence"),
    ("flourish", "verb", "confidence"),
    ("prosper", "verb", "confidence"),
    ("prosperous", "adj", "confidence"),
    ("prosperity", "fixed", "confidence"),
    ("abundance", "fixed", "gratitude"),
    ("abundant", "adj", "gratitude"),
    ("rich", "adj", "confidence"),
    ("wealthy", "adj", "confidence"),
    ("free", "adj", "joy"),
    ("freedom", "fixed", "joy"),
    ("liberated", "fixed", "joy"),
    ("liberation", "fixed", "joy"),
    ("independent", "adj", "confidence"),
    ("independence", "fixed", "confidence"),
    ("alive", "fixed", "excitement"),
    ("vital", "adj", "excitement"),
    ("vitality", "fixed", "excitement"),
    ("youthful", "adj", "excitement"),
    ("fresh", "adj", "hope"),
    ("new", "adj", "hope"),
    ("shiny", "adj", "joy"),
    ("sparkling", "fixed", "joy"),
    ("sparkle", "verb", "joy"),
    ("glowing", "fixed", "joy"),
    ("glow", "verb", "joy"),
    ("brilliant", "adj", "joy"),
    ("brilliance", "fixed", "joy"),
    ("dazzling", "fixed", "excitement"),
    ("dazzle", "verb", "excitement"),
    # Additional negative vocabulary.
    ("bad", "adj", "sadness"),
    ("terrible", "adj", "fear"),
    ("awful", "adj", "disgust"),
    ("nasty", "adj", "disgust"),
    ("mean", "adj", "anger"),
    ("unkind", "adj", "anger"),
    ("unfair", "adj", "anger"),
    ("unjust", "adj", "anger"),
    ("injustice", "noun", "anger"),
    ("wrong", "adj", "guilt"),
    ("wrongful", "adj", "anger"),
    ("wicked", "adj", "anger"),
    ("evil", "adj", "fear"),
    ("sinister2", "skip", "fear"),
    ("dark", "adj", "fear"),
    ("darkness", "fixed", "fear"),
    ("shadowy", "adj", "fear"),
    ("cold", "adj", "loneliness"),
    ("coldness", "fixed", "loneliness"),
    ("harsh", "adj", "anger"),
    ("severe", "adj", "anxiety"),
    ("punishing", "fixed", "pain"),
    ("punish", "verb", "pain"),
    ("punishment", "noun", "pain"),
    ("penalty", "noun", "pain"),
    ("suffering2", "skip", "pain"),
    ("victim", "noun", "pain"),
    ("victimized", "fixed", "pain"),
    ("oppressed", "fixed", "pain"),
    ("oppression", "fixed", "pain"),
    ("oppressive", "adj", "anxiety"),
    ("trapped", "fixed", "fear"),
    ("imprisoned", "fixed", "fear"),
    ("suffocating", "fixed", "anxiety"),
    ("smothered", "fixed", "anxiety"),
    ("crisis", "noun", "anxiety"),
    ("disaster", "noun", "fear"),
    ("disastrous", "adj", "fear"),
    ("catastrophe", "noun", "fear"),
    ("catastrophic", "adj", "fear"),
    ("calamity", "noun", "fear"),
    ("chaos", "fixed", "anxiety"),
    ("chaotic", "adj", "anxiety"),
    ("turmoil", "fixed", "anxiety"),
    ("upheaval", "noun", "anxiety"),
    ("unrest", "fixed", "anxiety"),
    ("disorder", "noun", "anxiety"),
    ("mess", "noun", "anxiety"),
    ("messy", "adj", "anxiety"),
    ("failure", "noun", "sadness"),
    ("fail", "verb", "sadness"),
    ("failing", "fixed", "sadness"),
    ("flawed", "adj", "shame"),
    ("flaw", "noun", "shame"),
    ("inadequate", "adj", "shame"),
    ("inadequacy", "fixed", "shame"),
    ("inferior", "adj", "shame"),
    ("inferiority", "fixed", "shame"),
    ("worthless", "adj", "shame"),
    ("worthlessness", "fixed", "shame"),
    ("useless", "adj", "shame"),
    ("incompetent", "adj", "shame"),
    ("incompetence", "fixed", "shame"),
    ("clumsy", "adj", "shame"),
    ("foolish", "adj", "shame"),
    ("fool", "noun", "shame"),
    ("stupid", "adj", "contempt"),
    ("idiotic", "adj", "contempt"),
    ("absurd", "adj", "contempt"),
    ("nonsense", "fixed", "contempt"),
    ("betrayed", "fixed", "anger"),
    ("betrayal", "noun", "anger"),
    ("betray", "verb", "anger"),
    ("deceived", "fixed", "anger"),
    ("deceive", "verb", "anger"),
    ("deceit", "fixed", "anger"),
    ("deceitful", "adj", "anger"),
    ("dishonest", "adj", "anger"),
    ("dishonesty", "fixed", "anger"),
    ("lie", "verb", "anger"),
    ("liar", "noun", "anger"),
    ("cheat", "verb", "anger"),
    ("cheater", "noun", "anger"),
    ("fraud", "noun", "anger"),
    ("fraudulent", "adj", "anger"),
    ("corrupt", "adj", "disgust"),
    ("corruption", "fixed", "disgust"),
    ("greedy", "adj", "envy"),
    ("greed", "fixed", "envy"),
    ("selfish", "adj", "contempt"),
    ("selfishness", "fixed", "contempt"),
    ("stingy", "adj", "contempt"),
    ("petty", "adj", "contempt"),
    ("rude", "adj", "anger"),
    ("rudeness", "fixed", "anger"),
    ("impolite", "adj", "anger"),
    ("disrespectful", "adj", "anger"),
    ("disrespect", "verb", "anger"),
    ("ungrateful", "adj", "anger"),
    ("thankless", "adj", "anger"),
    ("careless", "adj", "contempt"),
    ("reckless", "adj", "fear"),
    ("recklessness", "fixed", "fear"),
    ("negligent", "adj", "contempt"),
    ("negligence", "fixed", "contempt"),
    ("lazy", "adj", "boredom"),
    ("laziness", "fixed", "boredom"),
    ("idle", "adj", "boredom"),
    ("idleness", "fixed", "boredom"),
    ("stagnant", "adj", "boredom"),
    ("stagnation", "fixed", "boredom"),
    ("stuck", "fixed", "boredom"),
    ("gloom", "fixed", "sadness"),
    ("shadow", "noun", "fear"),
    ("mourner", "noun", "sadness"),
    ("funeral", "noun", "sadness"),
    ("grievous", "adj", "sadness"),
    ("lament", "verb", "sadness"),
    ("lamentable", "adj", "sadness"),
    ("wail", "verb", "sadness"),
    ("moan", "verb", "pain"),
    ("groan", "verb", "pain"),
    ("whimper", "verb", "fear"),
    ("whine", "verb", "anger"),
    ("complain", "verb", "anger"),
    ("complaint", "noun", "anger"),
    ("grumble", "verb", "anger"),
    ("nag", "verb", "anger"),
    ("scold", "verb", "anger"),
    ("reprimand", "verb", "anger"),
    ("rebuke", "verb", "anger"),
    ("criticize", "verb", "anger"),
    ("criticism", "noun", "anger"),
    ("critical", "adj", "anger"),
    ("judgmental", "adj", "contempt"),
    ("condemn", "verb", "anger"),
    ("condemnation", "fixed", "anger"),
    ("accuse", "verb", "anger"),
    ("accusation", "noun", "anger"),
    ("suspect", "verb", "anxiety"),
    ("interrogate", "verb", "anxiety"),
    ("pester", "verb", "anger"),
    ("harass", "verb", "anger"),
    ("harassment", "fixed", "anger"),
    ("bully", "verb", "anger"),
    ("tyrant", "noun", "anger"),
    ("tyranny", "fixed", "anger"),
    ("dominate", "verb", "contempt"),
    ("domination", "fixed", "contempt"),
    ("control", "verb", "confidence"),
    ("controlling", "fixed", "contempt"),
    ("manipulate", "verb", "contempt"),
    ("manipulative", "adj", "contempt"),
    ("manipulation", "fixed", "contempt"),
    ("exploit", "verb", "contempt"),
    ("exploitation", "fixed", "contempt"),
    # Mixed / situational affect words to round out the space.
    ("surprised", "fixed", "surprise"),
    ("speechless", "adj", "surprise"),
    ("breathless", "adj", "excitement"),
    ("dizzy", "adj", "surprise"),
    ("lightheaded", "adj", "surprise"),
    ("euphony", "skip", "joy"),
    ("serendipity", "fixed", "joy"),
    ("serendipitous", "adj", "joy"),
    ("whimsical", "adj", "amusement"),
    ("whimsy", "fixed", "amusement"),
    ("silly", "adj", "amusement"),
    ("goofy", "adj", "amusement"),
    ("quirky", "adj", "amusement"),
    ("mischievous", "adj", "amusement"),
    ("mischief", "fixed", "amusement"),
    ("teasing", "fixed", "amusement"),
    ("tease", "verb", "amusement"),
    ("joke", "verb", "amusement"),
    ("joker", "noun", "amusement"),
    ("prank", "noun", "amusement"),
    ("fun", "fixed", "amusement"),
    ("entertained", "fixed", "amusement"),
    ("entertaining", "fixed", "amusement"),
    ("entertainment", "fixed", "amusement"),
    ("festivity", "noun", "joy"),
    ("holiday", "noun", "joy"),
    ("vacation", "noun", "serenity"),
    ("picnic", "noun", "joy"),
    ("party", "noun", "excitement"),
    ("dance", "verb", "excitement"),
    ("sing", "verb", "joy"),
    ("song", "noun", "joy"),
    ("music", "fixed", "serenity"),
    ("melody", "noun", "serenity"),
    ("sunshine", "fixed", "joy"),
    ("rainbow", "noun", "hope"),
    ("springtime", "fixed", "hope"),
    ("blossom", "verb", "hope"),
    ("bloom", "verb", "hope"),
    ("garden", "noun", "serenity"),
    ("meadow", "noun", "serenity"),
    ("ocean", "noun", "serenity"),
    ("breeze", "noun", "serenity"),
    ("gentleness", "fixed", "patience"),
    ("softness", "fixed", "patience"),
    ("soft", "adj", "patience"),
    ("slow", "adj", "patience"),
    ("deliberate", "adj", "patience"),
    ("thoughtful", "adj", "patience"),
    ("considerate", "adj", "patience"),
    ("mindful", "adj", "patience"),
    ("attentive", "adj", "interest"),
    ("alert", "adj", "interest"),
    ("vigilant", "adj", "anxiety"),
    ("vigilance", "fixed", "anxiety"),
    ("focused", "fixed", "interest"),
    ("focus", "verb", "interest"),
    ("engaged", "fixed", "interest"),
    ("engaging", "fixed", "interest"),
    ("stimulated", "fixed", "interest"),
    ("stimulating", "fixed", "interest"),
    ("inquisitive", "adj", "interest"),
    ("explore", "verb", "interest"),
    ("exploration", "fixed", "interest"),
    ("discover", "verb", "interest"),
    ("discovery", "noun", "interest"),
    ("learn", "verb", "interest"),
    ("learning", "fixed", "interest"),
    ("insight", "noun", "interest"),
    ("insightful", "adj", "interest"),
    ("clever", "adj", "confidence"),
    ("smart", "adj", "confidence"),
    ("wise", "adj", "patience"),
    ("wisdom", "fixed", "patience"),
    ("sage", "noun", "patience"),
    ("thoughtless", "adj", "contempt"),
    ("mindless", "adj", "boredom"),
    ("senseless", "adj", "anger"),
    ("meaningless", "adj", "sadness"),
    ("meaningful", "adj", "gratitude"),
    ("purposeful", "adj", "confidence"),
    ("purpose", "noun", "hope"),
    ("aimless", "adj", "boredom"),
    ("drifting", "fixed", "boredom"),
    ("wander", "verb", "boredom"),
    ("lonesome", "adj", "loneliness"),
    ("longingly", "fixed", "desire"),
    ("missing", "fixed", "loneliness"),
    ("miss", "verb", "loneliness"),
    ("absence", "noun", "loneliness"),
    ("absent", "adj", "loneliness"),
    ("farewell", "noun", "sadness"),
    ("goodbye", "noun", "sadness"),
    ("parting", "fixed", "sadness"),
    ("separation", "noun", "loneliness"),
    ("divorce", "noun", "sadness"),
    ("breakup", "noun", "sadness"),
    ("heartsick", "adj", "sadness"),
    ("lovesick", "adj", "desire"),
    ("infatuated", "fixed", "desire"),
    ("infatuation", "fixed", "desire"),
    ("obsessed", "fixed", "desire"),
    ("obsession", "noun", "desire"),
    ("obsessive", "adj", "anxiety"),
    ("compulsive", "adj", "anxiety"),
    ("addicted", "fixed", "desire"),
    ("addiction", "noun", "desire"),
    ("dependence", "fixed", "anxiety"),
    ("dependent", "adj", "anxiety"),
    ("needy", "adj", "anxiety"),
    ("clingy", "adj", "anxiety"),
    ("possessive", "adj", "envy"),
    ("territorial", "adj", "anger"),
    ("defensive", "adj", "anxiety"),
    ("guarded", "fixed", "anxiety"),
    ("secretive", "adj", "anxiety"),
    ("secret", "noun", "anxiety"),
    ("mysterious", "adj", "interest"),
    ("mystery", "noun", "interest"),
    ("suspense", "fixed", "anxiety"),
    ("suspenseful", "adj", "anxiety"),
    ("tension", "noun", "anxiety"),
    ("thriller", "noun", "excitement"),
    ("daredevil", "noun", "courage"),
    ("risky", "adj", "fear"),
    ("risk", "noun", "fear"),
    ("gamble", "verb", "excitement"),
    ("bet", "verb", "excitement"),
    ("challenge", "verb", "courage"),
    ("challenging", "fixed", "courage"),
    ("competitive", "adj", "excitement"),
    ("competition", "noun", "excitement"),
    ("rival", "noun", "envy"),
    ("rivalry", "noun", "envy"),
    ("compete", "verb", "excitement"),
    ("striving", "fixed", "hope"),
    ("strive", "verb", "hope"),
    ("struggle", "verb", "pain"),
    ("struggling", "fixed", "pain"),
    ("hardship", "noun", "pain"),
    ("adversity", "fixed", "pain"),
    ("obstacle", "noun", "anxiety"),
    ("setback", "noun", "sadness"),
    ("misfortune", "noun", "sadness"),
    ("unlucky", "adj", "sadness"),
    ("cursed", "fixed", "fear"),
    ("curse", "verb", "anger"),
    ("haunted", "fixed", "fear"),
    ("haunting", "fixed", "fear"),
    ("ghostly", "adj", "fear"),
    ("ghost", "noun", "fear"),
    ("monster", "noun", "fear"),
    ("monstrous", "adj", "fear"),
    ("beast", "noun", "fear"),
    ("demon", "noun", "fear"),
    ("demonic", "adj", "fear"),
    ("hellish", "adj", "fear"),
    ("infernal", "adj", "anger"),
    ("apocalyptic", "adj", "fear"),
    ("apocalypse", "fixed", "fear"),
    ("war", "noun", "fear"),
    ("warlike", "adj", "anger"),
    ("battle", "noun", "anger"),
    ("invasion", "noun", "fear"),
    ("defend", "verb", "courage"),
    ("defender", "noun", "courage"),
    ("guardian", "noun", "courage"),
    ("rescue", "verb", "courage"),
    ("rescuer", "noun", "courage"),
    ("savior", "noun", "hope"),
    ("miracle", "noun", "hope"),
    ("miraculous", "adj", "surprise"),
    ("magical", "adj", "interest"),
    ("magic", "fixed", "interest"),
    ("enchantment", "fixed", "interest"),
    ("dreamlike", "adj", "serenity"),
    ("heavenly", "adj", "joy"),
    ("heaven", "fixed", "joy"),
    ("paradise", "fixed", "joy"),
    ("utopia", "fixed", "hope"),
    ("ideal", "adj", "hope"),
    ("perfect", "adj", "joy"),
    ("perfection", "fixed", "joy"),
    ("flawless", "adj", "confidence"),
    ("pristine", "adj", "serenity"),
    ("pure", "adj", "serenity"),
    ("purity", "fixed", "serenity"),
    ("innocent", "adj", "serenity"),
    ("innocence", "fixed", "serenity"),
    ("naive", "adj", "surprise"),
    ("childlike", "adj", "amusement"),
    ("youthfulness", "fixed", "excitement"),
    ("nimble", "adj", "excitement"),
    ("agile", "adj", "excitement"),
    ("swift", "adj", "excitement"),
    ("quick", "adj", "excitement"),
    ("rapid", "adj", "excitement"),
    ("rush", "verb", "anxiety"),
    ("rushed", "fixed", "anxiety"),
    ("hurry", "verb", "anxiety"),
    ("hurried", "fixed", "anxiety"),
    ("hasty", "adj", "anxiety"),
    ("haste", "fixed", "anxiety"),
    ("frenzied", "adj", "anxiety"),
    ("frenzy", "fixed", "anxiety"),
    ("hysterical", "adj", "fear"),
    ("hysteria", "fixed", "fear"),
    ("manic", "adj", "excitement"),
    ("mania", "fixed", "excitement"),
    ("wild", "adj", "excitement"),
    ("wildness", "fixed", "excitement"),
    ("untamed", "adj", "excitement"),
    ("unleashed", "fixed", "excitement"),
    ("unbound", "adj", "joy"),
    ("soaring", "fixed", "joy"),
    ("soar", "verb", "joy"),
    ("flying", "fixed", "joy"),
    ("floating", "fixed", "serenity"),
    ("float", "verb", "serenity"),
    ("gliding", "fixed", "serenity"),
    ("glide", "verb", "serenity"),
    ("drift", "verb", "serenity"),
    ("flow", "verb", "serenity"),
    ("flowing", "fixed", "serenity"),
    ("smooth", "adj", "serenity"),
    ("rough", "adj", "anger"),
    ("turbulent", "adj", "anxiety"),
    ("turbulence", "fixed", "anxiety"),
    ("storm", "noun", "anger"),
    ("thunderous", "adj", "anger"),
    ("thunder", "fixed", "anger"),
    ("lightning", "fixed", "fear"),
    ("earthquake", "noun", "fear"),
    ("flood", "noun", "fear"),
    ("drought", "noun", "sadness"),
    ("famine", "noun", "sadness"),
    ("plague", "noun", "fear"),
    ("disease", "noun", "fear"),
    ("illness", "noun", "sadness"),
    ("ill", "adj", "sadness"),
    ("ailing", "fixed", "sadness"),
    ("dying", "fixed", "sadness"),
    ("death", "fixed", "sadness"),
    ("deadly", "adj", "fear"),
    ("fatal", "adj", "fear"),
    ("lethal", "adj", "fear"),
    ("mortal", "adj", "fear"),
    ("grave2", "skip", "sadness"),
    ("tomb", "noun", "sadness"),
    ("buried", "fixed", "sadness"),
    ("widow", "noun", "sadness"),
    ("orphan", "noun", "sadness"),
    ("poverty", "fixed", "sadness"),
    ("poor", "adj", "sadness"),
    ("homeless", "adj", "sadness"),
    ("hunger2", "skip", "desire"),
    ("starving", "fixed", "pain"),
    ("starvation", "fixed", "pain"),
    ("thirst", "fixed", "desire"),
    ("exile", "noun", "loneliness"),
    ("banished", "fixed", "loneliness"),
    ("refugee", "noun", "fear"),
    ("prisoner", "noun", "fear"),
    ("captive", "noun", "fear"),
    ("captivity", "fixed", "fear"),
    ("slavery", "fixed", "pain"),
    ("enslaved", "fixed", "pain"),
    ("liberty", "fixed", "joy"),
    ("justice", "fixed", "confidence"),
    ("fairness", "fixed", "gratitude"),
    ("fair", "adj", "gratitude"),
    ("honest", "adj", "confidence"),
    ("honesty", "fixed", "confidence"),
    ("truthful", "adj", "confidence"),
    ("truth", "fixed", "confidence"),
    ("sincere", "adj", "affection"),
    ("sincerity", "fixed", "affection"),
    ("genuine", "adj", "affection"),
    ("authentic", "adj", "confidence"),
    ("reliable", "adj", "confidence"),
    ("dependable", "adj", "confidence"),
    ("stable", "adj", "serenity"),
    ("stability", "fixed", "serenity"),
    ("solid", "adj", "confidence"),
    ("firm", "adj", "confidence"),
    ("grounded", "fixed", "serenity"),
    ("rooted", "fixed", "serenity"),
    ("anchored", "fixed", "serenity"),
    ("unsteady", "adj", "anxiety"),
    ("unstable", "adj", "anxiety"),
    ("instability", "fixed", "anxiety"),
    ("wobbly", "adj", "anxiety"),
    ("precarious", "adj", "anxiety"),
    ("volatile", "adj", "anxiety"),
    ("volatility", "fixed", "anxiety"),
    ("erratic", "adj", "anxiety"),
    ("unpredictable", "adj", "anxiety"),
    ("moody", "adj", "sadness"),
    ("temperamental", "adj", "anger"),
    ("sensitive", "adj", "anxiety"),
    ("sensitivity", "fixed", "anxiety"),
    ("touchy", "adj", "anger"),
    ("thin-skinned", "skip", "anxiety"),
    ("emotional", "adj", "excitement"),
    ("emotion", "noun", "interest"),
    ("feeling", "noun", "interest"),
    ("mood", "noun", "interest"),
    ("temper", "noun", "anger"),
    ("tantrum", "noun", "anger"),
    ("outburst", "noun", "anger"),
    ("eruption", "noun", "anger"),
    ("erupt", "verb", "anger"),
    ("explode", "verb", "anger"),
    ("explosion", "noun", "fear"),
    ("snap", "verb", "anger"),
    ("crack", "verb", "anxiety"),
    ("collapse", "verb", "sadness"),
    ("breakdown", "noun", "sadness"),
    ("meltdown", "noun", "anger"),
    ("burnt", "fixed", "fatigue"),
    ("scarred", "fixed", "pain"),
    ("scar", "noun", "pain"),
    ("bruised", "fixed", "pain"),
    ("bruise", "noun", "pain"),
    ("bleeding", "fixed", "pain"),
    ("bleed", "verb", "pain"),
    ("sore", "adj", "pain"),
    ("tender2", "skip", "pain"),
    ("raw", "adj", "pain"),
    ("sting", "verb", "pain"),
    ("burn", "verb", "pain"),
    ("scalding", "fixed", "pain"),
    ("freezing", "fixed", "pain"),
    ("shivering", "fixed", "fear"),
    ("numbing", "fixed", "boredom"),
    ("aching", "fixed", "pain"),
    ("throbbing", "fixed", "pain"),
    ("cramped", "fixed", "pain"),
    ("strangled", "fixed", "fear"),
    ("choked", "fixed", "fear"),
    ("breathe", "verb", "serenity"),
    ("breathing", "fixed", "serenity"),
    ("sigh", "verb", "sadness"),
    ("yawn", "verb", "boredom"),
    ("slump", "verb", "fatigue"),
    ("slouch", "verb", "fatigue"),
    ("droop", "verb", "fatigue"),
    ("sag", "verb", "fatigue"),
    ("wilt", "verb", "fatigue"),
    ("fade", "verb", "sadness"),
    ("fading", "fixed", "sadness"),
    ("vanish", "verb", "loneliness"),
    ("disappear", "verb", "loneliness"),
    ("invisible", "adj", "loneliness"),
    ("ignored", "fixed", "loneliness"),
    ("ignore", "verb", "contempt"),
    ("overlooked", "fixed", "loneliness"),
    ("unnoticed", "adj", "loneliness"),
    ("unheard", "adj", "loneliness"),
    ("unseen", "adj", "loneliness"),
    ("silent", "adj", "loneliness"),
    ("silence", "fixed", "loneliness"),
    ("mute", "adj", "loneliness"),
    ("speechlessness", "fixed", "surprise"),
    ("quietness", "fixed", "serenity"),
    ("hushed", "fixed", "serenity"),
    ("whisper", "verb", "serenity"),
    ("murmur", "verb", "serenity"),
    ("lullaby", "noun", "serenity"),
    ("slumber", "verb", "serenity"),
    ("nap", "verb", "serenity"),
    ("doze", "verb", "fatigue"),
    ("daydream", "verb", "serenity"),
    ("reverie", "fixed", "serenity"),
    ("meditate", "verb", "serenity"),
    ("meditation", "fixed", "serenity"),
    ("meditative", "adj", "serenity"),
    ("zen", "fixed", "serenity"),
    ("mindfulness", "fixed", "serenity"),
    ("contemplate", "verb", "patience"),
    ("contemplation", "fixed", "patience"),
    ("contemplative", "adj", "patience"),
    ("reflect", "verb", "patience"),
    ("reflective", "adj", "patience"),
    ("pensive", "adj", "sadness"),
    ("brooding", "fixed", "sadness"),
    ("brood", "verb", "sadness"),
    ("ponder", "verb", "patience"),
    ("muse", "verb", "patience"),
    ("introspective", "adj", "patience"),
    ("introspection", "fixed", "patience"),
    ("soulful", "adj", "sadness"),
    ("heartfelt", "adj", "affection"),
    ("wholehearted", "adj", "affection"),
    ("halfhearted", "adj", "boredom"),
    ("heartless", "adj", "contempt"),
    ("coldhearted", "adj", "contempt"),
    ("warmhearted", "adj", "affection"),
    ("kindhearted", "adj", "affection"),
    ("goodhearted", "adj", "affection"),
    ("bighearted", "adj", "affection"),
    ("openhearted", "adj", "affection"),
    ("brokenhearted", "adj", "sadness"),
    ("lighthearted", "adj", "amusement"),
    ("heavyhearted", "adj", "sadness"),
    ("heavy", "adj", "sadness"),
    ("light", "adj", "joy"),
    ("lightness", "fixed", "joy"),
    ("weightless", "adj", "joy"),
    ("burdensome", "adj", "anxiety"),
    ("crushing", "fixed", "sadness"),
    ("uplifting2", "skip", "hope"),
    ("elevating", "fixed", "hope"),
    ("elevate", "verb", "hope"),
    ("ascend", "verb", "hope"),
    ("rising", "fixed", "hope"),
    ("rise", "verb", "hope"),
    ("falling", "fixed", "fear"),
    ("fall", "verb", "sadness"),
    ("sinking", "fixed", "sadness"),
    ("sink", "verb", "sadness"),
    ("drowning", "fixed", "fear"),
    ("drown", "verb", "fear"),
    ("plunge", "verb", "fear"),
    ("plummet", "verb", "fear"),
    ("tumble", "verb", "surprise"),
    ("stumble", "verb", "shame"),
    ("trip", "verb", "shame"),
    ("slip", "verb", "shame"),
    ("crash", "verb", "fear"),
    ("wreck", "verb", "sadness"),
    ("wreckage", "fixed", "sadness"),
    ("debris", "fixed", "sadness"),
    ("ashes", "fixed", "sadness"),
    ("dust", "fixed", "boredom"),
    ("decay", "verb", "disgust"),
    ("rot", "verb", "disgust"),
    ("mold", "fixed", "disgust"),
    ("slime", "fixed", "disgust"),
    ("sludge", "fixed", "disgust"),
    ("grime", "fixed", "disgust"),
    ("grimy", "adj", "disgust"),
    ("dirty", "adj", "disgust"),
    ("dirt", "fixed", "disgust"),
    ("stain", "noun", "disgust"),
    ("stained", "fixed", "disgust"),
    ("tainted", "fixed", "disgust"),
    ("toxic", "adj", "disgust"),
    ("poison", "noun", "fear"),
    ("poisonous", "adj", "fear"),
    ("venomous", "adj", "fear"),
    ("venom", "fixed", "anger"),
    ("snake", "noun", "fear"),
    ("spider", "noun", "fear"),
    ("vermin", "fixed", "disgust"),
    ("rat", "noun", "disgust"),
    ("maggot", "noun", "disgust"),
    ("parasite", "noun", "disgust"),
    ("infestation", "fixed", "disgust"),
    ("infected", "fixed", "disgust"),
    ("infection", "noun", "disgust"),
    ("contaminated", "fixed", "disgust"),
    ("contamination", "fixed", "disgust"),
    ("polluted", "fixed", "disgust"),
    ("pollution", "fixed", "disgust"),
]

SUFFIX_BLOCKLIST = {
    # Morphology artifacts that are not real words.
    "goodness2", "gooder", "badness2", "sadly2",
    "contentness", "crossness", "fairness2", "meanness2",
    "stillness2", "graveness", "soreness2", "rawness2",
    "lightness2", "heavyness", "freeness", "newness2",
    "richness2", "poorness", "illness2", "wrongness",
}


def _adj_forms(word: str) -> list[str]:
    forms = [word]
    if word.endswith("y") and len(word) > 3 and word[-2] not in "aeiou":
        forms.append(word[:-1] + "ily")
        forms.append(word[:-1] + "iness")
    elif word.endswith("le"):
        forms.append(word[:-1] + "y")
        forms.append(word + "ness")
    elif word.endswith("ic"):
        forms.append(word + "ally")
    elif word.endswith("ll"):
        forms.append(word + "y")
    else:
        forms.append(word + "ly")
        forms.append(word + "ness")
    return forms


def _noun_forms(word: str) -> list[str]:
    forms = [word]
    if word.endswith("y") and word[-2] not in "aeiou":
        forms.append(word[:-1] + "ies")
    elif word.endswith(("s", "x", "ch", "sh")):
        forms.append(word + "es")
    else:
        forms.append(word + "s")
    return forms


DOUBLE_FINAL = {"sob", "grin", "hug", "nag", "bet", "snap", "trip", "slip", "rot"}


def _verb_forms(word: str) -> list[str]:
    forms = [word]
    if word.endswith("y") and word[-2] not in "aeiou":
        forms.append(word[:-1] + "ies")
        forms.append(word[:-1] + "ied")
        forms.append(word + "ing")
    elif word.endswith("e") and not word.endswith("ee"):
        forms.append(word + "s")
        forms.append(word + "d")
        forms.append(word[:-1] + "ing")
    elif word in DOUBLE_FINAL:
        c = word[-1]
        forms.append(word + "s")
        forms.append(word + c + "ed")
        forms.append(word + c + "ing")
    else:
        forms.append(word + "s")
        forms.append(word + "ed")
        forms.append(word + "ing")
    return forms


def _jitter(word: str, span: float = 0.11) -> tuple[float, float, float]:
    """Deterministic per-word VAD jitter in [-span, span]^3."""
    digest = hashlib.blake2s(word.encode("utf-8")).digest()
    vals = []
    for i in range(3):
        raw = int.from_bytes(digest[4 * i : 4 * i + 4], "little") / 2**32
        vals.append((2.0 * raw - 1.0) * span)
    return tuple(vals)  # type: ignore[return-value]


def build_entries() -> list[tuple[str, float, float, float]]:
    entries: list[tuple[str, float, float, float]] = []
    seen: set[str] = set()
    for word, pos, family in STEMS:
        if pos == "skip":
            continue
        if pos == "adj":
            forms = _adj_forms(word)
        elif pos == "noun":
            forms = _noun_forms(word)
        elif pos == "verb":
            forms = _verb_forms(word)
        else:
            forms = [word]
        center = FAMILIES[family]
        for j, form in enumerate(forms):
            if form in seen or form in SUFFIX_BLOCKLIST or not form.isalpha():
                continue
            seen.add(form)
            if form in PINNED:
                entries.append((form, *PINNED[form]))
                continue
            jit = _jitter(form, span=0.11 if j == 0 else 0.13)
            unit = []
            for axis in range(3):
                signed = max(-0.95, min(0.95, center[axis] + jit[axis]))
                unit.append(round((signed + 1.0) / 2.0, 5))
            entries.append((form, unit[0], unit[1], unit[2]))
    if len(entries) < TARGET_COUNT:
        raise SystemExit(
            f"stem table too small: {len(entries)} expansions < {TARGET_COUNT}"
        )
    return entries[:TARGET_COUNT]


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    data_dir = root / "src" / "emovac" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    entries = build_entries()
    for pinned in PINNED:
        assert any(w == pinned for w, *_ in entries), f"pinned word lost: {pinned}"

    lex_path = data_dir / "vad_lexicon.tsv"
    with lex_path.open("w", encoding="utf-8") as fh:
        fh.write("word\tvalence\tarousal\tdominance\n")
        for word, v, a, d in entries:
            fh.write(f"{word}\t{v:.5f}\t{a:.5f}\t{d:.5f}\n")

    words_path = data_dir / "curated_words.txt"
    with words_path.open("w", encoding="utf-8") as fh:
        for word, *_ in entries:
            fh.write(word + "\n")

    print(f"wrote {len(entries)} entries to {lex_path}")


if __name__ == "__main__":
    main()
