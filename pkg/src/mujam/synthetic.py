"""Seeded synthetic lexicon generation for benchmarks.

The published lexicon itself is not distributable, so the latency and
count benchmarks run against generated graphs with the same shape: an
exact word count partitioned into an exact synset count, with random
non-synonym edges layered on top.

Everything is driven by one random.Random(seed); the same parameters
always produce the identical lexicon.
"""

from __future__ import annotations

import random

from mujam.exceptions import InvalidParameters
from mujam.lexicon import Lexicon
from mujam.pos import default_taxonomy
from mujam.relations import RelationType

_LETTERS = "ءابتثجحخدذرزسشصضطظعغفقكلمنهوي"
_MARKS = "َُِّْ"
_MARK_RATE = 0.4

#: Non-synonym relations a synthetic graph is seasoned with.  Hyponym and
#: holonym arrive implicitly as the inverses.
_EXTRA_RELATIONS = (
    RelationType.HYPERNYM,
    RelationType.ANTONYM,
    RelationType.MERONYM,
    RelationType.ASSOCIATION,
)


def generate_synthetic(words: int, synsets: int, seed: int,
                       extra_rate: float = 0.15) -> Lexicon:
    """Build a random lexicon with exact word and synset counts.

    Lemmas are random vocalized letter strings; the word set is split
    into `synsets` groups by a random composition and each group is wired
    as a synonym star, so the synonym components match the groups exactly.
    Every group shares one POS.  On top, about words*extra_rate links are
    added per non-synonym relation, always across distinct groups;
    hypernym links always point from a later group to an earlier one, so
    no hypernym cycle and no synonym/antonym conflict can arise.

    Raises InvalidParameters unless 1 <= synsets <= words and
    extra_rate >= 0.
    """
    if not 1 <= synsets <= words:
        raise InvalidParameters(
            f"need 1 <= synsets <= words, got synsets={synsets} words={words}",
            subject=f"{words}/{synsets}",
        )
    if extra_rate < 0:
        raise InvalidParameters(f"extra_rate must be >= 0, got {extra_rate}",
                                subject=str(extra_rate))
    rng = random.Random(seed)

    lemmas = _distinct_lemmas(rng, words)
    groups = _partition(rng, lemmas, synsets)

    lexicon = Lexicon(default_taxonomy())
    pos_ids = [node.id for node in lexicon.taxonomy.roots()]
    for group in groups:
        pos = rng.choice(pos_ids)
        for lemma in group:
            lexicon.add_word(lemma, pos)
        for other in group[1:]:
            lexicon.add_relation(group[0], RelationType.SYNONYM, other)

    if len(groups) > 1:
        per_relation = int(words * extra_rate)
        for rel in _EXTRA_RELATIONS:
            for _ in range(per_relation):
                i, j = sorted(rng.sample(range(len(groups)), 2))
                source = rng.choice(groups[j])
                target = rng.choice(groups[i])
                lexicon.add_relation(source, rel, target)
    return lexicon


def _distinct_lemmas(rng: random.Random, count: int) -> list[str]:
    """Random vocalized lemmas, all distinct, in generation order."""
    seen: set[str] = set()
    out: list[str] = []
    while len(out) < count:
        length = rng.randint(3, 7)
        chars: list[str] = []
        for _ in range(length):
            chars.append(rng.choice(_LETTERS))
            if rng.random() < _MARK_RATE:
                chars.append(rng.choice(_MARKS))
        lemma = "".join(chars)
        if lemma not in seen:
            seen.add(lemma)
            out.append(lemma)
    return out


def _partition(rng: random.Random, lemmas: list[str], parts: int) -> list[list[str]]:
    """Split lemmas into `parts` contiguous nonempty groups, sizes random."""
    if parts == 1:
        return [list(lemmas)]
    cuts = [0, *sorted(rng.sample(range(1, len(lemmas)), parts - 1)), len(lemmas)]
    return [lemmas[cuts[k]:cuts[k + 1]] for k in range(parts)]
