"""Indexed lookup over a fixed lexicon snapshot.

A SearchIndex precomputes one WordProfile per word, a diacritic-folded
form table, and sorted lemma lists for prefix search.  It never mutates
and never observes mutation: build a new index from a new lexicon copy.

The latency harness lives here too, since what it times is exactly one
index lookup per query.
"""

from __future__ import annotations

import bisect
import random
import time
from dataclasses import dataclass

from mujam.exceptions import EmptyLexicon, InvalidParameters, WordNotFound
from mujam.lexicon import Lexicon
from mujam.relations import RelationType
from mujam.text import fold_diacritics, nfc

# One profile attribute per relation, in the order the relations enumerate.
_PROFILE_FIELDS: dict[RelationType, str] = {
    RelationType.SYNONYM: "synonyms",
    RelationType.ANTONYM: "antonyms",
    RelationType.HYPERNYM: "hypernyms",
    RelationType.HYPONYM: "hyponyms",
    RelationType.MERONYM: "wholes",
    RelationType.HOLONYM: "parts",
    RelationType.ASSOCIATION: "associations",
}


@dataclass(frozen=True)
class WordProfile:
    """The full relation fan-out of one word.

    Every set holds the targets of the word's outgoing edges of one type,
    sorted, never including the word itself: `hypernyms` are the words
    this one is a kind of, `hyponyms` its kinds, `wholes` what it is part
    of, `parts` what it has.
    """

    lemma: str
    pos: str
    synset_id: int
    synonyms: tuple[str, ...]
    antonyms: tuple[str, ...]
    hypernyms: tuple[str, ...]
    hyponyms: tuple[str, ...]
    wholes: tuple[str, ...]
    parts: tuple[str, ...]
    associations: tuple[str, ...]

    def neighbor_set(self, rel: RelationType) -> tuple[str, ...]:
        return getattr(self, _PROFILE_FIELDS[rel])


@dataclass(frozen=True)
class LookupResult:
    """A resolved profile plus, after a folded match, every candidate form."""

    profile: WordProfile
    candidates: tuple[str, ...] = ()


@dataclass(frozen=True)
class LatencyReport:
    query_count: int
    mean_ms: float
    p95_ms: float
    max_ms: float


class SearchIndex:
    """Read-only lookup structure over one lexicon state."""

    def __init__(self, lexicon: Lexicon):
        synset_of: dict[str, int] = {}
        members_of: dict[int, tuple[str, ...]] = {}
        for synset in lexicon.compute_synsets():
            members_of[synset.id] = synset.members
            for member in synset.members:
                synset_of[member] = synset.id

        self._profiles: dict[str, WordProfile] = {}
        for lemma, pos in lexicon.words.items():
            sets = {
                field: tuple(lexicon.neighbors(lemma, rel))
                for rel, field in _PROFILE_FIELDS.items()
            }
            self._profiles[lemma] = WordProfile(
                lemma=lemma, pos=pos, synset_id=synset_of[lemma], **sets
            )
        self._synsets = members_of
        self._lemmas: list[str] = sorted(self._profiles)
        # Folded form -> all stored forms, ascending; first is the fold winner.
        self._folded: dict[str, list[str]] = {}
        for lemma in self._lemmas:
            self._folded.setdefault(fold_diacritics(lemma), []).append(lemma)
        self._folded_pairs: list[tuple[str, str]] = sorted(
            (folded, lemma)
            for folded, lemmas in self._folded.items()
            for lemma in lemmas
        )

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    @property
    def lemmas(self) -> list[str]:
        """All indexed lemmas in code-point order.  Treat as read-only."""
        return self._lemmas

    def __len__(self) -> int:
        return len(self._profiles)

    def profile(self, lemma: str) -> WordProfile:
        try:
            return self._profiles[nfc(lemma)]
        except KeyError:
            raise WordNotFound(f"word not found: {lemma!r}", subject=nfc(lemma)) from None

    def synset_members(self, synset_id: int) -> tuple[str, ...] | None:
        return self._synsets.get(synset_id)

    def lookup(self, query: str, fold: bool = False) -> LookupResult:
        """Resolve a query to a profile.

        Exact orthographic match wins.  With fold=true a miss retries on
        diacritic-folded equality; when several stored forms fold to the
        query, the smallest in binary order is resolved and all of them
        come back as candidates.
        """
        norm = nfc(query)
        exact = self._profiles.get(norm)
        if exact is not None:
            return LookupResult(exact)
        if fold:
            candidates = self._folded.get(fold_diacritics(norm))
            if candidates:
                return LookupResult(self._profiles[candidates[0]], tuple(candidates))
        raise WordNotFound(f"word not found: {norm!r}", subject=norm)

    def search(self, prefix: str, fold: bool = False,
               limit: int = 50, offset: int = 0) -> tuple[int, list[str]]:
        """Lemmas starting with prefix, paged; returns (total, page).

        With fold=true the match is between folded forms, so an
        unvocalized prefix finds fully vocalized entries.  An empty prefix
        pages through the whole word list.
        """
        if limit < 0 or offset < 0:
            raise InvalidParameters(
                "limit and offset must be non-negative",
                subject=f"limit={limit} offset={offset}",
            )
        if fold:
            needle = fold_diacritics(nfc(prefix))
            lo = bisect.bisect_left(self._folded_pairs, (needle,))
            hi = bisect.bisect_left(self._folded_pairs, (_after(needle),))
            hits = sorted(lemma for _, lemma in self._folded_pairs[lo:hi])
        else:
            needle = nfc(prefix)
            lo = bisect.bisect_left(self._lemmas, needle)
            hi = bisect.bisect_left(self._lemmas, _after(needle))
            hits = self._lemmas[lo:hi]
        return len(hits), hits[offset:offset + limit]


def measure_latency(lexicon: Lexicon, n: int, seed: int) -> LatencyReport:
    """Time n exact lookups of seeded uniformly sampled existing lemmas.

    The index is built before the clock starts; what is measured is the
    per-query resolution alone.  The same seed yields the same query
    sequence on every run.
    """
    if n < 1:
        raise InvalidParameters("query count must be at least 1", subject=str(n))
    if lexicon.word_count == 0:
        raise EmptyLexicon("cannot sample queries from an empty lexicon")
    index = SearchIndex(lexicon)
    rng = random.Random(seed)
    queries = rng.choices(index.lemmas, k=n)

    timings_ms: list[float] = []
    for query in queries:
        start = time.perf_counter_ns()
        index.lookup(query)
        timings_ms.append((time.perf_counter_ns() - start) / 1e6)
    ordered = sorted(timings_ms)
    return LatencyReport(
        query_count=n,
        mean_ms=sum(ordered) / n,
        p95_ms=ordered[max(0, -(-n * 95 // 100) - 1)],
        max_ms=ordered[-1],
    )


def _after(prefix: str) -> str:
    """The least string greater than every string with this prefix."""
    return prefix + "\U0010FFFF"
