"""The seven semantic relation types and their inverse algebra.

Directional reading of an edge ``(source, rel, target)``:

* ``SYNONYM`` / ``ANTONYM`` / ``ASSOCIATION``: symmetric.
* ``HYPERNYM``: source is a kind of target (target is the parent).
* ``HYPONYM``: target is a kind of source (target is the child).
* ``MERONYM``: source is a part of target (target is the whole).
* ``HOLONYM``: target is a part of source (source is the whole).

Every stored edge coexists with its inverse-typed reverse edge, so
``neighbors(w, HYPERNYM)`` always lists the parents of ``w`` and so on.
"""

from __future__ import annotations

import enum

from mujam.exceptions import UnknownRelationName


class RelationType(enum.Enum):
    """One of the seven semantic relations; values are the TSV keywords."""

    SYNONYM = "synonym"
    ANTONYM = "antonym"
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"
    MERONYM = "meronym"
    HOLONYM = "holonym"
    ASSOCIATION = "association"

    @property
    def keyword(self) -> str:
        return self.value

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


INVERSES: dict[RelationType, RelationType] = {
    RelationType.SYNONYM: RelationType.SYNONYM,
    RelationType.ANTONYM: RelationType.ANTONYM,
    RelationType.ASSOCIATION: RelationType.ASSOCIATION,
    RelationType.HYPERNYM: RelationType.HYPONYM,
    RelationType.HYPONYM: RelationType.HYPERNYM,
    RelationType.MERONYM: RelationType.HOLONYM,
    RelationType.HOLONYM: RelationType.MERONYM,
}

SYMMETRIC: frozenset[RelationType] = frozenset(
    r for r, inv in INVERSES.items() if r is inv
)

#: Relations that admit transitive (chain) traversal.
TRANSITIVE: frozenset[RelationType] = frozenset({
    RelationType.HYPERNYM,
    RelationType.HYPONYM,
    RelationType.MERONYM,
    RelationType.HOLONYM,
})

#: Bilingual display labels (Arabic, English).  These strings are display
#: metadata only; wire formats use the lowercase keywords.
LABELS: dict[RelationType, tuple[str, str]] = {
    RelationType.SYNONYM: ("المرادفات", "synonyms"),
    RelationType.ANTONYM: ("الأضداد", "antonyms"),
    RelationType.HYPERNYM: ("الأعم", "hypernyms"),
    RelationType.HYPONYM: ("الأخص", "hyponyms"),
    RelationType.MERONYM: ("جزء من", "part of"),
    RelationType.HOLONYM: ("الأجزاء", "parts"),
    RelationType.ASSOCIATION: ("المتلازمات", "associations"),
}


def inverse_of(rel: RelationType) -> RelationType:
    """Return the inverse relation; an involution over all seven values."""
    return INVERSES[rel]


def relation_from_keyword(name: str) -> RelationType:
    """Map a lowercase keyword to its RelationType.

    Raises UnknownRelationName for anything outside the closed keyword set.
    """
    try:
        return RelationType(name)
    except ValueError:
        raise UnknownRelationName(
            f"unknown relation name: {name!r}", subject=name
        ) from None


def canonical_link(source: str, rel: RelationType, target: str) -> tuple[str, RelationType, str]:
    """Normalize an edge to the canonical orientation of its underlying link.

    Symmetric edges order their endpoints by code-point order; HYPONYM and
    HOLONYM edges flip into HYPERNYM ("child hypernym parent") and MERONYM
    ("part meronym whole") form.  Two edges describe the same link iff they
    normalize to the same triple.
    """
    if rel in SYMMETRIC:
        a, b = sorted((source, target))
        return (a, rel, b)
    if rel is RelationType.HYPONYM:
        return (target, RelationType.HYPERNYM, source)
    if rel is RelationType.HOLONYM:
        return (target, RelationType.MERONYM, source)
    return (source, rel, target)
