"""The bundled demonstration lexicon, centered on the word يَد (hand).

Thirty nouns, twenty-nine links, all incident to يَد: ten synonyms, four
antonyms, three hypernyms, two hyponyms, two wholes it is part of, and
eight parts it has.  The word list is treated as opaque orthography;
several forms carry unusual vocalization and are kept exactly as found.

hand_lexicon() builds the graph in the order the links were originally
asserted, which is the orientation stats() reports.  load_fixture() reads
the same graph back from the packaged canonical TSV pair (same graph,
canonicalized link orientations).
"""

from __future__ import annotations

from pathlib import Path

from mujam.lexicon import Lexicon
from mujam.pos import default_taxonomy
from mujam.relations import RelationType
from mujam.tabular import read_tsv

HAND = "يَد"

#: Every link of the demonstration graph, (relation, other endpoint),
#: read as (HAND, relation, endpoint), in original assertion order.
SNIPPET_LINKS: tuple[tuple[RelationType, str], ...] = (
    (RelationType.ANTONYM, "ضَرْبُ"),
    (RelationType.ANTONYM, "شَرْبُ"),
    (RelationType.SYNONYM, "سُلْطَانُ"),
    (RelationType.HOLONYM, "بُنْصُرُ"),
    (RelationType.MERONYM, "ذِرَاعُ"),
    (RelationType.MERONYM, "جِسْمُ"),
    (RelationType.HOLONYM, "خُنْصُرُ"),
    (RelationType.SYNONYM, "إِحْسَانُ"),
    (RelationType.HYPERNYM, "عَضُوُ"),
    (RelationType.SYNONYM, "صَنْدَقَةٌ"),
    (RelationType.SYNONYM, "مِلْكُ"),
    (RelationType.HOLONYM, "سَبَابَةٌ"),
    (RelationType.ANTONYM, "سَوْءُ"),
    (RelationType.HYPONYM, "يَدٍ يُسْرَى"),
    (RelationType.HOLONYM, "سَلَامِيَات"),
    (RelationType.HOLONYM, "إِبْهَام"),
    (RelationType.SYNONYM, "فَوْة"),
    (RelationType.HYPERNYM, "أَدَاة"),
    (RelationType.HOLONYM, "زُسْع"),
    (RelationType.ANTONYM, "أَذِيَّة"),
    (RelationType.SYNONYM, "مَعْرُوف"),
    (RelationType.SYNONYM, "جَمِيل"),
    (RelationType.HOLONYM, "كَف"),
    (RelationType.HOLONYM, "وُسْطَى"),
    (RelationType.HYPONYM, "يَدٍ يُمْنَى"),
    (RelationType.HYPERNYM, "طَّرْف"),
    (RelationType.SYNONYM, "مَقْبُضُ"),
    (RelationType.SYNONYM, "أَقْدَرَة"),
    (RelationType.SYNONYM, "نِعْمَة"),
)

_DATA = Path(__file__).resolve().parent / "data"


def hand_lexicon() -> Lexicon:
    """Build the demonstration graph in assertion order."""
    lexicon = Lexicon(default_taxonomy())
    lexicon.add_word(HAND, "noun")
    for _, other in SNIPPET_LINKS:
        lexicon.add_word(other, "noun")
    for rel, other in SNIPPET_LINKS:
        lexicon.add_relation(HAND, rel, other)
    return lexicon


def fixture_dir() -> Path:
    """Directory holding the packaged fixture TSV pair."""
    return _DATA / "fixture"


def sample_dir() -> Path:
    """Directory holding the packaged tokenizer sample text and counts."""
    return _DATA / "sample"


def load_fixture() -> Lexicon:
    """Read the packaged fixture TSV pair."""
    base = fixture_dir()
    return read_tsv(base / "words.tsv", base / "relations.tsv")
