"""TSV interchange for the lexicon: the system of record on disk.

Two files describe a lexicon:

* ``words.tsv``: header ``lemma<TAB>pos``, one word per row.
* ``relations.tsv``: header ``source<TAB>relation<TAB>target``.

Both are UTF-8 with LF line endings; ``#``-prefixed lines are comments.
The writer is canonical and deterministic: rows sort by code-point order,
symmetric links appear once per unordered pair, and kind-of / part-of
links are written child-first (``hypernym``) and part-first (``meronym``)
only.  The reader accepts all seven keywords and folds ``hyponym`` /
``holonym`` rows into canonical form, applying inverse closure on load.

A part-of-speech taxonomy can be supplied as a third file with header
``id<TAB>label_ar<TAB>label_en<TAB>parent`` (parent empty for roots).
"""

from __future__ import annotations

import unicodedata
from pathlib import Path

from mujam.exceptions import (
    DanglingEndpoint,
    InvalidLemma,
    LexiconError,
    LoadError,
    MalformedRow,
    PosConflict,
    SelfRelation,
    UnknownPos,
    UnknownRelationName,
)
from mujam.lexicon import Lexicon
from mujam.pos import PartOfSpeech, PosTaxonomy
from mujam.relations import RelationType, canonical_link, relation_from_keyword

WORDS_HEADER = "lemma\tpos"
RELATIONS_HEADER = "source\trelation\ttarget"
TAXONOMY_HEADER = "id\tlabel_ar\tlabel_en\tparent"


def _rows(text: str, header: str, path: str) -> list[tuple[int, list[str]]]:
    """Split file text into (line_number, fields) rows, checking the header."""
    want = header.split("\t")
    rows: list[tuple[int, list[str]]] = []
    seen_header = False
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if not seen_header:
            if fields != want:
                raise MalformedRow(
                    f"{path}:{lineno}: expected header {header!r}, got {line!r}",
                    line=lineno, subject=path,
                )
            seen_header = True
            continue
        if len(fields) != len(want):
            raise MalformedRow(
                f"{path}:{lineno}: expected {len(want)} tab-separated fields, got {len(fields)}",
                line=lineno, subject=path,
            )
        rows.append((lineno, fields))
    if not seen_header:
        raise MalformedRow(f"{path}: missing header row {header!r}", subject=path)
    return rows


def _located(err: LexiconError, path: str, lineno: int) -> LexiconError:
    """Rewrap a row-level error with its file location."""
    message = f"{path}:{lineno}: {err.message}"
    if isinstance(err, LoadError):
        return type(err)(message, subject=err.subject, line=lineno)
    return type(err)(message, subject=err.subject)


def parse_lexicon(words_text: str, relations_text: str,
                  taxonomy: PosTaxonomy | None = None,
                  words_path: str = "words.tsv",
                  relations_path: str = "relations.tsv") -> Lexicon:
    """Build a Lexicon from the two TSV texts.

    Relation rows insert both directions (inverse closure on load) and
    duplicates are idempotent.  A relation row naming an absent word is a
    DanglingEndpoint error, never silent word creation.
    """
    lexicon = Lexicon(taxonomy)
    for lineno, fields in _rows(words_text, WORDS_HEADER, words_path):
        lemma, pos = fields
        try:
            lexicon.add_word(lemma, pos)
        except (InvalidLemma, UnknownPos, PosConflict) as err:
            raise _located(err, words_path, lineno) from None

    for lineno, fields in _rows(relations_text, RELATIONS_HEADER, relations_path):
        source, name, target = fields
        try:
            rel = relation_from_keyword(name)
        except UnknownRelationName as err:
            raise _located(err, relations_path, lineno) from None
        source = unicodedata.normalize("NFC", source)
        target = unicodedata.normalize("NFC", target)
        src, rel, tgt = canonical_link(source, rel, target)
        for endpoint in (src, tgt):
            if not lexicon.has_word(endpoint):
                raise DanglingEndpoint(
                    f"{relations_path}:{lineno}: relation references absent word {endpoint!r}",
                    line=lineno, subject=endpoint,
                )
        try:
            lexicon.add_relation(src, rel, tgt)
        except SelfRelation as err:
            raise _located(err, relations_path, lineno) from None
    return lexicon


def read_tsv(words_file: str | Path, relations_file: str | Path,
             taxonomy: PosTaxonomy | None = None) -> Lexicon:
    """Load a lexicon from the words/relations TSV pair on disk."""
    words_path, relations_path = Path(words_file), Path(relations_file)
    return parse_lexicon(
        words_path.read_text(encoding="utf-8"),
        relations_path.read_text(encoding="utf-8"),
        taxonomy,
        words_path=str(words_path),
        relations_path=str(relations_path),
    )


def format_lexicon(lexicon: Lexicon) -> tuple[str, str]:
    """Render (words_text, relations_text) in canonical form.

    Deterministic: equal lexicons produce byte-identical output.
    """
    word_lines = [WORDS_HEADER]
    word_lines.extend(
        f"{lemma}\t{pos}" for lemma, pos in sorted(lexicon.words.items())
    )

    rows = set()
    for link in lexicon.links():
        src, rel, tgt = canonical_link(link.source, link.rel, link.target)
        rows.add((src, rel.keyword, tgt))
    relation_lines = [RELATIONS_HEADER]
    relation_lines.extend("\t".join(row) for row in sorted(rows))

    return "\n".join(word_lines) + "\n", "\n".join(relation_lines) + "\n"


def write_tsv(lexicon: Lexicon, words_file: str | Path, relations_file: str | Path) -> None:
    """Write the canonical TSV pair to disk."""
    words_text, relations_text = format_lexicon(lexicon)
    Path(words_file).write_text(words_text, encoding="utf-8")
    Path(relations_file).write_text(relations_text, encoding="utf-8")


def parse_taxonomy(text: str, path: str = "pos.tsv") -> PosTaxonomy:
    """Load a POS taxonomy from TSV text (rows must precede their children)."""
    taxonomy = PosTaxonomy()
    for lineno, fields in _rows(text, TAXONOMY_HEADER, path):
        pos_id, label_ar, label_en, parent = fields
        try:
            taxonomy.add(PartOfSpeech(pos_id, label_ar, label_en, parent or None))
        except LexiconError as err:
            raise _located(err, path, lineno) from None
    return taxonomy


def load_taxonomy(path: str | Path) -> PosTaxonomy:
    return parse_taxonomy(Path(path).read_text(encoding="utf-8"), path=str(path))


def format_token_report(unique: dict[str, int]) -> str:
    """Render a token frequency table as TSV (lemma, frequency)."""
    lines = ["lemma\tfrequency"]
    lines.extend(f"{lemma}\t{count}" for lemma, count in unique.items())
    return "\n".join(lines) + "\n"
