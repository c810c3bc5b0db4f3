"""Arabic text handling: lemma well-formedness, tokenization, diacritic folding.

A lemma is an exact orthographic form.  Identity is code-point equality
after NFC normalization, diacritics included, so يَد and يَدٍ are distinct
words.  Folding (fold_diacritics) exists only for loose lookup.

The tokenizer's notion of "word" is a maximal run of Arabic letters and
short-vowel marks; everything else delimits.  The exact character classes
live in the three constants below so they can be tuned against a given
corpus edition without touching the algorithm.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field

from mujam.exceptions import InvalidLemma

#: Arabic letters (both the base block and the supplement run used by
#: common orthographies).  Includes tatweel U+0640, which is allowed
#: inside a run but stripped from the token text.
LETTER_RANGES = ((0x0621, 0x064A), (0x0671, 0x06D3))

#: Combining marks kept inside tokens: the tashkil block plus the
#: superscript alef.  Quranic annotation marks (U+0653-U+065F,
#: U+06D6-U+06ED) are deliberately absent, i.e. they delimit.
MARK_RANGES = ((0x064B, 0x0652), (0x0670, 0x0670))

#: The elongation character: typographic only, never part of a lemma.
TATWEEL = "ـ"

_TOKEN_CLASS = "".join(
    f"{chr(lo)}-{chr(hi)}" if lo != hi else chr(lo)
    for lo, hi in LETTER_RANGES + MARK_RANGES
)
_TOKEN_RE = re.compile(f"[{_TOKEN_CLASS}]+")

_FOLDED = {chr(c) for lo, hi in MARK_RANGES for c in range(lo, hi + 1)}
_FOLDED.add(TATWEEL)
_FOLD_RE = re.compile("[" + "".join(sorted(_FOLDED)) + "]")


def nfc(text: str) -> str:
    """NFC normalization alone, for comparisons that must not validate."""
    return unicodedata.normalize("NFC", text)


def normalize_lemma(text: str) -> str:
    """NFC-normalize and check lemma well-formedness.

    A valid lemma is nonempty, carries no control characters, and no
    leading, trailing, or consecutive spaces (internal single spaces mark
    multiword expressions).  Raises InvalidLemma otherwise.
    """
    norm = unicodedata.normalize("NFC", text)
    if not norm:
        raise InvalidLemma("lemma is empty", subject=text)
    if norm[0].isspace() or norm[-1].isspace():
        raise InvalidLemma(f"lemma has leading/trailing whitespace: {norm!r}", subject=norm)
    if "  " in norm:
        raise InvalidLemma(f"lemma has consecutive spaces: {norm!r}", subject=norm)
    for ch in norm:
        if unicodedata.category(ch) == "Cc":
            raise InvalidLemma(f"lemma contains a control character: {norm!r}", subject=norm)
    return norm


def fold_diacritics(lemma: str) -> str:
    """Strip tashkil marks, the superscript alef, and tatweel; NFC result.

    Idempotent and never longer than its input in code points.
    """
    return unicodedata.normalize("NFC", _FOLD_RE.sub("", lemma))


def tokenize(text: str) -> list[str]:
    """Cut text into Arabic word tokens.

    Tokens are maximal runs of the letter and mark classes above; spaces,
    Latin, digits, punctuation, verse ornaments, and pause marks all
    delimit.  Tatweel is stripped inside tokens and each token is
    NFC-normalized.  Runs that are tatweel-only vanish.
    """
    tokens = []
    for run in _TOKEN_RE.findall(text):
        token = run.replace(TATWEEL, "")
        if token:
            tokens.append(unicodedata.normalize("NFC", token))
    return tokens


@dataclass
class TokenReport:
    """Token stream plus its first-occurrence-ordered frequency table."""

    tokens: list[str]
    total_count: int
    unique: dict[str, int] = field(default_factory=dict)


def extract_unique(tokens: list[str]) -> TokenReport:
    """Deduplicate a token stream on exact post-NFC form.

    The frequency table preserves first-occurrence order and conserves
    the total: sum(unique.values()) == total_count == len(tokens).
    """
    unique: dict[str, int] = {}
    for token in tokens:
        unique[token] = unique.get(token, 0) + 1
    return TokenReport(tokens=list(tokens), total_count=len(tokens), unique=unique)
