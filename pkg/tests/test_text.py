"""Tokenizer, lemma well-formedness, and diacritic folding."""

from __future__ import annotations

import random
import unicodedata

import pytest

from mujam.exceptions import InvalidLemma
from mujam.text import (
    MARK_RANGES,
    TATWEEL,
    extract_unique,
    fold_diacritics,
    normalize_lemma,
    tokenize,
)

from oracles import fold_by_filter

_LETTERS = "ابتثجحخدذرزسشصضطظعغفقكلمنهويءآأإئؤى"
_MARKS = [chr(c) for lo, hi in MARK_RANGES for c in range(lo, hi + 1)]


def _random_diacritized(rng: random.Random, length: int) -> str:
    chars = []
    for _ in range(length):
        chars.append(rng.choice(_LETTERS))
        if rng.random() < 0.5:
            chars.append(rng.choice(_MARKS))
        if rng.random() < 0.1:
            chars.append(TATWEEL)
    return "".join(chars)


# ----------------------------------------------------------------------
# tokenize
# ----------------------------------------------------------------------


def test_empty_text_gives_no_tokens():
    assert tokenize("") == []


def test_verse_tokenizes_to_four_words():
    assert tokenize("قُلْ هُوَ اللَّهُ أَحَدٌ") == ["قُلْ", "هُوَ", "اللَّهُ", "أَحَدٌ"]


def test_ornaments_and_digits_delimit():
    assert tokenize("﴿قُلْ﴾ ١") == ["قُلْ"]


def test_latin_digits_punctuation_delimit():
    assert tokenize("word قَلَم 12, done؛ كِتاب!") == ["قَلَم", "كِتاب"]


def test_tatweel_stripped_inside_tokens():
    assert tokenize("كـتـاب") == ["كتاب"]
    assert tokenize("ـ ـــ") == []


def test_quranic_annotation_marks_delimit():
    # Small high seen U+06DC sits outside the kept mark ranges.
    assert tokenize("يَكُنۜلَّهُ") == ["يَكُن", "لَّهُ"]


def test_precomposed_hamza_letters_pass_through():
    assert tokenize("آية أَمَل إِبِل مُؤْمِن") == ["آية", "أَمَل", "إِبِل", "مُؤْمِن"]


def test_decomposed_madda_delimits():
    # Cutting happens on the raw text and NFC per token afterwards; the
    # bare combining madda U+0653 is outside the kept mark set, so a
    # decomposed آ splits instead of composing.
    assert tokenize("آية") == ["ا", "ية"]


def test_tokens_never_contain_delimiters_or_tatweel():
    rng = random.Random(42)
    for _ in range(300):
        blobs = [_random_diacritized(rng, rng.randint(1, 5)) for _ in range(rng.randint(0, 6))]
        glue = rng.choice([" ", " 12 ", "، ", "\n", " x "])
        for token in tokenize(glue.join(blobs)):
            assert token
            assert TATWEEL not in token
            assert unicodedata.normalize("NFC", token) == token


def test_round_trip_stability():
    rng = random.Random(43)
    for _ in range(300):
        text = " ".join(_random_diacritized(rng, rng.randint(1, 6))
                        for _ in range(rng.randint(1, 8)))
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


# ----------------------------------------------------------------------
# extract_unique
# ----------------------------------------------------------------------


def test_extract_unique_counts_and_order():
    report = extract_unique(["الله", "أكبر", "الله"])
    assert report.total_count == 3
    assert report.unique == {"الله": 2, "أكبر": 1}
    assert list(report.unique) == ["الله", "أكبر"]


def test_extract_unique_empty():
    report = extract_unique([])
    assert report.total_count == 0
    assert report.unique == {}


def test_extract_unique_conserves_frequency():
    rng = random.Random(44)
    for _ in range(200):
        tokens = [rng.choice(["يَد", "يد", "قَلَم", "بَاب"])
                  for _ in range(rng.randint(0, 30))]
        report = extract_unique(tokens)
        assert sum(report.unique.values()) == report.total_count == len(tokens)
        seen = []
        for token in tokens:
            if token not in seen:
                seen.append(token)
        assert list(report.unique) == seen


# ----------------------------------------------------------------------
# fold_diacritics
# ----------------------------------------------------------------------


def test_fold_strips_short_vowels():
    assert fold_diacritics("يَد") == "يد"
    assert fold_diacritics("يَدٍ يُسْرَى") == "يد يسرى"


def test_fold_is_fixed_point_on_bare_text():
    assert fold_diacritics("يد") == "يد"


def test_fold_matches_filter_oracle_and_is_idempotent():
    rng = random.Random(45)
    for _ in range(500):
        text = _random_diacritized(rng, rng.randint(1, 8))
        folded = fold_diacritics(text)
        assert folded == fold_by_filter(text)
        assert fold_diacritics(folded) == folded
        assert len(folded) <= len(text)


# ----------------------------------------------------------------------
# normalize_lemma
# ----------------------------------------------------------------------


def test_normalize_keeps_exact_vocalized_form():
    assert normalize_lemma("يَد") == "يَد"
    assert normalize_lemma("يَدٍ يُسْرَى") == "يَدٍ يُسْرَى"


def test_normalize_applies_nfc():
    decomposed = "آية"
    assert normalize_lemma(decomposed) == unicodedata.normalize("NFC", decomposed)


@pytest.mark.parametrize("bad", ["", " يد", "يد ", "يد  يد", "يد\tيد", "يد\nيد"])
def test_normalize_rejects_malformed(bad):
    with pytest.raises(InvalidLemma):
        normalize_lemma(bad)
