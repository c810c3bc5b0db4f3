"""Search index: profiles, exact and folded lookup, prefix search, latency."""

from __future__ import annotations

import random

import pytest

from mujam.exceptions import EmptyLexicon, InvalidParameters, WordNotFound
from mujam.fixture import HAND, hand_lexicon
from mujam.index import SearchIndex, measure_latency
from mujam.lexicon import Lexicon
from mujam.relations import RelationType, relation_from_keyword
from mujam.text import fold_diacritics

from oracles import random_journal


def _indexed_journal(seed: int, ops: int):
    journal = random_journal(random.Random(seed), ops)
    lexicon = Lexicon()
    for lemma, pos in journal.words.items():
        lexicon.add_word(lemma, pos)
    for source, rel, target in sorted(journal.links):
        lexicon.add_relation(source, relation_from_keyword(rel), target)
    return lexicon, SearchIndex(lexicon)


# ----------------------------------------------------------------------
# Profiles
# ----------------------------------------------------------------------


def test_fixture_profile_counts():
    index = SearchIndex(hand_lexicon())
    profile = index.lookup(HAND).profile
    assert len(profile.synonyms) == 10
    assert len(profile.antonyms) == 4
    assert len(profile.hypernyms) == 3
    assert len(profile.hyponyms) == 2
    assert len(profile.wholes) == 2
    assert len(profile.parts) == 8
    assert len(profile.associations) == 0
    assert profile.pos == "noun"


def test_profiles_are_pure_neighbor_views():
    lexicon, index = _indexed_journal(21, 120)
    for lemma in index.lemmas:
        profile = index.profile(lemma)
        for rel in RelationType:
            assert profile.neighbor_set(rel) == tuple(lexicon.neighbors(lemma, rel))
            assert lemma not in profile.neighbor_set(rel)
        assert profile.synset_id == lexicon.synset_of(lemma).id
        assert profile.pos == lexicon.pos_of(lemma)


def test_direction_of_hierarchical_sets():
    lexicon = Lexicon()
    for lemma in ("يَد", "عَضْو", "إِبْهَام"):
        lexicon.add_word(lemma, "noun")
    lexicon.add_relation("يَد", RelationType.HYPERNYM, "عَضْو")
    lexicon.add_relation("إِبْهَام", RelationType.MERONYM, "يَد")
    index = SearchIndex(lexicon)
    hand = index.profile("يَد")
    assert hand.hypernyms == ("عَضْو",)
    assert hand.parts == ("إِبْهَام",)
    assert hand.wholes == ()
    assert index.profile("عَضْو").hyponyms == ("يَد",)
    assert index.profile("إِبْهَام").wholes == ("يَد",)


# ----------------------------------------------------------------------
# Lookup
# ----------------------------------------------------------------------


def test_exact_lookup_beats_folding():
    lexicon = Lexicon()
    lexicon.add_word("يد", "noun")
    lexicon.add_word("يَد", "noun")
    result = SearchIndex(lexicon).lookup("يد", fold=True)
    assert result.profile.lemma == "يد"
    assert result.candidates == ()


def test_folded_lookup_resolves_smallest_and_lists_candidates():
    lexicon = Lexicon()
    for lemma in ("يَد", "يُد", "يِد"):
        lexicon.add_word(lemma, "noun")
    result = SearchIndex(lexicon).lookup("يد", fold=True)
    assert result.profile.lemma == min("يَد", "يُد", "يِد")
    assert result.candidates == tuple(sorted(("يَد", "يُد", "يِد")))


def test_lookup_without_fold_misses_vocalized_forms():
    index = SearchIndex(hand_lexicon())
    with pytest.raises(WordNotFound):
        index.lookup("يد")
    assert index.lookup("يد", fold=True).profile.lemma == HAND


def test_lookup_unknown_word():
    with pytest.raises(WordNotFound) as err:
        SearchIndex(hand_lexicon()).lookup("قطار", fold=True)
    assert err.value.subject == "قطار"


def test_lookup_normalizes_query_to_nfc():
    lexicon = Lexicon()
    lexicon.add_word("آية", "noun")
    assert SearchIndex(lexicon).lookup("آية").profile.lemma == "آية"


def test_folded_lookup_matches_fold_table():
    lexicon, index = _indexed_journal(22, 150)
    folded_map: dict[str, list[str]] = {}
    for lemma in index.lemmas:
        folded_map.setdefault(fold_diacritics(lemma), []).append(lemma)
    for folded, lemmas in folded_map.items():
        if folded in lexicon.words:
            continue
        result = index.lookup(folded, fold=True)
        assert result.profile.lemma == sorted(lemmas)[0]
        assert result.candidates == tuple(sorted(lemmas))


# ----------------------------------------------------------------------
# Prefix search
# ----------------------------------------------------------------------


def test_prefix_search_exact_forms():
    index = SearchIndex(hand_lexicon())
    total, items = index.search("يَد")
    assert total == 3
    assert items == ["يَد", "يَدٍ يُسْرَى", "يَدٍ يُمْنَى"]


def test_prefix_search_folded():
    index = SearchIndex(hand_lexicon())
    total, items = index.search("يد", fold=True)
    assert total == 3
    assert items == ["يَد", "يَدٍ يُسْرَى", "يَدٍ يُمْنَى"]
    assert index.search("يد")[0] == 0


def test_prefix_search_empty_prefix_pages_everything():
    index = SearchIndex(hand_lexicon())
    total, first = index.search("", limit=10, offset=0)
    _, second = index.search("", limit=10, offset=10)
    _, third = index.search("", limit=10, offset=20)
    assert total == 30
    assert first + second + third == index.lemmas


def test_prefix_search_brute_force_equivalence():
    lexicon, index = _indexed_journal(23, 150)
    rng = random.Random(24)
    for _ in range(200):
        source = rng.choice(index.lemmas)
        prefix = source[: rng.randint(1, len(source))]
        expected = [lemma for lemma in index.lemmas if lemma.startswith(prefix)]
        assert index.search(prefix, limit=500) == (len(expected), expected)
        folded_expected = [
            lemma for lemma in index.lemmas
            if fold_diacritics(lemma).startswith(fold_diacritics(prefix))
        ]
        total, items = index.search(prefix, fold=True, limit=500)
        assert (total, items) == (len(folded_expected), folded_expected)


def test_search_rejects_negative_paging():
    index = SearchIndex(hand_lexicon())
    with pytest.raises(InvalidParameters):
        index.search("يد", limit=-1)


# ----------------------------------------------------------------------
# Latency harness
# ----------------------------------------------------------------------


def test_measure_latency_shape_and_bounds():
    report = measure_latency(hand_lexicon(), 50, seed=3)
    assert report.query_count == 50
    assert 0 <= report.mean_ms <= report.max_ms
    assert report.p95_ms <= report.max_ms


def test_measure_latency_single_query():
    report = measure_latency(hand_lexicon(), 1, seed=3)
    assert report.query_count == 1
    assert report.mean_ms == report.max_ms == report.p95_ms


def test_measure_latency_seed_reproducibility():
    lexicon = hand_lexicon()
    rng_a = random.Random(9)
    rng_b = random.Random(9)
    lemmas = SearchIndex(lexicon).lemmas
    assert rng_a.choices(lemmas, k=40) == rng_b.choices(lemmas, k=40)
    # Same seed, same sequence; the reports exist either way.
    measure_latency(lexicon, 40, seed=9)
    measure_latency(lexicon, 40, seed=9)


def test_measure_latency_rejects_bad_input():
    with pytest.raises(InvalidParameters):
        measure_latency(hand_lexicon(), 0, seed=1)
    with pytest.raises(EmptyLexicon):
        measure_latency(Lexicon(), 10, seed=1)
