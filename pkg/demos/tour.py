#!/usr/bin/env python3
"""Guided tour: build a tiny lexicon, look words up, traverse, validate.

Run from the repository root after `pip install -e .`:

    python demos/tour.py
"""

from mujam import Lexicon, RelationType, SearchIndex

BANNER = "-" * 64


def show(title: str) -> None:
    print(f"\n{BANNER}\n{title}\n{BANNER}")


lexicon = Lexicon()

show("1. Words carry a part of speech from a tripartite taxonomy")
for lemma, pos in [
    ("يَد", "noun"), ("كَف", "noun"), ("إِصْبَع", "noun"),
    ("عَضُو", "noun"), ("جِسْم", "noun"), ("أَخَذَ", "verb"),
]:
    lexicon.add_word(lemma, pos)
    print(f"  added {lemma} ({pos})")

show("2. Adding one edge stores its inverse automatically")
lexicon.add_relation("يَد", RelationType.HYPERNYM, "عَضُو")
lexicon.add_relation("كَف", RelationType.MERONYM, "يَد")
lexicon.add_relation("إِصْبَع", RelationType.MERONYM, "كَف")
lexicon.add_relation("يَد", RelationType.SYNONYM, "كَف")   # for the synset demo
for source, keyword, target in sorted(lexicon.edge_set()):
    print(f"  {source} --{keyword}--> {target}")

show("3. Synsets are connected components under synonym edges")
for synset in lexicon.compute_synsets():
    print(f"  synset {synset.id}: {'، '.join(synset.members)}")

show("4. A profile bundles every relation fan-out of one word")
profile = SearchIndex(lexicon).lookup("يَد").profile
print(f"  lemma:     {profile.lemma}")
print(f"  pos:       {profile.pos}")
print(f"  synonyms:  {profile.synonyms}")
print(f"  hypernyms: {profile.hypernyms}")
print(f"  parts:     {profile.parts}   (has_a)")
print(f"  wholes:    {profile.wholes}   (part_of)")

show("5. Hierarchical relations traverse transitively with depths")
for word, depth in lexicon.transitive("إِصْبَع", RelationType.MERONYM, 5):
    print(f"  depth {depth}: إِصْبَع is part of {word}")

show("6. Diacritic folding finds vocalized entries from bare input")
result = SearchIndex(lexicon).lookup("يد", fold=True)
print(f"  'يد' resolved to {result.profile.lemma}, candidates {result.candidates}")

show("7. The validator confirms structural invariants hold")
violations = lexicon.validate()
print(f"  violations: {violations if violations else 'none'}")

stats = lexicon.stats()
print(f"\nDone: {stats.word_count} words, {stats.synset_count} synsets, "
      f"{sum(stats.relation_counts.values())} links.")
