#!/usr/bin/env python3
"""Desk-scale benchmark: synthesize a dictionary-sized lexicon, time lookups.

    python demos/benchmark.py [--words N] [--synsets M] [--seed S]
"""

import argparse
import time

from mujam import SearchIndex, generate_synthetic, measure_latency

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--words", type=int, default=26195)
parser.add_argument("--synsets", type=int, default=13328)
parser.add_argument("--queries", type=int, default=1000)
parser.add_argument("--seed", type=int, default=2024)
args = parser.parse_args()

started = time.perf_counter()
lexicon = generate_synthetic(args.words, args.synsets, args.seed)
generated = time.perf_counter() - started
stats = lexicon.stats()

print(f"generated in {generated:.2f}s (seed {args.seed}):")
print(f"  {'words':10s} {stats.word_count}")
print(f"  {'synsets':10s} {stats.synset_count}")
for rel, count in sorted(stats.relation_counts.items(), key=lambda kv: kv[0].keyword):
    print(f"  {rel.keyword:10s} {count}")

started = time.perf_counter()
index = SearchIndex(lexicon)
print(f"\nindex built in {time.perf_counter() - started:.2f}s")

report = measure_latency(lexicon, args.queries, args.seed)
print(f"\n{args.queries} seeded uniform lookups:")
print(f"  mean {report.mean_ms:.4f} ms   p95 {report.p95_ms:.4f} ms   "
      f"max {report.max_ms:.4f} ms")

sample = index.lemmas[0]
profile = index.lookup(sample).profile
print(f"\nspot check {sample!r}: {len(profile.synonyms)} synonyms, "
      f"synset {profile.synset_id}")
