"""The in-memory word-relation graph.

Words are exact orthographic lemmas mapped to a part of speech; relations
are directed labeled edges kept closed under inversion: whenever (A, r, B)
is stored, (B, inverse(r), A) is stored with it.  Synsets are the connected
components of the synonym subgraph.

Each semantic link is one fact recorded in the orientation it was first
asserted in; the two directed edges it induces are what neighbors() serves.
stats() and the TSV writer deduplicate back down to links.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import Iterator

from mujam.exceptions import (
    EdgeNotFound,
    PosConflict,
    SelfRelation,
    UnknownPos,
    UnsupportedRelation,
    WordNotFound,
)
from mujam.pos import PosTaxonomy, default_taxonomy
from mujam.relations import (
    SYMMETRIC,
    TRANSITIVE,
    RelationType,
    canonical_link,
    inverse_of,
)
from mujam.text import normalize_lemma

LinkKey = tuple[str, RelationType, str]


@dataclass(frozen=True)
class RelationEdge:
    """One directed labeled edge."""

    source: str
    rel: RelationType
    target: str

    def inverse(self) -> RelationEdge:
        return RelationEdge(self.target, inverse_of(self.rel), self.source)

    def __str__(self) -> str:
        return f"{self.source} -{self.rel.keyword}-> {self.target}"


@dataclass(frozen=True)
class Synset:
    """A maximal set of words connected by synonym edges."""

    id: int
    members: tuple[str, ...]


class ViolationKind(enum.Enum):
    SELF_LOOP = "SelfLoop"
    DANGLING_TARGET = "DanglingTarget"
    MISSING_INVERSE = "MissingInverse"
    SYNONYM_ANTONYM_CONFLICT = "SynonymAntonymConflict"
    HYPERNYM_CYCLE = "HypernymCycle"


#: The first three kinds only ever arise from raw imports; graphs built
#: through the public mutation API cannot exhibit them.
ERROR_KINDS = frozenset({
    ViolationKind.SELF_LOOP,
    ViolationKind.DANGLING_TARGET,
    ViolationKind.MISSING_INVERSE,
})


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    subject: str
    message: str

    @property
    def severity(self) -> str:
        return "error" if self.kind in ERROR_KINDS else "warning"


@dataclass
class LexiconStats:
    word_count: int
    synset_count: int
    relation_counts: dict[RelationType, int] = field(default_factory=dict)


class Lexicon:
    """Word table plus relation graph over a POS taxonomy."""

    def __init__(self, taxonomy: PosTaxonomy | None = None):
        self.taxonomy = taxonomy if taxonomy is not None else default_taxonomy()
        self._words: dict[str, str] = {}
        self._adj: dict[RelationType, dict[str, set[str]]] = {r: {} for r in RelationType}
        self._orient: dict[LinkKey, RelationEdge] = {}
        self._version = 0
        self._synset_cache: tuple[int, list[Synset]] | None = None

    # ------------------------------------------------------------------
    # Words
    # ------------------------------------------------------------------

    @property
    def words(self) -> dict[str, str]:
        """lemma -> POS id.  Treat as read-only."""
        return self._words

    @property
    def word_count(self) -> int:
        return len(self._words)

    def has_word(self, lemma: str) -> bool:
        return _nfc(lemma) in self._words

    def pos_of(self, lemma: str) -> str:
        norm = _nfc(lemma)
        try:
            return self._words[norm]
        except KeyError:
            raise WordNotFound(f"word not found: {norm!r}", subject=norm) from None

    def add_word(self, lemma: str, pos: str) -> None:
        """Insert a word; idempotent when the POS matches.

        Raises InvalidLemma on malformed input, UnknownPos when the POS id
        is absent from the taxonomy, and PosConflict when the word already
        exists under a different POS.
        """
        norm = normalize_lemma(lemma)
        if pos not in self.taxonomy:
            raise UnknownPos(f"unknown POS id: {pos!r}", subject=pos)
        existing = self._words.get(norm)
        if existing is not None:
            if existing != pos:
                raise PosConflict(
                    f"word {norm!r} already has POS {existing!r}, not {pos!r}",
                    subject=norm,
                )
            return
        self._words[norm] = pos
        self._bump()

    # ------------------------------------------------------------------
    # Edges
    # ------------------------------------------------------------------

    def add_relation(self, source: str, rel: RelationType, target: str) -> None:
        """Assert a link; both directed edges become queryable.  Idempotent.

        The self check precedes the existence check so a reflexive request
        is always reported as SelfRelation, whether or not the word exists.
        """
        src, tgt = _nfc(source), _nfc(target)
        if src == tgt:
            raise SelfRelation(f"self-relation on {src!r}", subject=src)
        for endpoint, name in ((src, "source"), (tgt, "target")):
            if endpoint not in self._words:
                raise WordNotFound(
                    f"{name} word not found: {endpoint!r}", subject=endpoint
                )
        self._insert_directed(src, rel, tgt)
        self._insert_directed(tgt, inverse_of(rel), src)
        self._orient.setdefault(canonical_link(src, rel, tgt), RelationEdge(src, rel, tgt))
        self._bump()

    def remove_relation(self, source: str, rel: RelationType, target: str) -> None:
        """Retract a link: the edge and its inverse go atomically."""
        src, tgt = _nfc(source), _nfc(target)
        if not self.has_edge(src, rel, tgt):
            raise EdgeNotFound(
                f"no such edge: {src} -{rel.keyword}-> {tgt}",
                subject=f"{src} -{rel.keyword}-> {tgt}",
            )
        self._discard_directed(src, rel, tgt)
        self._discard_directed(tgt, inverse_of(rel), src)
        self._orient.pop(canonical_link(src, rel, tgt), None)
        self._bump()

    def add_edge_unchecked(self, source: str, rel: RelationType, target: str) -> None:
        """Insert one directed edge with no checks and no inverse.

        Raw-import escape hatch: the resulting graph may violate the
        self-loop, dangling-endpoint, and inverse-closure invariants, which
        is exactly what validate() exists to report.
        """
        src, tgt = _nfc(source), _nfc(target)
        self._insert_directed(src, rel, tgt)
        self._orient.setdefault(canonical_link(src, rel, tgt), RelationEdge(src, rel, tgt))
        self._bump()

    def has_edge(self, source: str, rel: RelationType, target: str) -> bool:
        return _nfc(target) in self._adj[rel].get(_nfc(source), ())

    def neighbors(self, word: str, rel: RelationType) -> list[str]:
        """Targets of the outgoing rel-edges of word, in code-point order."""
        norm = _nfc(word)
        if norm not in self._words:
            raise WordNotFound(f"word not found: {norm!r}", subject=norm)
        return sorted(self._adj[rel].get(norm, ()))

    def edges(self) -> list[RelationEdge]:
        """Every directed edge, deterministically ordered."""
        out = [
            RelationEdge(src, rel, tgt)
            for rel in RelationType
            for src, targets in self._adj[rel].items()
            for tgt in targets
        ]
        out.sort(key=lambda e: (e.source, e.rel.keyword, e.target))
        return out

    def edge_set(self) -> frozenset[tuple[str, str, str]]:
        return frozenset(
            (src, rel.keyword, tgt)
            for rel in RelationType
            for src, targets in self._adj[rel].items()
            for tgt in targets
        )

    def links(self) -> list[RelationEdge]:
        """Each underlying link once, in its recorded orientation."""
        keys = {
            canonical_link(src, rel, tgt)
            for rel in RelationType
            for src, targets in self._adj[rel].items()
            for tgt in targets
        }
        out = [
            self._orient.get(key, RelationEdge(key[0], key[1], key[2]))
            for key in keys
        ]
        out.sort(key=lambda e: (e.source, e.rel.keyword, e.target))
        return out

    def transitive(self, word: str, rel: RelationType, max_depth: int) -> list[tuple[str, int]]:
        """Breadth-first closure of word under rel, to max_depth.

        Each reachable word is reported once at its minimal depth; the
        start word is excluded and cycles terminate via the visited set.
        Only the four chainable relations are supported.
        """
        if rel not in TRANSITIVE:
            raise UnsupportedRelation(
                f"transitive traversal is undefined for {rel.keyword}",
                subject=rel.keyword,
            )
        norm = _nfc(word)
        if norm not in self._words:
            raise WordNotFound(f"word not found: {norm!r}", subject=norm)
        adj = self._adj[rel]
        visited = {norm}
        frontier = [norm]
        out: list[tuple[str, int]] = []
        depth = 0
        while frontier and depth < max_depth:
            depth += 1
            reached = {t for f in frontier for t in adj.get(f, ())} - visited
            frontier = sorted(reached)
            visited |= reached
            out.extend((lemma, depth) for lemma in frontier)
        return out

    # ------------------------------------------------------------------
    # Synsets
    # ------------------------------------------------------------------

    def compute_synsets(self) -> list[Synset]:
        """Partition the word set into synonym components.

        Ids are assigned ascending by each component's smallest member in
        code-point order, so re-runs over identical input are stable.
        """
        if self._synset_cache is not None and self._synset_cache[0] == self._version:
            return self._synset_cache[1]
        undirected: dict[str, set[str]] = {}
        for src, targets in self._adj[RelationType.SYNONYM].items():
            for tgt in targets:
                undirected.setdefault(src, set()).add(tgt)
                undirected.setdefault(tgt, set()).add(src)
        seen: set[str] = set()
        components: list[tuple[str, ...]] = []
        for word in self._words:
            if word in seen:
                continue
            stack, members = [word], {word}
            seen.add(word)
            while stack:
                for nbr in undirected.get(stack.pop(), ()):
                    if nbr not in seen and nbr in self._words:
                        seen.add(nbr)
                        members.add(nbr)
                        stack.append(nbr)
            components.append(tuple(sorted(members)))
        components.sort(key=lambda m: m[0])
        synsets = [Synset(i, members) for i, members in enumerate(components, start=1)]
        self._synset_cache = (self._version, synsets)
        return synsets

    def synset_of(self, lemma: str) -> Synset:
        norm = _nfc(lemma)
        if norm not in self._words:
            raise WordNotFound(f"word not found: {norm!r}", subject=norm)
        for synset in self.compute_synsets():
            if norm in synset.members:
                return synset
        raise AssertionError("synsets must partition the word set")

    # ------------------------------------------------------------------
    # Validation and summary
    # ------------------------------------------------------------------

    def validate(self) -> list[Violation]:
        """Report invariant violations; an empty list means a clean graph."""
        violations: list[Violation] = []
        edges = self.edges()

        for edge in edges:
            if edge.source == edge.target:
                violations.append(Violation(
                    ViolationKind.SELF_LOOP, str(edge), f"self-loop: {edge}",
                ))
            for endpoint in (edge.source, edge.target):
                if endpoint not in self._words:
                    violations.append(Violation(
                        ViolationKind.DANGLING_TARGET, str(edge),
                        f"edge endpoint {endpoint!r} is not a word: {edge}",
                    ))
            if not self.has_edge(edge.target, inverse_of(edge.rel), edge.source):
                violations.append(Violation(
                    ViolationKind.MISSING_INVERSE, str(edge),
                    f"missing inverse of {edge}",
                ))

        conflicted: set[tuple[str, str]] = set()
        for src, targets in self._adj[RelationType.SYNONYM].items():
            for tgt in targets:
                pair = (src, tgt) if src <= tgt else (tgt, src)
                if pair not in conflicted and tgt in self._adj[RelationType.ANTONYM].get(src, ()):
                    conflicted.add(pair)
        violations.extend(
            Violation(
                ViolationKind.SYNONYM_ANTONYM_CONFLICT, f"{a} <> {b}",
                f"{a!r} and {b!r} are related as both synonym and antonym",
            )
            for a, b in sorted(conflicted)
        )

        for component in _cycle_components(self._adj[RelationType.HYPERNYM]):
            members = sorted(component)
            violations.append(Violation(
                ViolationKind.HYPERNYM_CYCLE, members[0],
                "hypernym cycle through: " + ", ".join(members),
            ))

        order = {kind: i for i, kind in enumerate(ViolationKind)}
        violations.sort(key=lambda v: (order[v.kind], v.subject))
        return violations

    def stats(self) -> LexiconStats:
        """Word, synset, and per-relation link counts.

        Symmetric links count once per unordered pair; hypernym/hyponym and
        meronym/holonym links count once under the orientation they were
        recorded in.
        """
        counts = {rel: 0 for rel in RelationType}
        for link in self.links():
            counts[link.rel] += 1
        return LexiconStats(
            word_count=len(self._words),
            synset_count=len(self.compute_synsets()),
            relation_counts=counts,
        )

    # ------------------------------------------------------------------
    # Plumbing
    # ------------------------------------------------------------------

    def copy(self) -> Lexicon:
        clone = Lexicon(self.taxonomy.copy())
        clone._words = dict(self._words)
        clone._adj = {
            rel: {src: set(targets) for src, targets in adj.items()}
            for rel, adj in self._adj.items()
        }
        clone._orient = dict(self._orient)
        return clone

    def __eq__(self, other: object) -> bool:
        """Graph equality: same word table (with POS) and same edge set."""
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._words == other._words and self.edge_set() == other.edge_set()

    def __repr__(self) -> str:
        return f"<Lexicon words={len(self._words)} links={len(self.links())}>"

    def _insert_directed(self, src: str, rel: RelationType, tgt: str) -> None:
        self._adj[rel].setdefault(src, set()).add(tgt)

    def _discard_directed(self, src: str, rel: RelationType, tgt: str) -> None:
        targets = self._adj[rel].get(src)
        if targets:
            targets.discard(tgt)
            if not targets:
                del self._adj[rel][src]

    def _bump(self) -> None:
        self._version += 1
        self._synset_cache = None


def _cycle_components(adjacency: dict[str, set[str]]) -> list[set[str]]:
    """Strongly connected components of size > 1 (one per cycle cluster).

    Iterative Tarjan over the hypernym digraph; self-loops are reported
    separately as SelfLoop so singleton components are skipped here.
    """
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    components: list[set[str]] = []

    for root in sorted(adjacency):
        if root in index:
            continue
        work: list[tuple[str, Iterator[str]]] = [(root, iter(sorted(adjacency.get(root, ()))))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nbr in it:
                if nbr not in index:
                    index[nbr] = lowlink[nbr] = counter
                    counter += 1
                    stack.append(nbr)
                    on_stack.add(nbr)
                    work.append((nbr, iter(sorted(adjacency.get(nbr, ())))))
                    advanced = True
                    break
                if nbr in on_stack:
                    lowlink[node] = min(lowlink[node], index[nbr])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component: set[str] = set()
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.add(member)
                    if member == node:
                        break
                if len(component) > 1:
                    components.append(component)
    return components


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)
