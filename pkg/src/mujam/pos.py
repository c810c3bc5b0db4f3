"""Part-of-speech taxonomy: a configurable tree of grammatical categories.

The default taxonomy is the classical tripartite top level of Arabic
grammar (noun / verb / particle).  A richer hierarchy can be loaded from a
TSV file without code changes; see tabular.load_taxonomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from mujam.exceptions import InvalidTaxonomy, UnknownPos


@dataclass(frozen=True)
class PartOfSpeech:
    """One node of the POS tree."""

    id: str
    label_ar: str
    label_en: str
    parent: str | None = None


class PosTaxonomy:
    """An id-keyed forest of PartOfSpeech nodes (each node has at most one parent)."""

    def __init__(self, nodes: list[PartOfSpeech] | None = None):
        self._nodes: dict[str, PartOfSpeech] = {}
        for node in nodes or []:
            self.add(node)

    def add(self, node: PartOfSpeech) -> None:
        """Insert a node; the parent, if named, must already exist."""
        if node.id in self._nodes:
            if self._nodes[node.id] == node:
                return
            raise InvalidTaxonomy(f"duplicate POS id: {node.id}", subject=node.id)
        if node.parent is not None and node.parent not in self._nodes:
            raise InvalidTaxonomy(
                f"POS {node.id!r} names unknown parent {node.parent!r}",
                subject=node.id,
            )
        if node.parent == node.id:
            raise InvalidTaxonomy(f"POS {node.id!r} is its own parent", subject=node.id)
        self._nodes[node.id] = node

    def __contains__(self, pos_id: str) -> bool:
        return pos_id in self._nodes

    def __iter__(self) -> Iterator[PartOfSpeech]:
        return iter(self._nodes.values())

    def __len__(self) -> int:
        return len(self._nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PosTaxonomy):
            return NotImplemented
        return self._nodes == other._nodes

    def get(self, pos_id: str) -> PartOfSpeech:
        try:
            return self._nodes[pos_id]
        except KeyError:
            raise UnknownPos(f"unknown POS id: {pos_id!r}", subject=pos_id) from None

    def roots(self) -> list[PartOfSpeech]:
        return [n for n in self._nodes.values() if n.parent is None]

    def by_arabic_label(self, label: str) -> PartOfSpeech | None:
        """Resolve a node by its Arabic label (used by the RDF reader)."""
        for node in self._nodes.values():
            if node.label_ar == label:
                return node
        return None

    def copy(self) -> PosTaxonomy:
        clone = PosTaxonomy()
        clone._nodes = dict(self._nodes)
        return clone


def default_taxonomy() -> PosTaxonomy:
    """The tripartite noun/verb/particle taxonomy that ships by default.

    Arabic labels use the definite forms that appear as RDF class names
    (a word typed as a noun gets rdf:type ...#الاسم).
    """
    return PosTaxonomy([
        PartOfSpeech("noun", "الاسم", "noun"),
        PartOfSpeech("verb", "الفعل", "verb"),
        PartOfSpeech("particle", "الحرف", "particle"),
    ])
