"""RDF/XML codec for the lexicon.

One rdf:Description per word carries its rdf:type (the POS class) and one
property element per outgoing edge, so both directions of every link
appear in the document, each on its own resource.  The property vocabulary
is the classic six-plus-one set: means, anti, has_parent, has_child,
part_of, has_a, and assoc for the association relation.

Resource IRIs are the namespace plus the percent-encoded lemma.  Spaces
and non-ASCII are encoded on emit (an IRI with a raw space is not legal)
and decoded on parse; the parser also accepts raw Arabic in resource
attributes, as found in older hand-built documents.

Emission is strict (a lexicon with error-severity violations is refused)
and deterministic.  Parsing is lenient: missing inverse edges are repaired
and reported as warnings, unknown properties are collected, never fatal.
"""

from __future__ import annotations

import unicodedata
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from urllib.parse import quote, unquote
from xml.sax.saxutils import escape

from mujam.exceptions import (
    InvalidLemma,
    InvalidLexicon,
    InvalidTaxonomy,
    MissingNamespace,
    PosConflict,
    XmlSyntax,
)
from mujam.lexicon import Lexicon, RelationEdge
from mujam.pos import PartOfSpeech, PosTaxonomy, default_taxonomy
from mujam.relations import RelationType, canonical_link, inverse_of
from mujam.text import normalize_lemma

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
DEFAULT_NAMESPACE = "http://www.azhary.org#"

_ATTR = {'"': "&quot;"}

DEFAULT_PROPERTIES: dict[RelationType, str] = {
    RelationType.SYNONYM: "means",
    RelationType.ANTONYM: "anti",
    RelationType.HYPERNYM: "has_parent",
    RelationType.HYPONYM: "has_child",
    RelationType.MERONYM: "part_of",
    RelationType.HOLONYM: "has_a",
    RelationType.ASSOCIATION: "assoc",
}


@dataclass(frozen=True)
class RdfMapping:
    """Namespace and relation-to-property table for the RDF dialect."""

    namespace: str = DEFAULT_NAMESPACE
    properties: dict[RelationType, str] = field(
        default_factory=lambda: dict(DEFAULT_PROPERTIES)
    )

    def property_of(self, rel: RelationType) -> str:
        return self.properties[rel]

    def relation_of(self, prop: str) -> RelationType | None:
        for rel, name in self.properties.items():
            if name == prop:
                return rel
        return None


@dataclass(frozen=True)
class ParseWarning:
    kind: str
    subject: str


@dataclass
class ParseResult:
    lexicon: Lexicon
    warnings: list[ParseWarning]


def encode_resource(namespace: str, name: str) -> str:
    """IRI for a lemma or POS class: namespace + fully percent-encoded name."""
    return namespace + quote(name, safe="")


def decode_resource(namespace: str, iri: str) -> str | None:
    """Inverse of encode_resource; None when the IRI is in another namespace."""
    if not iri.startswith(namespace):
        return None
    return unicodedata.normalize("NFC", unquote(iri[len(namespace):]))


def emit_rdf(lexicon: Lexicon, mapping: RdfMapping | None = None) -> str:
    """Serialize the lexicon as an RDF/XML document.

    Descriptions appear in lemma code-point order, each with its rdf:type
    first and its property elements sorted by (property, target); equal
    lexicons produce byte-identical documents.  Raises InvalidLexicon if
    validate() reports any error-severity violation.
    """
    mapping = mapping or RdfMapping()
    errors = [v for v in lexicon.validate() if v.severity == "error"]
    if errors:
        raise InvalidLexicon(
            f"lexicon has {len(errors)} error(s); first: {errors[0].message}",
            subject=errors[0].subject,
        )

    ns = mapping.namespace
    lines = [
        '<?xml version="1.0" encoding="utf-8"?>',
        f'<rdf:RDF xmlns:rdf="{escape(RDF_NS, _ATTR)}" xmlns:a="{escape(ns, _ATTR)}">',
    ]
    for lemma in sorted(lexicon.words):
        pos = lexicon.taxonomy.get(lexicon.words[lemma])
        lines.append(f'  <rdf:Description rdf:about="{encode_resource(ns, lemma)}">')
        lines.append(f'    <rdf:type rdf:resource="{encode_resource(ns, pos.label_ar)}"/>')
        props = sorted(
            (mapping.property_of(rel), target)
            for rel in RelationType
            for target in lexicon.neighbors(lemma, rel)
        )
        lines.extend(
            f'    <a:{prop} rdf:resource="{encode_resource(ns, target)}"/>'
            for prop, target in props
        )
        lines.append("  </rdf:Description>")
    lines.append("</rdf:RDF>")
    return "\n".join(lines) + "\n"


def parse_rdf(document: str, mapping: RdfMapping | None = None,
              taxonomy: PosTaxonomy | None = None) -> ParseResult:
    """Read an RDF/XML document back into a Lexicon.

    Words come from descriptions, POS from rdf:type (unknown classes are
    auto-registered in the taxonomy), edges from property elements.  A
    link whose reverse triple is absent from the document is repaired and
    reported as a MissingInverse warning; relation targets that have no
    description of their own become words under the taxonomy's first root.
    """
    mapping = mapping or RdfMapping()
    taxonomy = (taxonomy if taxonomy is not None else default_taxonomy()).copy()
    warnings: list[ParseWarning] = []

    try:
        root = ET.fromstring(document)
    except ET.ParseError as err:
        raise XmlSyntax(f"not well-formed XML: {err}", position=err.position) from None
    if root.tag != f"{{{RDF_NS}}}RDF":
        raise MissingNamespace(
            f"document root is {root.tag!r}, not an rdf:RDF element in the RDF namespace"
        )

    described: dict[str, str | None] = {}
    edge_occurrences: list[RelationEdge] = []
    for desc in root:
        if desc.tag != f"{{{RDF_NS}}}Description":
            warnings.append(ParseWarning("UnknownElement", desc.tag))
            continue
        about = desc.get(f"{{{RDF_NS}}}about")
        if about is None:
            warnings.append(ParseWarning("MissingAbout", ET.tostring(desc, encoding="unicode")[:80]))
            continue
        raw = decode_resource(mapping.namespace, about)
        if raw is None:
            warnings.append(ParseWarning("ForeignResource", about))
            continue
        try:
            lemma = normalize_lemma(raw)
        except InvalidLemma:
            warnings.append(ParseWarning("InvalidLemma", raw))
            continue
        if lemma not in described:
            described[lemma] = None

        for prop in desc:
            resource = prop.get(f"{{{RDF_NS}}}resource")
            if resource is None:
                warnings.append(ParseWarning("MissingResource", prop.tag))
                continue
            if prop.tag == f"{{{RDF_NS}}}type":
                label = decode_resource(mapping.namespace, resource)
                if label is None:
                    warnings.append(ParseWarning("ForeignResource", resource))
                elif described[lemma] is None:
                    described[lemma] = label
                elif described[lemma] != label:
                    warnings.append(ParseWarning("PosConflict", lemma))
                continue
            if not prop.tag.startswith(f"{{{mapping.namespace}}}"):
                warnings.append(ParseWarning("UnknownProperty", prop.tag))
                continue
            rel = mapping.relation_of(prop.tag.split("}", 1)[1])
            if rel is None:
                warnings.append(ParseWarning("UnknownProperty", prop.tag))
                continue
            target_raw = decode_resource(mapping.namespace, resource)
            if target_raw is None:
                warnings.append(ParseWarning("ForeignResource", resource))
                continue
            try:
                target = normalize_lemma(target_raw)
            except InvalidLemma:
                warnings.append(ParseWarning("InvalidLemma", target_raw))
                continue
            if target == lemma:
                warnings.append(ParseWarning("SelfLoop", lemma))
                continue
            edge_occurrences.append(RelationEdge(lemma, rel, target))

    lexicon = Lexicon(taxonomy)
    fallback_pos = _first_root(taxonomy)
    for lemma, label in described.items():
        try:
            lexicon.add_word(lemma, _resolve_pos(taxonomy, label, fallback_pos))
        except PosConflict:
            warnings.append(ParseWarning("PosConflict", lemma))
    for edge in edge_occurrences:
        for endpoint in (edge.source, edge.target):
            if not lexicon.has_word(endpoint):
                lexicon.add_word(endpoint, fallback_pos)

    seen_directed = {(e.source, e.rel, e.target) for e in edge_occurrences}
    recorded: dict[tuple, RelationEdge] = {}
    for edge in edge_occurrences:
        recorded.setdefault(canonical_link(edge.source, edge.rel, edge.target), edge)
    for edge in recorded.values():
        lexicon.add_relation(edge.source, edge.rel, edge.target)
        mate = (edge.target, inverse_of(edge.rel), edge.source)
        if mate not in seen_directed:
            warnings.append(ParseWarning("MissingInverse", str(edge)))

    return ParseResult(lexicon, warnings)


def _resolve_pos(taxonomy: PosTaxonomy, label: str | None, fallback: str) -> str:
    """Map an rdf:type class label to a POS id, registering new classes."""
    if label is None:
        return fallback
    node = taxonomy.by_arabic_label(label)
    if node is not None:
        return node.id
    if label in taxonomy:
        return label
    taxonomy.add(PartOfSpeech(label, label, label))
    return label


def _first_root(taxonomy: PosTaxonomy) -> str:
    roots = taxonomy.roots()
    if not roots:
        raise InvalidTaxonomy("taxonomy has no root POS to assign to bare words")
    return roots[0].id
