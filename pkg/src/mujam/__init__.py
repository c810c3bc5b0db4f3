"""mujam: an Arabic lexical ontology engine.

Words carry exact orthographic identity (diacritics included) and a part
of speech; seven semantic relations connect them, always closed under
inversion; synsets are the synonym components.  Lexicons load and save as
a TSV pair, export as RDF/XML, and are served through a CLI and HTTP API.
"""

from __future__ import annotations

from mujam.exceptions import (
    BindFailure,
    DanglingEndpoint,
    EdgeNotFound,
    EmptyLexicon,
    InvalidLemma,
    InvalidLexicon,
    InvalidParameters,
    InvalidTaxonomy,
    LexiconError,
    LoadError,
    MalformedRow,
    MissingNamespace,
    PosConflict,
    SelfRelation,
    SynsetNotFound,
    UnknownPos,
    UnknownRelationName,
    UnsupportedRelation,
    WordNotFound,
    XmlSyntax,
)
from mujam.fixture import hand_lexicon, load_fixture
from mujam.index import (
    LatencyReport,
    LookupResult,
    SearchIndex,
    WordProfile,
    measure_latency,
)
from mujam.lexicon import (
    Lexicon,
    LexiconStats,
    RelationEdge,
    Synset,
    Violation,
    ViolationKind,
)
from mujam.pos import PartOfSpeech, PosTaxonomy, default_taxonomy
from mujam.rdfxml import (
    ParseResult,
    ParseWarning,
    RdfMapping,
    emit_rdf,
    parse_rdf,
)
from mujam.relations import (
    LABELS,
    RelationType,
    canonical_link,
    inverse_of,
    relation_from_keyword,
)
from mujam.synthetic import generate_synthetic
from mujam.tabular import (
    format_lexicon,
    load_taxonomy,
    parse_lexicon,
    parse_taxonomy,
    read_tsv,
    write_tsv,
)
from mujam.text import (
    TokenReport,
    extract_unique,
    fold_diacritics,
    normalize_lemma,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "BindFailure",
    "DanglingEndpoint",
    "EdgeNotFound",
    "EmptyLexicon",
    "InvalidLemma",
    "InvalidLexicon",
    "InvalidParameters",
    "InvalidTaxonomy",
    "LABELS",
    "LatencyReport",
    "Lexicon",
    "LexiconError",
    "LexiconStats",
    "LoadError",
    "LookupResult",
    "MalformedRow",
    "MissingNamespace",
    "ParseResult",
    "ParseWarning",
    "PartOfSpeech",
    "PosConflict",
    "PosTaxonomy",
    "RdfMapping",
    "RelationEdge",
    "RelationType",
    "SearchIndex",
    "SelfRelation",
    "Synset",
    "SynsetNotFound",
    "TokenReport",
    "UnknownPos",
    "UnknownRelationName",
    "UnsupportedRelation",
    "Violation",
    "ViolationKind",
    "WordNotFound",
    "WordProfile",
    "XmlSyntax",
    "canonical_link",
    "default_taxonomy",
    "emit_rdf",
    "extract_unique",
    "fold_diacritics",
    "format_lexicon",
    "generate_synthetic",
    "hand_lexicon",
    "inverse_of",
    "load_fixture",
    "load_taxonomy",
    "measure_latency",
    "normalize_lemma",
    "parse_lexicon",
    "parse_rdf",
    "parse_taxonomy",
    "read_tsv",
    "relation_from_keyword",
    "tokenize",
    "write_tsv",
]
