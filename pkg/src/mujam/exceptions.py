"""Exception hierarchy for the mujam lexicon engine.

Every error carries a stable ``code`` (its class name) and an optional
``subject`` naming the offending lemma, edge, or file location.  The HTTP
layer serializes errors as ``{code, message, subject}``.
"""

from __future__ import annotations


class LexiconError(Exception):
    """Base class for all mujam errors."""

    def __init__(self, message: str, *, subject: str | None = None):
        super().__init__(message)
        self.message = message
        self.subject = subject

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidLemma(LexiconError):
    """The lemma text violates the lemma well-formedness rules."""


class UnknownPos(LexiconError):
    """A part-of-speech id is not present in the taxonomy."""


class PosConflict(LexiconError):
    """A word already exists with a different part of speech."""


class WordNotFound(LexiconError):
    """A lemma is not present in the word table."""


class SelfRelation(LexiconError):
    """A relation edge may not connect a word to itself."""


class EdgeNotFound(LexiconError):
    """The requested relation edge does not exist."""


class UnsupportedRelation(LexiconError):
    """The operation is undefined for this relation type."""


class InvalidTaxonomy(LexiconError):
    """The part-of-speech set does not form a tree."""


class LoadError(LexiconError):
    """Base for tabular-file loading errors; carries the source location."""

    def __init__(self, message: str, *, subject: str | None = None,
                 line: int | None = None):
        super().__init__(message, subject=subject)
        self.line = line


class MalformedRow(LoadError):
    """A tabular row has the wrong shape (column count, bad header...)."""


class UnknownRelationName(LoadError):
    """A relation keyword is not one of the seven supported names."""


class DanglingEndpoint(LoadError):
    """A relation row references a lemma absent from the word table."""


class InvalidLexicon(LexiconError):
    """The lexicon has error-severity violations and cannot be exported."""


class XmlSyntax(LexiconError):
    """The RDF/XML document is not well-formed."""

    def __init__(self, message: str, *, position: tuple[int, int] | None = None):
        subject = None if position is None else f"line {position[0]}, column {position[1]}"
        super().__init__(message, subject=subject)
        self.position = position


class MissingNamespace(LexiconError):
    """The document lacks an RDF root element in the RDF namespace."""


class EmptyLexicon(LexiconError):
    """The operation needs at least one word."""


class InvalidParameters(LexiconError):
    """An operation parameter is out of range or unusable."""


class SynsetNotFound(LexiconError):
    """No synset carries the requested id."""


class BindFailure(LexiconError):
    """The HTTP server could not bind its address."""
