"""HTTP service over a lexicon store with snapshot isolation.

Reads never lock: every request resolves against one immutable Snapshot
(a lexicon plus its prebuilt index) captured at entry.  Mutations are
serialized behind a single lock; each one edits a private copy, builds a
fresh index, then swaps the snapshot reference in one assignment, so an
in-flight read keeps the state it started with.

The TSV pair is the system of record.  When the store has a data
directory, mutations rewrite it (subject to the autosave interval) and
POST /api/save forces a rewrite; the RDF document is an export format.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from mujam.exceptions import (
    BindFailure,
    InvalidParameters,
    LexiconError,
    SynsetNotFound,
)
from mujam.index import LookupResult, SearchIndex, WordProfile
from mujam.lexicon import Lexicon
from mujam.rdfxml import RdfMapping, emit_rdf
from mujam.relations import LABELS, SYMMETRIC, TRANSITIVE, RelationType, inverse_of, relation_from_keyword
from mujam.tabular import write_tsv

# Everything not listed is an invalid-input problem.
_HTTP_STATUS = {
    "WordNotFound": 404,
    "EdgeNotFound": 404,
    "SynsetNotFound": 404,
    "PosConflict": 409,
}


@dataclass(frozen=True)
class Snapshot:
    """One immutable service state: a lexicon and its index, in lockstep."""

    lexicon: Lexicon
    index: SearchIndex


class LexiconStore:
    """Holder of the current snapshot; the only writer path in the service."""

    def __init__(self, lexicon: Lexicon, data_dir: str | Path | None = None,
                 autosave_interval: float | None = 0.0):
        self._lock = threading.Lock()
        self._snapshot = Snapshot(lexicon.copy(), SearchIndex(lexicon))
        self.data_dir = Path(data_dir) if data_dir is not None else None
        #: Seconds between mutation-triggered saves; None disables autosave,
        #: 0 saves on every mutation.
        self.autosave_interval = autosave_interval
        self._last_save = 0.0

    def snapshot(self) -> Snapshot:
        return self._snapshot

    def mutate(self, edit) -> Snapshot:
        """Apply edit(lexicon) to a copy and swap it in; returns the new state.

        The edit callback sees a private Lexicon and may raise; nothing is
        published until it returns and the new index is built.
        """
        with self._lock:
            working = self._snapshot.lexicon.copy()
            edit(working)
            fresh = Snapshot(working, SearchIndex(working))
            self._snapshot = fresh
            if (
                self.data_dir is not None
                and self.autosave_interval is not None
                and time.monotonic() - self._last_save >= self.autosave_interval
            ):
                self._write(fresh.lexicon)
            return fresh

    def save(self) -> tuple[Path, Path]:
        """Rewrite the TSV pair now.  Raises InvalidParameters with no data dir."""
        if self.data_dir is None:
            raise InvalidParameters("store has no data directory to save into")
        with self._lock:
            return self._write(self._snapshot.lexicon)

    def _write(self, lexicon: Lexicon) -> tuple[Path, Path]:
        words = self.data_dir / "words.tsv"
        relations = self.data_dir / "relations.tsv"
        write_tsv(lexicon, words, relations)
        self._last_save = time.monotonic()
        return words, relations


class WordIn(BaseModel):
    lemma: str
    pos: str = "noun"


class RelationIn(BaseModel):
    source: str
    relation: str
    target: str


def profile_payload(snapshot: Snapshot, result: LookupResult) -> dict:
    """JSON shape of one resolved word, as the UI consumes it."""
    profile: WordProfile = result.profile
    pos = snapshot.lexicon.taxonomy.get(profile.pos)
    return {
        "lemma": profile.lemma,
        "pos": profile.pos,
        "pos_label_ar": pos.label_ar,
        "pos_label_en": pos.label_en,
        "synset_id": profile.synset_id,
        "synset_members": list(snapshot.index.synset_members(profile.synset_id) or ()),
        "synonyms": list(profile.synonyms),
        "antonyms": list(profile.antonyms),
        "hypernyms": list(profile.hypernyms),
        "hyponyms": list(profile.hyponyms),
        "wholes": list(profile.wholes),
        "parts": list(profile.parts),
        "associations": list(profile.associations),
        "candidates": list(result.candidates),
    }


def relation_metadata() -> list[dict]:
    """Wire description of the seven relation types, for clients."""
    return [
        {
            "name": rel.keyword,
            "inverse": inverse_of(rel).keyword,
            "symmetric": rel in SYMMETRIC,
            "transitive": rel in TRANSITIVE,
            "label_ar": LABELS[rel][0],
            "label_en": LABELS[rel][1],
        }
        for rel in RelationType
    ]


def create_app(store: LexiconStore, ui_dir: str | Path | None = None,
               mapping: RdfMapping | None = None) -> FastAPI:
    """Wire the HTTP API (and optionally the static UI) over a store."""
    app = FastAPI(title="mujam", docs_url="/api/docs", openapi_url="/api/openapi.json")

    @app.exception_handler(LexiconError)
    async def _lexicon_error(request: Request, err: LexiconError) -> JSONResponse:
        return JSONResponse(
            status_code=_HTTP_STATUS.get(err.code, 422),
            content={"code": err.code, "message": err.message, "subject": err.subject},
        )

    @app.exception_handler(RequestValidationError)
    async def _body_error(request: Request, err: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={
                "code": "InvalidParameters",
                "message": "malformed request parameters",
                "subject": "; ".join(
                    ".".join(str(part) for part in e["loc"]) for e in err.errors()
                ),
            },
        )

    # ------------------------------------------------------------------
    # Reads
    # ------------------------------------------------------------------

    @app.get("/api/words")
    def search_words(q: str = "", fold: bool = False,
                     limit: int = Query(50, ge=0, le=500),
                     offset: int = Query(0, ge=0)) -> dict:
        snapshot = store.snapshot()
        total, page = snapshot.index.search(q, fold=fold, limit=limit, offset=offset)
        return {
            "query": q,
            "fold": fold,
            "total": total,
            "items": [
                {"lemma": lemma, "pos": snapshot.lexicon.words[lemma]}
                for lemma in page
            ],
        }

    @app.get("/api/words/{lemma}")
    def get_word(lemma: str, fold: bool = False) -> dict:
        snapshot = store.snapshot()
        return profile_payload(snapshot, snapshot.index.lookup(lemma, fold=fold))

    @app.get("/api/words/{lemma}/transitive/{relation}")
    def get_transitive(lemma: str, relation: str,
                       depth: int = Query(3, ge=1, le=50)) -> dict:
        snapshot = store.snapshot()
        rel = relation_from_keyword(relation)
        reached = snapshot.lexicon.transitive(lemma, rel, depth)
        return {
            "lemma": lemma,
            "relation": rel.keyword,
            "depth": depth,
            "results": [{"lemma": word, "depth": d} for word, d in reached],
        }

    @app.get("/api/relations")
    def get_relations() -> dict:
        return {"relations": relation_metadata()}

    @app.get("/api/synsets/{synset_id}")
    def get_synset(synset_id: int) -> dict:
        snapshot = store.snapshot()
        members = snapshot.index.synset_members(synset_id)
        if members is None:
            raise SynsetNotFound(f"no synset has id {synset_id}", subject=str(synset_id))
        return {"id": synset_id, "members": list(members)}

    @app.get("/api/stats")
    def get_stats() -> dict:
        stats = store.snapshot().lexicon.stats()
        return {
            "words": stats.word_count,
            "synsets": stats.synset_count,
            "relations": {
                rel.keyword: stats.relation_counts.get(rel, 0) for rel in RelationType
            },
        }

    @app.get("/api/validate")
    def get_validate() -> dict:
        violations = store.snapshot().lexicon.validate()
        return {
            "errors": sum(1 for v in violations if v.severity == "error"),
            "warnings": sum(1 for v in violations if v.severity == "warning"),
            "violations": [
                {
                    "kind": v.kind.value,
                    "severity": v.severity,
                    "subject": v.subject,
                    "message": v.message,
                }
                for v in violations
            ],
        }

    @app.get("/api/export/rdf")
    def export_rdf() -> PlainTextResponse:
        document = emit_rdf(store.snapshot().lexicon, mapping)
        return PlainTextResponse(document, media_type="application/rdf+xml")

    # ------------------------------------------------------------------
    # Mutations
    # ------------------------------------------------------------------

    @app.post("/api/words", status_code=201)
    def post_word(body: WordIn) -> dict:
        snapshot = store.mutate(lambda lex: lex.add_word(body.lemma, body.pos))
        return profile_payload(snapshot, snapshot.index.lookup(body.lemma))

    @app.post("/api/relations", status_code=201)
    def post_relation(body: RelationIn) -> dict:
        rel = relation_from_keyword(body.relation)
        store.mutate(lambda lex: lex.add_relation(body.source, rel, body.target))
        return {
            "source": body.source,
            "relation": rel.keyword,
            "target": body.target,
            "inverse": {
                "source": body.target,
                "relation": inverse_of(rel).keyword,
                "target": body.source,
            },
        }

    @app.delete("/api/relations")
    def delete_relation(body: RelationIn) -> dict:
        rel = relation_from_keyword(body.relation)
        store.mutate(lambda lex: lex.remove_relation(body.source, rel, body.target))
        return {
            "removed": True,
            "source": body.source,
            "relation": rel.keyword,
            "target": body.target,
        }

    @app.post("/api/save")
    def post_save() -> dict:
        words, relations = store.save()
        return {"saved": True, "words": str(words), "relations": str(relations)}

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app


def serve(store: LexiconStore, host: str = "127.0.0.1", port: int = 8000,
          ui_dir: str | Path | None = None) -> None:
    """Run the service until interrupted.  Raises BindFailure on a taken port."""
    import socket

    import uvicorn

    app = create_app(store, ui_dir=ui_dir)
    # uvicorn.run() swallows bind errors and exits the process itself, so
    # bind here first; a pre-bound socket keeps the failure catchable.
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((host, port))
    except OSError as err:
        sock.close()
        raise BindFailure(f"cannot bind {host}:{port}: {err.strerror or err}",
                          subject=f"{host}:{port}") from None
    config = uvicorn.Config(app, host=host, port=port, log_level="warning")
    uvicorn.Server(config).run(sockets=[sock])
