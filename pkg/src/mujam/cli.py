"""Command line interface.

Exit code contract: 0 success, 1 validation or query failure, 2 I/O and
argument problems.  Click raises its own usage errors as 2, which keeps
the three-way split intact.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from mujam.exceptions import BindFailure, InvalidLexicon, LexiconError, LoadError
from mujam.index import SearchIndex, measure_latency
from mujam.lexicon import Lexicon
from mujam.pos import default_taxonomy
from mujam.rdfxml import RdfMapping, emit_rdf
from mujam.relations import LABELS, RelationType, relation_from_keyword
from mujam.synthetic import generate_synthetic
from mujam.tabular import (
    WORDS_HEADER,
    format_token_report,
    load_taxonomy,
    read_tsv,
)
from mujam.text import extract_unique, tokenize


@click.group()
@click.version_option(package_name="mujam")
def main() -> None:
    """Arabic lexical ontology toolkit: ingest, validate, build, query, serve."""


# ----------------------------------------------------------------------
# Loading helpers
# ----------------------------------------------------------------------


def _load_dir(data_dir: Path) -> Lexicon:
    """Read words.tsv / relations.tsv (and pos.tsv if present) from a directory."""
    words = data_dir / "words.tsv"
    relations = data_dir / "relations.tsv"
    pos = data_dir / "pos.tsv"
    taxonomy = load_taxonomy(pos) if pos.exists() else None
    return read_tsv(words, relations, taxonomy)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_lexicon(loader) -> Lexicon:
    """Run a loader; file and format problems exit 2."""
    try:
        return loader()
    except LoadError as err:
        _fail(err.message, 2)
    except OSError as err:
        _fail(str(err), 2)
    raise AssertionError("unreachable")


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------


@main.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("-o", "--output", required=True, help="Seed word list (words.tsv format).",
              type=click.Path(dir_okay=False, path_type=Path))
@click.option("--pos", default="noun", show_default=True,
              help="POS id assigned to every extracted word.")
@click.option("--report", type=click.Path(dir_okay=False, path_type=Path),
              help="Also write the token frequency table (lemma, frequency) here.")
def ingest(corpus: Path, output: Path, pos: str, report: Path | None) -> None:
    """Tokenize an Arabic corpus into a deduplicated word list."""
    if pos not in default_taxonomy():
        _fail(f"unknown POS id: {pos!r}", 2)
    try:
        text = corpus.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        _fail(str(err), 2)
    token_report = extract_unique(tokenize(text))
    lines = [WORDS_HEADER]
    lines.extend(f"{lemma}\t{pos}" for lemma in sorted(token_report.unique))
    try:
        output.write_text("\n".join(lines) + "\n", encoding="utf-8")
        if report is not None:
            report.write_text(format_token_report(token_report.unique), encoding="utf-8")
    except OSError as err:
        _fail(str(err), 2)
    click.echo(
        f"{token_report.total_count} tokens, {len(token_report.unique)} unique -> {output}"
    )


@main.command()
@click.argument("words", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("relations", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--taxonomy", "taxonomy_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="POS taxonomy TSV; defaults to the built-in noun/verb/particle set.")
def validate(words: Path, relations: Path, taxonomy_file: Path | None) -> None:
    """Check a TSV pair; exit 1 when it fails validation."""
    try:
        taxonomy = load_taxonomy(taxonomy_file) if taxonomy_file else None
        lexicon = read_tsv(words, relations, taxonomy)
    except LoadError as err:
        click.echo(f"invalid: {err.message}")
        sys.exit(1)
    except OSError as err:
        _fail(str(err), 2)
        return
    violations = lexicon.validate()
    for violation in violations:
        click.echo(f"{violation.severity}: {violation.kind.value}: {violation.message}")
    errors = sum(1 for v in violations if v.severity == "error")
    stats = lexicon.stats()
    click.echo(
        f"{'FAIL' if errors else 'ok'}: {stats.word_count} words, "
        f"{stats.synset_count} synsets, {errors} errors, "
        f"{len(violations) - errors} warnings"
    )
    sys.exit(1 if errors else 0)


@main.command()
@click.argument("words", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("relations", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("-o", "--output", required=True,
              type=click.Path(dir_okay=False, path_type=Path))
@click.option("--namespace", default=None, help="Ontology namespace IRI.")
@click.option("--taxonomy", "taxonomy_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def build(words: Path, relations: Path, output: Path,
          namespace: str | None, taxonomy_file: Path | None) -> None:
    """Compile a TSV pair into an RDF/XML ontology document."""
    lexicon = _read_lexicon(lambda: read_tsv(
        words, relations, load_taxonomy(taxonomy_file) if taxonomy_file else None
    ))
    mapping = RdfMapping(namespace=namespace) if namespace else RdfMapping()
    try:
        document = emit_rdf(lexicon, mapping)
    except InvalidLexicon as err:
        _fail(err.message, 1)
        return
    try:
        output.write_text(document, encoding="utf-8")
    except OSError as err:
        _fail(str(err), 2)
    stats = lexicon.stats()
    click.echo(
        f"wrote {output}: {stats.word_count} words, "
        f"{sum(stats.relation_counts.values())} links"
    )


@main.command()
@click.argument("lemma")
@click.option("--relation", "relation_name", default=None,
              help="Show one relation only (synonym, antonym, hypernym, ...).")
@click.option("--fold", is_flag=True, help="Fall back to diacritic-insensitive match.")
@click.option("--depth", type=click.IntRange(min=1), default=None,
              help="Traverse --relation transitively to this depth.")
@click.option("-d", "--data", type=click.Path(exists=True, file_okay=False, path_type=Path),
              default=".", show_default=True, help="Directory with words.tsv and relations.tsv.")
def query(lemma: str, relation_name: str | None, fold: bool,
          depth: int | None, data: Path) -> None:
    """Look a word up and print its relation fan-out."""
    if depth is not None and relation_name is None:
        raise click.UsageError("--depth requires --relation")
    lexicon = _read_lexicon(lambda: _load_dir(data))
    index = SearchIndex(lexicon)
    try:
        wanted = relation_from_keyword(relation_name) if relation_name else None
        result = index.lookup(lemma, fold=fold)
        profile = result.profile
        if result.candidates:
            click.echo(
                f"resolved {lemma} -> {profile.lemma} "
                f"(candidates: {_join(result.candidates)})"
            )
        if depth is not None:
            for word, d in lexicon.transitive(profile.lemma, wanted, depth):
                click.echo(f"{d}\t{word}")
            return
        pos = lexicon.taxonomy.get(profile.pos)
        click.echo(f"{profile.lemma}  [{pos.id} / {pos.label_ar}]")
        click.echo(f"synset {profile.synset_id}: "
                   f"{_join(index.synset_members(profile.synset_id) or ())}")
        for rel in RelationType:
            if wanted is not None and rel is not wanted:
                continue
            members = profile.neighbor_set(rel)
            if wanted is None and not members:
                continue
            label_ar, label_en = LABELS[rel]
            click.echo(f"{rel.keyword:12s} {label_ar} ({label_en}): {_join(members)}")
    except LexiconError as err:
        _fail(err.message, 1)


@main.command()
@click.option("-d", "--data", type=click.Path(exists=True, file_okay=False, path_type=Path),
              default=".", show_default=True)
def stats(data: Path) -> None:
    """Print word, synset, and per-relation link counts."""
    lexicon = _read_lexicon(lambda: _load_dir(data))
    summary = lexicon.stats()
    click.echo(f"{'words':12s} {summary.word_count}")
    click.echo(f"{'synsets':12s} {summary.synset_count}")
    for rel in RelationType:
        click.echo(f"{rel.keyword:12s} {summary.relation_counts.get(rel, 0)}")


@main.command()
@click.option("--words", "word_count", type=click.IntRange(min=1), default=26195,
              show_default=True)
@click.option("--synsets", "synset_count", type=click.IntRange(min=1), default=13328,
              show_default=True)
@click.option("--queries", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--seed", type=int, default=2024, show_default=True)
def bench(word_count: int, synset_count: int, queries: int, seed: int) -> None:
    """Generate a synthetic lexicon and time seeded lookups against it."""
    try:
        lexicon = generate_synthetic(word_count, synset_count, seed)
        summary = lexicon.stats()
        click.echo(
            f"generated {summary.word_count} words in {summary.synset_count} "
            f"synsets (seed {seed})"
        )
        report = measure_latency(lexicon, queries, seed)
    except LexiconError as err:
        _fail(err.message, 1)
        return
    click.echo(
        f"queries: {report.query_count}  mean: {report.mean_ms:.4f} ms  "
        f"p95: {report.p95_ms:.4f} ms  max: {report.max_ms:.4f} ms"
    )


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data", required=True,
              type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Directory with words.tsv and relations.tsv; saves write back here.")
@click.option("--ui", "ui_dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              default=None, help="Static web UI directory to serve at /.")
@click.option("--autosave/--no-autosave", default=True, show_default=True,
              help="Rewrite the TSV pair after mutations.")
def serve(port: int, host: str, data: Path, ui_dir: Path | None, autosave: bool) -> None:
    """Serve the HTTP API (and optionally the web UI) over a data directory."""
    from mujam.service import LexiconStore, serve as run_service

    lexicon = _read_lexicon(lambda: _load_dir(data))
    violations = [v for v in lexicon.validate() if v.severity == "error"]
    if violations:
        for violation in violations:
            click.echo(f"error: {violation.kind.value}: {violation.message}", err=True)
        sys.exit(1)
    store = LexiconStore(lexicon, data_dir=data,
                         autosave_interval=0.0 if autosave else None)
    click.echo(f"serving {lexicon.word_count} words on http://{host}:{port}")
    try:
        run_service(store, host=host, port=port, ui_dir=ui_dir)
    except BindFailure as err:
        _fail(err.message, 2)


def _join(lemmas) -> str:
    return "، ".join(lemmas) if lemmas else "-"


if __name__ == "__main__":
    main()
