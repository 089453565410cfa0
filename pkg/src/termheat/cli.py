"""Command-line entry points: index building, recommendations, heat maps,
and the HTTP server."""

from __future__ import annotations

import json
import sys

import click

from .coindex import build_index, load_snapshot, save_snapshot
from .corpus import parse_corpus
from .heatmap import build_heatmap, heatmap_to_csv, heatmap_to_json
from .recommender import first_order_terms, recommendation_to_dict


def _parse_scope(scope: str | None) -> list[str]:
    if not scope:
        return []
    return [t.strip() for t in scope.split(",") if t.strip()]


def _load(index_path: str):
    try:
        return load_snapshot(index_path)
    except FileNotFoundError:
        raise click.ClickException(f"cannot read index: {index_path}")
    except ValueError as exc:
        raise click.ClickException(str(exc))


@click.group()
def main() -> None:
    """Co-word heat map search exploration engine."""


@main.command("index")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
def index_cmd(corpus_path: str, out_path: str) -> None:
    """Build an index snapshot from a JSONL corpus."""
    try:
        with open(corpus_path, "r", encoding="utf-8") as fh:
            result = parse_corpus(fh)
    except OSError as exc:
        click.echo(f"cannot read corpus: {exc}", err=True)
        sys.exit(2)
    index = build_index(result.document_set)
    save_snapshot(index, out_path)
    n_docs = len(result.document_set)
    n_terms = len(result.document_set.vocabulary)
    n_rejected = len(result.rejections)
    click.echo(f"{n_docs} documents, {n_terms} terms, {n_rejected} rejected")
    if n_docs == 0 and n_rejected > 0:
        click.echo("warning: all lines rejected", err=True)
    for rej in result.rejections:
        click.echo(f"rejected line {rej.line}: {rej.reason}", err=True)


@main.command("recommend")
@click.option("--index", "index_path", required=True, type=click.Path())
@click.option("--query", required=True)
@click.option("--k", default=10, type=click.IntRange(min=1), show_default=True)
@click.option("--scope", default=None)
@click.option("--include-self", is_flag=True, default=False)
def recommend_cmd(index_path: str, query: str, k: int, scope: str | None, include_self: bool) -> None:
    """Print first-order term recommendations as JSON."""
    index = _load(index_path)
    scope_terms = _parse_scope(scope)
    try:
        rec = first_order_terms(index, query, k=k, scope=scope_terms, include_self=include_self)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    payload = recommendation_to_dict(rec, k=k, scope=scope_terms)
    click.echo(json.dumps(payload, ensure_ascii=False, separators=(",", ":")))


@main.command("heatmap")
@click.option("--index", "index_path", required=True, type=click.Path())
@click.option("--query", required=True)
@click.option("--k", default=10, type=click.IntRange(min=1), show_default=True)
@click.option("--m", default=3, type=click.IntRange(min=1), show_default=True)
@click.option("--scope", default=None)
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "csv"]))
def heatmap_cmd(index_path: str, query: str, k: int, m: int, scope: str | None, fmt: str) -> None:
    """Print the heat map for a query as JSON or CSV."""
    index = _load(index_path)
    try:
        hm = build_heatmap(index, query, k=k, m=m, scope=_parse_scope(scope))
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if fmt == "json":
        click.echo(heatmap_to_json(hm))
    else:
        click.echo(heatmap_to_csv(hm), nl=False)


@main.command("serve")
@click.option("--index", "index_path", required=True, type=click.Path())
@click.option("--listen", default="127.0.0.1:8000", show_default=True)
@click.option("--assets", "assets_dir", default=None, type=click.Path())
@click.option("--k", default=10, type=click.IntRange(min=1), show_default=True)
@click.option("--m", default=3, type=click.IntRange(min=1), show_default=True)
@click.option("--page-size", default=20, type=click.IntRange(min=1), show_default=True)
def serve_cmd(index_path: str, listen: str, assets_dir: str | None, k: int, m: int, page_size: int) -> None:
    """Serve the HTTP API (and optionally the web UI assets)."""
    import uvicorn

    from .server import ServiceConfig, create_app

    index = _load(index_path)
    config = ServiceConfig(default_k=k, default_m=m, page_size=page_size, assets_dir=assets_dir)
    app = create_app(index, config)
    host, _, port = listen.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()
