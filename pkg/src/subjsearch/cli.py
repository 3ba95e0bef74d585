"""Command line interface: offline ingest, the HTTP server, and a thin
search client that talks to a running server."""

from __future__ import annotations

import json
import signal
import sys

import click

from .config import load_config
from .corpus import CorpusError


@click.group()
def main():
    """Subjective search over entity review corpora."""


@main.command()
@click.option("--entities", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--reviews", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--schema", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--aliases", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", required=True, type=click.Path(file_okay=False))
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def ingest(entities, reviews, schema, aliases, out, config_path):
    """Build an index snapshot from corpus files."""
    from .snapshot import ingest as run_ingest

    try:
        snapshot = run_ingest(entities, reviews, schema, aliases, out, load_config(config_path))
    except (CorpusError, OSError, ValueError) as exc:
        click.echo(f"ingest failed: {exc}", err=True)
        sys.exit(1)
    click.echo(f"ingested {len(snapshot.entities)} entities -> {out}")
    click.echo(f"version {snapshot.version}")


@main.command()
@click.option("--index", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--port", default=8000, type=int)
@click.option("--host", default="127.0.0.1")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def serve(index, port, host, config_path):
    """Serve a snapshot over HTTP; SIGHUP reloads it atomically."""
    import uvicorn

    from .api import create_app
    from .snapshot import SnapshotHolder, load_snapshot

    holder = SnapshotHolder(load_snapshot(index), index)
    if hasattr(signal, "SIGHUP"):
        signal.signal(signal.SIGHUP, lambda *_: holder.reload())
    app = create_app(holder, load_config(config_path))
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.argument("query")
@click.option("--url", default="http://127.0.0.1:8000", help="server base URL")
@click.option("--limit", default=None, type=int)
def search(query, url, limit):
    """Run a query against a running server and print the JSON response."""
    import httpx

    params = {"q": query}
    if limit is not None:
        params["limit"] = str(limit)
    response = httpx.get(f"{url.rstrip('/')}/api/search", params=params, timeout=30.0)
    click.echo(json.dumps(response.json(), indent=2, ensure_ascii=False))
    if response.status_code != 200:
        sys.exit(1)


if __name__ == "__main__":
    main()
