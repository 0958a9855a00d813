"""Staged command-line pipeline: sample, classify, evaluate, report, review.

Each stage persists its output in the run store so a human can inspect
between stages; re-running a stage against the same inputs is
idempotent apart from review scoring, which is audited.

Exit codes: 0 success, 1 usage error, 2 data error, 3 transport error.
"""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import evaluation
from .arxiv import ArxivClient
from .classifier import PromptProtocol, classify
from .corpus import build_sample
from .errors import DataError, MscbenchError, TransportError
from .providers import HttpChatProvider, MockChatProvider, ReplayChatProvider
from .run_store import RunStore, load_fixture
from .taxonomy import load_taxonomy, default_taxonomy_path

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TRANSPORT = 3


def _taxonomy(path: str | None):
    return load_taxonomy(Path(path) if path else default_taxonomy_path())


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
def cli(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.group()
def taxonomy() -> None:
    """Inspect the MSC 2020 code list."""


@taxonomy.command("stats")
@click.option("--taxonomy", "taxonomy_path", type=click.Path(), default=None,
              help="Alternate code list (default: shipped dataset).")
def taxonomy_stats(taxonomy_path: str | None) -> None:
    """Print level counts; loading validates prefix closure."""
    tax = _taxonomy(taxonomy_path)
    top, second, third = tax.level_counts
    click.echo(f"{top} / {second} / {third}")


@cli.command("taxonomy-stats", hidden=True)
@click.option("--taxonomy", "taxonomy_path", type=click.Path(), default=None)
@click.pass_context
def taxonomy_stats_alias(ctx: click.Context, taxonomy_path: str | None) -> None:
    ctx.invoke(taxonomy_stats, taxonomy_path=taxonomy_path)


def _store(store_dir: str) -> RunStore:
    return RunStore(store_dir)


def _resolve_run(store: RunStore, run_id: str | None) -> str:
    if run_id:
        return run_id
    latest = store.latest_run_id()
    if latest is None:
        raise DataError(f"no runs in store {store.root}; run a prior stage first")
    return latest


@cli.command()
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--cutoff", default="2024-04-02T23:59:59Z", show_default=True,
              help="Newest allowed submission timestamp.")
@click.option("--exclude", multiple=True, help="Top-level class to skip (repeatable).")
@click.option("--only", default=None,
              help="Comma-separated class subset (mainly for offline fixtures).")
@click.option("--cache-dir", default=None, type=click.Path(),
              help="arXiv response cache (default: <store>/arxiv-cache).")
@click.option("--cache-only", is_flag=True, help="Never call the network.")
@click.option("--concurrency", default=4, show_default=True)
@click.option("--taxonomy", "taxonomy_path", type=click.Path(), default=None)
def sample(store_dir, cutoff, exclude, only, cache_dir, cache_only, concurrency,
           taxonomy_path) -> None:
    """Pick the most recent item per top-level class and persist the sample."""
    tax = _taxonomy(taxonomy_path)
    store = _store(store_dir)
    store.acquire_lock()
    try:
        client = ArxivClient(
            cache_dir=cache_dir or (store.root / "arxiv-cache"),
            cache_only=cache_only,
        )
        sample_set = build_sample(
            tax,
            cutoff,
            exclusions=list(exclude),
            client=client,
            only=[c.strip() for c in only.split(",")] if only else None,
            concurrency=concurrency,
        )
        run_id = store.create_run(
            {
                "stage": "sample",
                "cutoff": cutoff,
                "excluded_classes": sorted(exclude),
                "only": only,
            }
        )
        for item in sample_set.items:
            store.append_event(run_id, "item_sampled", {"item": item.to_dict()})
        store.append_event(
            run_id,
            "sample_meta",
            {
                "cutoff": cutoff,
                "excluded_classes": sorted(exclude),
                "unserved_classes": sample_set.unserved_classes,
            },
        )
        store.write_sample_document(run_id, sample_set)
        served = sum(len(i.sampled_under) for i in sample_set.items)
        click.echo(
            f"run {run_id}: {len(sample_set.items)} items covering {served} classes"
            + (f", unserved: {sorted(sample_set.unserved_classes)}"
               if sample_set.unserved_classes else "")
        )
    finally:
        store.release_lock()


def _provider(kind: str, model: str, endpoint: str | None, credential_env: str,
              script: str | None):
    if kind == "http":
        if not endpoint:
            raise click.UsageError("--endpoint is required with --provider http")
        return HttpChatProvider(endpoint, model, credential_env=credential_env)
    if kind == "mock":
        if not script:
            raise click.UsageError("--script is required with --provider mock")
        return MockChatProvider.from_file(script)
    if kind == "replay":
        return ReplayChatProvider(model)
    raise click.UsageError(f"unknown provider kind: {kind}")


@cli.command("classify")
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--run", "run_id", default=None, help="Run to classify (default: latest).")
@click.option("--provider", "provider_kind", default="replay", show_default=True,
              type=click.Choice(["http", "replay", "mock"]))
@click.option("--model", default="chat-default", show_default=True)
@click.option("--endpoint", default=None, help="Chat-completion URL (http provider).")
@click.option("--credential-env", default="MSCBENCH_API_KEY", show_default=True,
              help="Environment variable holding the API credential.")
@click.option("--script", default=None, type=click.Path(), help="Mock reply script.")
@click.option("--broaden", is_flag=True, help="Also send the broaden follow-up.")
@click.option("--concurrency", default=4, show_default=True,
              help="Concurrent conversations (1 if the provider is single-use).")
@click.option("--taxonomy", "taxonomy_path", type=click.Path(), default=None)
def classify_cmd(store_dir, run_id, provider_kind, model, endpoint, credential_env,
                 script, broaden, concurrency, taxonomy_path) -> None:
    """Classify every sampled item in a run and persist the outcomes."""
    tax = _taxonomy(taxonomy_path)
    store = _store(store_dir)
    store.acquire_lock()
    try:
        run_id = _resolve_run(store, run_id)
        record = store.load_run(run_id)
        if not record.items:
            raise DataError(f"run {run_id} has no sampled items")
        provider = _provider(provider_kind, model, endpoint, credential_env, script)
        protocol = PromptProtocol()
        bound = max(1, concurrency) if provider.concurrent_safe else 1

        def classify_one(arxiv_id: str):
            outcome = classify(
                record.items[arxiv_id], provider, protocol,
                taxonomy=tax, store=store, broaden=broaden,
            )
            return arxiv_id, outcome

        ordered = sorted(record.items)
        with ThreadPoolExecutor(max_workers=bound) as pool:
            results = dict(pool.map(classify_one, ordered))
        for arxiv_id in ordered:
            store.append_event(
                run_id,
                "outcome_recorded",
                {"arxiv_id": arxiv_id, "outcome": results[arxiv_id].to_dict()},
            )
        click.echo(f"run {run_id}: classified {len(record.items)} items "
                   f"(provider {provider_kind}, model {provider.model_id})")
    finally:
        store.release_lock()


@cli.command()
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--run", "run_id", default=None, help="Run to evaluate (default: latest).")
@click.option("--fixture", "fixture_path", default=None, type=click.Path(),
              help="Evaluate the recorded study tables instead of a classified run.")
@click.option("--apply-reference-scores", is_flag=True,
              help="Attach the fixture's printed quality scores.")
@click.option("--taxonomy", "taxonomy_path", type=click.Path(), default=None)
def evaluate(store_dir, run_id, fixture_path, apply_reference_scores,
             taxonomy_path) -> None:
    """Compare outcomes against ground truth and persist the rows."""
    tax = _taxonomy(taxonomy_path)
    store = _store(store_dir)
    store.acquire_lock()
    try:
        if fixture_path is not None:
            fixture = load_fixture(fixture_path, tax)
            run_id = store.create_run(
                {"stage": "evaluate", "fixture": str(fixture.path)}
            )
            rows = []
            for frow in fixture.rows:
                row = evaluation.compare(
                    frow.ground_truth_tops,
                    frow.outcome,
                    arxiv_id=frow.arxiv_id,
                    sampled_under=frow.section,
                    reference=frow.reference,
                )
                rows.append(row)
                store.append_event(run_id, "row_evaluated", {"row": row.to_dict()})
            store.append_event(
                run_id,
                "evaluation_meta",
                {"reported_aggregates": fixture.reported_aggregates},
            )
            if apply_reference_scores:
                for frow, row in zip(fixture.rows, rows):
                    quality = frow.reference.get("quality")
                    if row.category == evaluation.CATEGORY_DIFFERING and quality is not None:
                        evaluation.attach_score(row, quality, "reference-tables")
                        store.append_event(
                            run_id,
                            "score_attached",
                            {
                                "arxiv_id": row.arxiv_id,
                                "score": quality,
                                "reviewer": "reference-tables",
                                "notes": "",
                                "previous": None,
                            },
                        )
            report = evaluation.aggregate(rows, fixture.reported_aggregates)
        else:
            run_id = _resolve_run(store, run_id)
            record = store.load_run(run_id)
            if not record.outcomes:
                raise DataError(f"run {run_id} has no classification outcomes")
            rows = []
            for arxiv_id in sorted(record.outcomes):
                item = record.items.get(arxiv_id)
                if item is None:
                    raise DataError(f"run {run_id}: outcome for unknown item {arxiv_id}")
                row = evaluation.compare(
                    item.ground_truth_tops,
                    record.outcomes[arxiv_id],
                    arxiv_id=arxiv_id,
                    sampled_under=" ".join(item.sampled_under),
                )
                rows.append(row)
                store.append_event(run_id, "row_evaluated", {"row": row.to_dict()})
            report = evaluation.aggregate(rows)
        agg = report.aggregates
        click.echo(
            f"run {run_id}: {agg['n_matching']} matching, {agg['n_differing']} differing"
            + (f", {len(report.discrepancy_log)} discrepancies logged"
               if report.discrepancy_log else "")
        )
    finally:
        store.release_lock()


@cli.command()
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--run", "run_id", default=None, help="Run to report (default: latest).")
@click.option("--format", "fmt", default="markdown", show_default=True,
              type=click.Choice(["markdown", "csv"]))
@click.option("--out", "out_path", default=None, type=click.Path(),
              help="Write here instead of <store>/reports/.")
def report(store_dir, run_id, fmt, out_path) -> None:
    """Render a run's comparison rows as markdown or CSV."""
    store = _store(store_dir)
    store.acquire_lock()
    try:
        run_id = _resolve_run(store, run_id)
        record = store.load_run(run_id)
        if not record.rows:
            raise DataError(f"run {run_id} has no evaluated rows; run evaluate first")
        run_report = evaluation.aggregate(
            record.ordered_rows(), record.reported_aggregates or None
        )
        run_report.run_id = run_id
        run_report.created = record.created
        document = evaluation.emit_report(run_report, fmt)
        suffix = "md" if fmt == "markdown" else "csv"
        target = Path(out_path) if out_path else store.reports_dir / f"{run_id}.{suffix}"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(document, encoding="utf-8")
        store.append_event(run_id, "report_emitted", {"format": fmt, "path": str(target)})
        click.echo(str(target))
    finally:
        store.release_lock()


@cli.group()
def review() -> None:
    """Human adjudication of differing rows."""


@review.command("serve")
@click.option("--store", "store_dir", required=True, type=click.Path())
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8765, show_default=True)
@click.option("--token-auth", is_flag=True,
              help="Require the MSCBENCH_REVIEW_TOKEN bearer token.")
@click.option("--ui-dir", default=None, type=click.Path(),
              help="Static UI assets directory (default: bundled frontend build).")
def review_serve(store_dir, host, port, token_auth, ui_dir) -> None:
    """Serve the review API plus the static review UI."""
    import uvicorn

    from .server import build_app

    app = build_app(RunStore(store_dir), token_auth=token_auth, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except TransportError as exc:
        click.echo(f"transport error: {exc}", err=True)
        return EXIT_TRANSPORT
    except DataError as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    except MscbenchError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
