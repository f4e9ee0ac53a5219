"""Operator CLI: serve the API, submit/poll emails, run batch simulations
and validate event stores.

Machine-readable output is JSON on stdout; human logs go to stderr. Exit
codes: 0 success, 1 domain error, 2 usage error. Every flag can also be set
through a CROWDTONE_* environment variable.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from .errors import CrowdToneError
from .events import EventStore, canonical_json, check_dense
from .orchestrator import Orchestrator, replay_store

log = logging.getLogger("crowdtone")

DEFAULT_API = "http://127.0.0.1:8080"


def _emit(doc) -> None:
    click.echo(canonical_json(doc))


def _fail(err: CrowdToneError) -> None:
    _emit(err.to_dict())
    sys.exit(1)


def _config_from_flags(iterations, context_mode_required, deadline) -> dict:
    config: dict = {}
    if iterations is not None:
        config["iterations"] = iterations
    if context_mode_required is not None:
        config["context_mode_required"] = context_mode_required
    if deadline is not None:
        config["task_deadline_secs"] = deadline
    return config


@click.group()
@click.option("--verbose", is_flag=True, help="debug logging on stderr")
def main(verbose: bool):
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        force=True,  # rebind the stream per invocation (keeps stderr current)
    )
    if not verbose:
        logging.getLogger("httpx").setLevel(logging.WARNING)


@main.command()
@click.option("--addr", default="127.0.0.1:8080", show_default=True, help="listen address")
@click.option("--store", type=click.Path(), default=None, help="event store directory")
@click.option("--token-file", type=click.Path(exists=True), default=None,
              help="bearer token file; requests must present its contents")
@click.option("--cors-origin", multiple=True, help="allowed CORS origin (repeatable)")
def serve(addr: str, store: str | None, token_file: str | None, cors_origin: tuple[str, ...]):
    """Run the REST API service."""
    import uvicorn

    from .api import create_app, load_token

    host, _, port = addr.partition(":")
    orch = Orchestrator(store_dir=store)
    app = create_app(orch, token=load_token(token_file), cors_origins=list(cors_origin))
    log.info("serving on %s (store=%s)", addr, store or "in-memory")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8080), log_level="info")


@main.command()
@click.option("--file", "email_file", type=click.Path(exists=True), required=True,
              help="EmailSubmission JSON file")
@click.option("--api", default=DEFAULT_API, show_default=True, help="API base URL")
@click.option("--token", default=None, help="bearer token")
@click.option("--iterations", type=click.Choice(["2", "3"]), default=None)
@click.option("--context-mode-required",
              type=click.Choice(["any", "minimal_only", "maximum_only"]), default=None)
@click.option("--deadline", type=float, default=None, help="task deadline in seconds")
def submit(email_file, api, token, iterations, context_mode_required, deadline):
    """Submit an email JSON file; prints {"task_id": ...}."""
    from .client import ApiClient, ApiError

    email = json.loads(Path(email_file).read_text(encoding="utf-8"))
    config = _config_from_flags(
        int(iterations) if iterations else None, context_mode_required, deadline
    )
    try:
        with ApiClient(api, token=token) as client:
            task_id = client.submit(email, config or None)
        _emit({"task_id": task_id})
    except ApiError as exc:
        _fail(exc)


@main.command()
@click.argument("task_id")
@click.option("--api", default=DEFAULT_API, show_default=True)
@click.option("--token", default=None)
def status(task_id, api, token):
    """Print the pipeline status for a task id."""
    from .client import ApiClient, ApiError

    try:
        with ApiClient(api, token=token) as client:
            _emit(client.status(task_id))
    except ApiError as exc:
        _fail(exc)


@main.command()
@click.argument("task_id")
@click.option("--api", default=DEFAULT_API, show_default=True)
@click.option("--token", default=None)
def result(task_id, api, token):
    """Print the finished result; exits 1 with code=pending while running."""
    from .client import ApiClient, ApiError

    try:
        with ApiClient(api, token=token) as client:
            doc = client.result(task_id)
            if doc is None:
                _emit({"code": "pending", "status": client.status(task_id)})
                sys.exit(1)
            _emit(doc)
    except ApiError as exc:
        _fail(exc)


@main.command()
@click.option("--emails", "emails_dir", type=click.Path(exists=True, file_okay=False),
              required=True, help="directory of EmailSubmission JSON files")
@click.option("--bots", "bots_file", type=click.Path(exists=True), required=True,
              help="bot population JSON file")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--iterations", type=click.Choice(["2", "3"]), default="2", show_default=True)
@click.option("--context-mode-required",
              type=click.Choice(["any", "minimal_only", "maximum_only"]), default="any")
@click.option("--out", type=click.Path(), default=None, help="report JSON path")
@click.option("--figures/--no-figures", default=True, show_default=True,
              help="render CSV + PNG charts next to --out")
@click.option("--store", type=click.Path(), default=None, help="persist events to a store dir")
@click.option("--via-http", is_flag=True, help="drive the run through a real HTTP server")
def simulate(emails_dir, bots_file, seed, iterations, context_mode_required,
             out, figures, store, via_http):
    """Run a deterministic batch simulation and write the report."""
    from .crowd import load_bots, run_simulation

    emails = []
    for path in sorted(Path(emails_dir).glob("*.json")):
        emails.append(json.loads(path.read_text(encoding="utf-8")))
    bots = load_bots(bots_file)
    config = {
        "iterations": int(iterations),
        "context_mode_required": context_mode_required,
    }
    try:
        if via_http:
            from .api import create_app
            from .client import ApiClient, ServerHandle, run_simulation_http

            handle = ServerHandle(create_app(Orchestrator(store_dir=store)))
            base_url = handle.start()
            log.info("contract run against %s", base_url)
            try:
                with ApiClient(base_url, validate=True) as client:
                    report = run_simulation_http(client, emails, bots, config, seed)
                    log.info("validated %d response bodies", client.validated)
            finally:
                handle.stop()
        else:
            orch = Orchestrator(store_dir=store) if store else None
            report = run_simulation(emails, bots, config, seed, orchestrator=orch)
    except CrowdToneError as exc:
        _fail(exc)
        return
    if out:
        from .report import write_report

        written = write_report(report, out, figures=figures)
        log.info("report written: %s", ", ".join(str(p) for p in written))
    _emit(report.to_dict())


@main.command()
@click.option("--store", type=click.Path(exists=True, file_okay=False), required=True)
def replay(store):
    """Validate a store's event log and compare with its snapshot."""
    try:
        orch = replay_store(store)
        events = EventStore(store).read_events()
        check_dense(events)
        snapshot = EventStore(store).read_snapshot()
        snapshot_match = None
        if snapshot is not None:
            live = Orchestrator(store_dir=store)
            snapshot_match = live.canonical_state() == orch.canonical_state()
        statuses = orch.list_tasks()
        _emit(
            {
                "events": len(events),
                "tasks": len(statuses),
                "complete": sum(1 for s in statuses if s["state"] == "complete"),
                "snapshot_match": snapshot_match,
            }
        )
    except CrowdToneError as exc:
        _fail(exc)


def entrypoint():
    main(auto_envvar_prefix="CROWDTONE")


if __name__ == "__main__":
    entrypoint()
