"""HTTP client for the /v1 API, an in-thread server handle, and an
HTTP-driven twin of the in-process simulation runner.

The client can validate every response body against the published wire
schemas as it goes, which is how the API contract suite replays whole
simulations through the HTTP layer.
"""

from __future__ import annotations

import threading
import time

import httpx
import uvicorn

from . import schemas
from .crowd import BotProfile, SimulationReport, _bot_verdict, sim_worker_respond
from .errors import CrowdToneError, InsufficientWorkers
from .orchestrator import PipelineConfig, PipelineState
from .tones import EmailSubmission
from .workers import qualifies


class ApiError(CrowdToneError):
    """Server-side domain error surfaced by the HTTP client."""

    def __init__(self, status_code: int, body: dict):
        super().__init__(body.get("message", "api error"), **body.get("detail", {}))
        self.code = body.get("code", "error")
        self.http_status = status_code
        self.body = body


class ApiClient:
    """Thin typed wrapper over the /v1 routes.

    With validate=True every 2xx body (and structured error body) is checked
    against the published schema for its route; validation failures raise
    jsonschema.ValidationError. ``validated`` counts the checks performed.
    """

    def __init__(self, base_url: str, token: str | None = None, validate: bool = False):
        headers = {"Authorization": f"Bearer {token}"} if token else {}
        self._http = httpx.Client(base_url=base_url, headers=headers, timeout=30.0)
        self.validate = validate
        self.validated = 0

    def close(self) -> None:
        self._http.close()

    def __enter__(self) -> "ApiClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def _check(self, kind: str, doc) -> None:
        if self.validate:
            schemas.validate(kind, doc)
            self.validated += 1

    def _raise_for_error(self, response: httpx.Response) -> None:
        if response.status_code >= 400:
            body = response.json()
            self._check("error", body)
            raise ApiError(response.status_code, body)

    def taxonomy(self) -> dict:
        response = self._http.get("/v1/taxonomy")
        self._raise_for_error(response)
        doc = response.json()
        self._check("taxonomy", doc)
        return doc

    def submit(self, email: dict, config: dict | None = None) -> str:
        body = dict(email)
        if config:
            body["config"] = config
        response = self._http.post("/v1/emails", json=body)
        self._raise_for_error(response)
        doc = response.json()
        self._check("submit_ack", doc)
        return doc["task_id"]

    def status(self, task_id: str) -> dict:
        response = self._http.get(f"/v1/emails/{task_id}")
        self._raise_for_error(response)
        doc = response.json()
        self._check("status", doc)
        return doc

    def result(self, task_id: str) -> dict | None:
        """Completed result document, or None while pending (409)."""
        response = self._http.get(f"/v1/emails/{task_id}/result")
        if response.status_code == 409:
            doc = response.json()
            if doc.get("code") == "pending":
                self._check("pending", doc)
                return None
        self._raise_for_error(response)
        doc = response.json()
        self._check("result", doc)
        return doc

    def register_worker(self, profile: dict) -> dict:
        worker_id = profile["worker_id"]
        body = {k: v for k, v in profile.items() if k != "worker_id"}
        response = self._http.put(f"/v1/workers/{worker_id}", json=body)
        self._raise_for_error(response)
        doc = response.json()
        self._check("worker", doc["worker"])
        return doc

    def next_task(self, worker_id: str) -> dict | None:
        response = self._http.get(f"/v1/workers/{worker_id}/tasks/next")
        if response.status_code == 204:
            return None
        self._raise_for_error(response)
        doc = response.json()
        self._check("task_document", doc)
        return doc

    def submit_step(self, task_id: str, worker_id: str, payload: dict) -> dict:
        response = self._http.post(
            f"/v1/tasks/{task_id}/steps", json={"worker_id": worker_id, "payload": payload}
        )
        self._raise_for_error(response)
        doc = response.json()
        self._check("step_ack", doc)
        return doc


class ServerHandle:
    """Run the API app on a real socket in a background thread."""

    def __init__(self, app, host: str = "127.0.0.1", port: int = 0):
        config = uvicorn.Config(app, host=host, port=port, log_level="warning")
        self.server = uvicorn.Server(config)
        self.thread = threading.Thread(target=self.server.run, daemon=True)

    def start(self, timeout: float = 10.0) -> str:
        self.thread.start()
        deadline = time.monotonic() + timeout
        while not self.server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server failed to start")
            time.sleep(0.01)
        sock = self.server.servers[0].sockets[0]
        host, port = sock.getsockname()[:2]
        return f"http://{host}:{port}"

    def stop(self) -> None:
        self.server.should_exit = True
        self.thread.join(timeout=10)


def run_simulation_http(
    client: ApiClient,
    emails: list[EmailSubmission | dict],
    bots: list[BotProfile],
    config: PipelineConfig | dict | None = None,
    seed: int = 0,
    max_passes: int = 1000,
) -> SimulationReport:
    """Drive a whole simulation through the wire; same report as in-process."""
    if isinstance(config, dict) or config is None:
        config = PipelineConfig.from_dict(config)
    parsed = [e if isinstance(e, EmailSubmission) else EmailSubmission.from_dict(e) for e in emails]
    qualified = [b for b in bots if qualifies(b.profile, config.qualification_policy)]
    if len(qualified) < 6:
        raise InsufficientWorkers(f"simulation needs >=6 qualified bots, have {len(qualified)}")

    for bot in bots:
        client.register_worker(bot.profile.to_dict())

    email_by_task: dict[str, EmailSubmission] = {}
    task_ids = []
    for email in parsed:
        task_id = client.submit(email.to_dict(), config.to_dict())
        task_ids.append(task_id)
        email_by_task[task_id] = email

    ordered = sorted(bots, key=lambda b: (b.latency_steps, b.worker_id))
    pending = set(task_ids)
    for _ in range(max_passes):
        if not pending:
            break
        progress = False
        for bot in ordered:
            try:
                doc = client.next_task(bot.worker_id)
            except ApiError as exc:
                if exc.code == "unqualified_worker":
                    continue
                raise
            if doc is None:
                continue
            email = email_by_task[doc["email_ref"]]
            for payload in sim_worker_respond(bot, doc, email, seed):
                client.submit_step(doc["task_id"], bot.worker_id, payload)
            progress = True
        pending = {
            t for t in task_ids
            if client.status(t)["state"] != PipelineState.COMPLETE.value
        }
        if pending and not progress:
            break

    bots_by_id = {b.worker_id: b for b in bots}
    per_email = []
    margins: dict[str, int] = {}
    rationales: dict[str, int] = {}
    completed = failed = 0
    for task_id in task_ids:
        status = client.status(task_id)
        result = client.result(task_id)
        email = email_by_task[task_id]
        row = {
            "task_id": task_id,
            "state": "complete" if result is not None else "failed",
            "last_state": status["state"],
            "context_mode": email.context_mode.value,
            "verdict_pattern": "",
            "margin": None,
            "pair_rationale": None,
            "worker_ids": [],
        }
        if result is not None:
            audit = result["audit"]
            # the wire result lists scaffold authors (in completion order) but
            # not their verdicts; bot verdicts are pure, so recompute them
            row["verdict_pattern"] = "".join(
                "Y" if _bot_verdict(bots_by_id[w], email) else "N"
                for w in audit["worker_ids"][:3]
            )
            row["margin"] = audit["margin"]
            row["pair_rationale"] = audit["pair_rationale"]
            row["worker_ids"] = list(audit["worker_ids"])
            margins[audit["margin"]] = margins.get(audit["margin"], 0) + 1
            rationales[audit["pair_rationale"]] = rationales.get(audit["pair_rationale"], 0) + 1
            completed += 1
        else:
            failed += 1
        per_email.append(row)

    return SimulationReport(
        seed=seed,
        config=config.to_dict(),
        bot_count=len(bots),
        per_email=tuple(per_email),
        aggregate={
            "completed": completed,
            "failed": failed,
            "margins": dict(sorted(margins.items())),
            "rationales": dict(sorted(rationales.items())),
        },
    )
