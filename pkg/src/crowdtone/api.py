"""REST surface: requester endpoints (submit/status/result) and worker
endpoints (register, claim next task, submit step).

Handlers are stateless; every mutation goes through the orchestrator's
command lock. Authentication is a static bearer-token stub: when a token is
configured, all /v1 routes require it.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import CrowdToneError, InvalidPayload, UnknownWorker
from .orchestrator import Orchestrator
from .tones import taxonomy
from .workers import WorkerProfile

log = logging.getLogger("crowdtone.api")


def create_app(
    orch: Orchestrator,
    token: str | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    app = FastAPI(title="crowdtone", docs_url=None, redoc_url=None)
    app.state.orchestrator = orch
    app.state.workers: dict[str, WorkerProfile] = {}

    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(CrowdToneError)
    async def domain_error(request: Request, exc: CrowdToneError):
        return JSONResponse(status_code=exc.http_status, content=exc.to_dict())

    if token:

        @app.middleware("http")
        async def check_token(request: Request, call_next):
            if request.url.path.startswith("/v1") and request.method != "OPTIONS":
                header = request.headers.get("authorization", "")
                if header != f"Bearer {token}":
                    return JSONResponse(
                        status_code=401,
                        content={"code": "unauthorized", "message": "missing or bad bearer token"},
                    )
            return await call_next(request)

    async def read_json(request: Request) -> Any:
        try:
            return await request.json()
        except Exception:
            raise InvalidPayload("request body must be valid JSON")

    @app.get("/v1/taxonomy")
    async def get_taxonomy():
        return taxonomy()

    @app.post("/v1/emails", status_code=201)
    async def submit_email(request: Request, response: Response):
        body = await read_json(request)
        if not isinstance(body, dict):
            raise InvalidPayload("submission must be a JSON object")
        config = body.pop("config", None)
        task_id = orch.submit(body, config)
        response.headers["Location"] = f"/v1/emails/{task_id}"
        return {"task_id": task_id}

    @app.get("/v1/emails/{task_id}")
    async def get_status(task_id: str):
        return orch.status(task_id)

    @app.get("/v1/emails/{task_id}/result")
    async def get_result(task_id: str):
        result = orch.result(task_id)
        if result is None:
            return JSONResponse(
                status_code=409,
                content={
                    "code": "pending",
                    "message": "pipeline still in progress",
                    "status": orch.status(task_id),
                },
            )
        return result

    @app.put("/v1/workers/{worker_id}")
    async def register_worker(worker_id: str, request: Request):
        body = await read_json(request)
        if not isinstance(body, dict):
            raise InvalidPayload("worker profile must be a JSON object")
        body["worker_id"] = worker_id
        try:
            profile = WorkerProfile.from_dict(body)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidPayload(f"bad worker profile: {exc}")
        app.state.workers[worker_id] = profile
        return {"worker": profile.to_dict()}

    @app.get("/v1/workers/{worker_id}/tasks/next")
    async def next_task(worker_id: str):
        profile = app.state.workers.get(worker_id)
        if profile is None:
            raise UnknownWorker(f"worker {worker_id} is not registered")
        assignment = orch.next_task(profile)
        if assignment is None:
            return Response(status_code=204)
        return orch.task_document(assignment.email_ref, worker_id)

    @app.post("/v1/tasks/{tid}/steps")
    async def submit_step(tid: str, request: Request):
        body = await read_json(request)
        if not isinstance(body, dict) or "worker_id" not in body or "payload" not in body:
            raise InvalidPayload("step body needs worker_id and payload")
        # tid may be the assignment id (email.kind.worker) or the email task id
        email_ref = tid.split(".", 1)[0] if "." in tid else tid
        return orch.submit_step(email_ref, str(body["worker_id"]), body["payload"])

    return app


def load_token(token_file: str | Path | None) -> str | None:
    if not token_file:
        return None
    return Path(token_file).read_text(encoding="utf-8").strip()
