"""Event-sourced pipeline orchestrator.

Each submitted email moves through Scaffolding (three workers improve it
independently) to PairSelected (phase A) to Balloting (three fresh workers
vote) to Complete. Every mutation is an appended event; live state is only
ever changed by applying events, so replaying the log reconstructs the
exact state byte-for-byte.

Concurrency: single-writer command serialization via one lock per
orchestrator. Engines are invoked synchronously inside command handling;
reads take the same lock and return snapshots.
"""

from __future__ import annotations

import hashlib
import json
import threading
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable

from . import consensus, scaffolding
from .consensus import Ballot, CandidatePair, PairRationale
from .errors import (
    ContextModeRejected,
    EmptyPayload,
    InvalidPayload,
    InvalidSubmission,
    StageViolation,
    StaleAssignment,
    UnknownTask,
    UnqualifiedWorker,
    WorkerMismatch,
)
from .events import Event, EventKind, EventStore, canonical_json, check_dense
from .scaffolding import ScaffoldOutcome, ScaffoldTaskState, Stage
from .tones import ContextMode, EmailSubmission, submission_from_dict, taxonomy
from .workers import QualificationPolicy, WorkerProfile, qualifies

DEFAULT_DEADLINE_SECS = 1800.0  # 30 minutes

SCAFFOLD = "scaffold"
BALLOT = "ballot"


class PipelineState(str, Enum):
    SUBMITTED = "submitted"
    SCAFFOLDING = "scaffolding"
    PAIR_SELECTED = "pair_selected"
    BALLOTING = "balloting"
    COMPLETE = "complete"
    FAILED = "failed"


class ContextModeRequired(str, Enum):
    ANY = "any"
    MINIMAL_ONLY = "minimal_only"
    MAXIMUM_ONLY = "maximum_only"


@dataclass(frozen=True)
class PipelineConfig:
    """Per-submission run configuration.

    iterations=3 enables the consensus-phase refinement pass (ballots then
    carry the voter's own rewrite); iterations=2 makes ballots vote-only.
    """

    iterations: int = 2
    context_mode_required: ContextModeRequired = ContextModeRequired.ANY
    task_deadline_secs: float = DEFAULT_DEADLINE_SECS
    qualification_policy: QualificationPolicy = QualificationPolicy()

    def __post_init__(self):
        if self.iterations not in (2, 3):
            raise InvalidSubmission(f"iterations must be 2 or 3, got {self.iterations}")
        if self.task_deadline_secs <= 0:
            raise InvalidSubmission("task_deadline_secs must be positive")

    @property
    def refinement_enabled(self) -> bool:
        return self.iterations == 3

    def to_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "context_mode_required": self.context_mode_required.value,
            "task_deadline_secs": self.task_deadline_secs,
            "qualification_policy": self.qualification_policy.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict | None) -> "PipelineConfig":
        if not data:
            return cls()
        raw_mode = data.get("context_mode_required", "any")
        try:
            mode = ContextModeRequired(raw_mode)
        except ValueError:
            raise InvalidSubmission(f"unknown context_mode_required: {raw_mode!r}")
        try:
            iterations = int(data.get("iterations", 2))
            deadline = float(data.get("task_deadline_secs", DEFAULT_DEADLINE_SECS))
        except (TypeError, ValueError) as exc:
            raise InvalidSubmission(f"bad config value: {exc}")
        return cls(
            iterations=iterations,
            context_mode_required=mode,
            task_deadline_secs=deadline,
            qualification_policy=QualificationPolicy.from_dict(
                data.get("qualification_policy")
            ),
        )


@dataclass(frozen=True)
class Assignment:
    """One live unit of crowd work: a worker attached to one email's slot."""

    email_ref: str
    worker_id: str
    kind: str  # scaffold | ballot
    issued_at: float
    deadline: float

    @property
    def task_id(self) -> str:
        return f"{self.email_ref}.{self.kind}.{self.worker_id}"

    def to_dict(self) -> dict:
        return {
            "task_id": self.task_id,
            "email_ref": self.email_ref,
            "worker_id": self.worker_id,
            "kind": self.kind,
            "issued_at": self.issued_at,
            "deadline": self.deadline,
        }


class LogicalClock:
    """Deterministic counter clock for simulations: 1.0, 2.0, 3.0, ..."""

    def __init__(self, start: float = 0.0, step: float = 1.0):
        self._now = start
        self._step = step

    def __call__(self) -> float:
        self._now += self._step
        return self._now


def _payload_hash(payload: dict) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


class Orchestrator:
    """Single-writer command core holding the event-sourced pipeline state."""

    def __init__(
        self,
        store_dir: str | Path | None = None,
        clock: Callable[[], float] | None = None,
        snapshot_every: int = 200,
    ):
        self._lock = threading.RLock()
        self._clock = clock or time.time
        self._snapshot_every = snapshot_every
        self._s: dict = {"last_seq": 0, "next_task_num": 1, "tasks": {}}
        self._events: list[Event] = []
        self._store = EventStore(store_dir) if store_dir else None
        if self._store:
            self._load()

    # ------------------------------------------------------------------
    # persistence / replay
    # ------------------------------------------------------------------

    def _load(self) -> None:
        snapshot = self._store.read_snapshot() if self._store else None
        after = 0
        if snapshot is not None:
            self._s = snapshot
            after = int(snapshot.get("last_seq", 0))
        tail = self._store.read_events(after_seq=0) if self._store else []
        check_dense(tail)
        for event in tail:
            if event.seq > after:
                self._apply(event)
        self._events = tail

    @classmethod
    def from_events(
        cls, events: Iterable[Event], clock: Callable[[], float] | None = None
    ) -> "Orchestrator":
        """Rebuild state purely from an event log (dense seq required)."""
        orch = cls(clock=clock)
        for event in check_dense(list(events)):
            orch._apply(event)
            orch._events.append(event)
        return orch

    def events(self) -> list[Event]:
        with self._lock:
            return list(self._events)

    def state_dict(self) -> dict:
        """Canonical JSON-clean deep copy of the full state."""
        with self._lock:
            return json.loads(canonical_json(self._s))

    def canonical_state(self) -> str:
        return canonical_json(self.state_dict())

    def save_snapshot(self) -> None:
        with self._lock:
            if self._store:
                self._store.write_snapshot(self.state_dict())

    # ------------------------------------------------------------------
    # event plumbing
    # ------------------------------------------------------------------

    def _append(self, kind: EventKind, task_id: str | None, payload: dict) -> Event:
        event = Event(
            seq=self._s["last_seq"] + 1,
            ts=self._clock(),
            kind=kind,
            task_id=task_id,
            payload=payload,
        )
        if self._store:
            self._store.append(event)
        self._apply(event)
        self._events.append(event)
        if self._store and event.seq % self._snapshot_every == 0:
            self._store.write_snapshot(self.state_dict())
        return event

    def _apply(self, event: Event) -> None:
        handler = getattr(self, f"_apply_{event.kind.value}")
        handler(event)
        self._s["last_seq"] = event.seq
        if event.task_id is not None and event.task_id in self._s["tasks"]:
            self._s["tasks"][event.task_id]["event_count"] += 1

    def _apply_email_submitted(self, event: Event) -> None:
        payload = event.payload
        task_id = payload["task_id"]
        self._s["tasks"][task_id] = {
            "task_id": task_id,
            "email": payload["email"],
            "config": payload["config"],
            "state": PipelineState.SCAFFOLDING.value,
            "timestamps": {"submitted": event.ts, "scaffolding": event.ts},
            "touched": [],
            "assignments": {},
            "sessions": {},
            "outcomes": [],
            "pair": None,
            "ballots": [],
            "result": None,
            "acks": {},
            "last_ack_key": None,
            "event_count": 0,
        }
        self._s["next_task_num"] += 1

    def _apply_task_assigned(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        payload = event.payload
        worker_id = payload["worker_id"]
        task["assignments"][worker_id] = {
            "kind": payload["kind"],
            "issued_at": payload["issued_at"],
            "deadline": payload["deadline"],
        }
        if worker_id not in task["touched"]:
            task["touched"].append(worker_id)
        if payload["kind"] == SCAFFOLD:
            email = submission_from_dict(task["email"])
            session = scaffolding.start_task(email, worker_id, email_ref=event.task_id)
            task["sessions"][worker_id] = session.to_dict()

    def _apply_step_recorded(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        payload = event.payload
        worker_id = payload["worker_id"]
        session = ScaffoldTaskState.from_dict(task["sessions"][worker_id])
        new_state = scaffolding.advance(session, payload["payload"])
        task["sessions"][worker_id] = new_state.to_dict()
        self._record_ack(
            task,
            worker_id,
            payload["payload"],
            event.seq,
            kind=SCAFFOLD,
            stage_after=new_state.stage.value,
        )

    def _apply_task_completed(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        payload = event.payload
        worker_id = payload["worker_id"]
        task["outcomes"].append(payload["outcome"])
        task["sessions"].pop(worker_id, None)
        task["assignments"].pop(worker_id, None)
        self._refresh_ack(task)

    def _apply_pair_selected(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        task["pair"] = event.payload["pair"]
        task["state"] = PipelineState.PAIR_SELECTED.value
        task["timestamps"].setdefault("pair_selected", event.ts)
        self._refresh_ack(task)

    def _apply_ballot_recorded(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        payload = event.payload
        worker_id = payload["worker_id"]
        task["ballots"].append(
            {
                "worker_id": worker_id,
                "choice": payload["choice"],
                "refined_text": payload.get("refined_text"),
                "completed_at": event.seq,
            }
        )
        task["assignments"].pop(worker_id, None)
        if task["state"] == PipelineState.PAIR_SELECTED.value:
            task["state"] = PipelineState.BALLOTING.value
            task["timestamps"].setdefault("balloting", event.ts)
        self._record_ack(
            task,
            worker_id,
            payload["payload"],
            event.seq,
            kind=BALLOT,
            stage_after=None,
        )

    def _apply_result_finalized(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        task["result"] = event.payload["result"]
        task["state"] = PipelineState.COMPLETE.value
        task["timestamps"].setdefault("complete", event.ts)
        self._refresh_ack(task)

    def _apply_task_expired(self, event: Event) -> None:
        task = self._s["tasks"][event.task_id]
        worker_id = event.payload["worker_id"]
        task["assignments"].pop(worker_id, None)
        task["sessions"].pop(worker_id, None)

    # Acks are stored per (worker, payload hash); cascade events that follow
    # a step within the same command refresh the stored status so a retry
    # returns exactly what the original call returned.
    def _record_ack(
        self,
        task: dict,
        worker_id: str,
        payload: dict,
        seq: int,
        kind: str,
        stage_after: str | None,
    ) -> None:
        key = f"{worker_id}:{_payload_hash(payload)}"
        task["acks"][key] = {
            "task_id": task["task_id"],
            "worker_id": worker_id,
            "kind": kind,
            "seq": seq,
            "stage_after": stage_after,
            "status": self._status_of(task),
        }
        task["last_ack_key"] = key

    def _refresh_ack(self, task: dict) -> None:
        key = task.get("last_ack_key")
        if key and key in task["acks"]:
            task["acks"][key]["status"] = self._status_of(task)

    # ------------------------------------------------------------------
    # commands
    # ------------------------------------------------------------------

    def submit(
        self,
        email: EmailSubmission | dict,
        config: PipelineConfig | dict | None = None,
    ) -> str:
        """Accept an email for processing; returns its stable task id."""
        if isinstance(email, dict):
            email = submission_from_dict(email)
        email.validate()
        if isinstance(config, dict) or config is None:
            config = PipelineConfig.from_dict(config)
        mode = email.context_mode
        required = config.context_mode_required
        if required is ContextModeRequired.MINIMAL_ONLY and mode is not ContextMode.MINIMAL:
            raise ContextModeRejected(f"run requires minimal context, got {mode.value}")
        if required is ContextModeRequired.MAXIMUM_ONLY and mode is not ContextMode.MAXIMUM:
            raise ContextModeRejected(f"run requires maximum context, got {mode.value}")
        with self._lock:
            task_id = f"ct-{self._s['next_task_num']:06d}"
            self._append(
                EventKind.EMAIL_SUBMITTED,
                task_id,
                {"task_id": task_id, "email": email.to_dict(), "config": config.to_dict()},
            )
            return task_id

    def next_task(self, worker: WorkerProfile | dict) -> Assignment | None:
        """Claim the next open slot this worker qualifies for, if any.

        Emails the worker has ever touched are skipped (distinctness across
        phases and reassignments). Returns None when nothing is open;
        raises UnqualifiedWorker when open work exists but policy excludes
        the worker from all of it.
        """
        if isinstance(worker, dict):
            worker = WorkerProfile.from_dict(worker)
        with self._lock:
            # a live assignment is re-offered, so a reloaded client resumes
            # instead of hoarding a second slot
            for task_id in sorted(self._s["tasks"]):
                live = self._s["tasks"][task_id]["assignments"].get(worker.worker_id)
                if live is not None:
                    return Assignment(
                        task_id, worker.worker_id, live["kind"],
                        live["issued_at"], live["deadline"],
                    )
            candidates: list[tuple[str, str]] = []
            for task_id in sorted(self._s["tasks"]):
                task = self._s["tasks"][task_id]
                if worker.worker_id in task["touched"]:
                    continue
                kind = self._open_slot_kind(task)
                if kind:
                    candidates.append((task_id, kind))
            if not candidates:
                return None
            for task_id, kind in candidates:
                task = self._s["tasks"][task_id]
                policy = QualificationPolicy.from_dict(
                    task["config"].get("qualification_policy")
                )
                if not qualifies(worker, policy):
                    continue
                issued_at = self._clock()
                deadline = issued_at + float(task["config"]["task_deadline_secs"])
                self._append(
                    EventKind.TASK_ASSIGNED,
                    task_id,
                    {
                        "worker_id": worker.worker_id,
                        "kind": kind,
                        "issued_at": issued_at,
                        "deadline": deadline,
                    },
                )
                return Assignment(task_id, worker.worker_id, kind, issued_at, deadline)
            raise UnqualifiedWorker(
                f"worker {worker.worker_id} fails the qualification policy for all open work",
                worker_id=worker.worker_id,
                approval_rating=worker.approval_rating,
                locale=worker.locale,
            )

    def _open_slot_kind(self, task: dict) -> str | None:
        state = task["state"]
        if state == PipelineState.SCAFFOLDING.value:
            live = sum(1 for a in task["assignments"].values() if a["kind"] == SCAFFOLD)
            if live + len(task["outcomes"]) < 3:
                return SCAFFOLD
        elif state in (PipelineState.PAIR_SELECTED.value, PipelineState.BALLOTING.value):
            live = sum(1 for a in task["assignments"].values() if a["kind"] == BALLOT)
            if live + len(task["ballots"]) < 3:
                return BALLOT
        return None

    def submit_step(self, task_id: str, worker_id: str, payload: dict) -> dict:
        """Record one step from a worker; cascades phase transitions.

        Returns the step ack (stage reached plus pipeline status). Retrying
        a previously accepted identical payload returns the original ack.
        """
        if not isinstance(payload, dict):
            raise InvalidPayload("step payload must be a JSON object")
        with self._lock:
            task = self._task(task_id)
            ack_key = f"{worker_id}:{_payload_hash(payload)}"
            if ack_key in task["acks"]:
                return json.loads(canonical_json(task["acks"][ack_key]))
            assignment = task["assignments"].get(worker_id)
            if assignment is None:
                if worker_id in task["touched"]:
                    raise StaleAssignment(
                        f"worker {worker_id} no longer holds a live assignment on {task_id}"
                    )
                raise WorkerMismatch(f"worker {worker_id} was never assigned to {task_id}")
            now = self._clock()
            if now > assignment["deadline"]:
                raise StaleAssignment(
                    f"deadline passed for worker {worker_id} on {task_id}"
                )
            if assignment["kind"] == SCAFFOLD:
                ack = self._handle_scaffold_step(task, worker_id, payload)
            else:
                ack = self._handle_ballot(task, worker_id, payload)
            return json.loads(canonical_json(ack))

    def _handle_scaffold_step(self, task: dict, worker_id: str, payload: dict) -> dict:
        if payload.get("kind") == BALLOT:
            session = ScaffoldTaskState.from_dict(task["sessions"][worker_id])
            raise StageViolation(scaffolding.EXPECTED_KIND[session.stage], BALLOT)
        session = ScaffoldTaskState.from_dict(task["sessions"][worker_id])
        new_state = scaffolding.advance(session, payload)  # validates, may raise
        task_id = task["task_id"]
        step_event = self._append(
            EventKind.STEP_RECORDED,
            task_id,
            {
                "worker_id": worker_id,
                "stage": session.stage.value,
                "payload": payload,
            },
        )
        if new_state.stage is Stage.DONE:
            outcome = scaffolding.finalize(new_state, completed_at=step_event.seq + 1)
            self._append(
                EventKind.TASK_COMPLETED,
                task_id,
                {"worker_id": worker_id, "outcome": outcome.to_dict()},
            )
            if len(task["outcomes"]) == 3:
                outcomes = [ScaffoldOutcome.from_dict(o) for o in task["outcomes"]]
                pair = consensus.select_pair(outcomes)
                self._append(
                    EventKind.PAIR_SELECTED,
                    task_id,
                    {
                        "pair": {
                            "a_worker": pair.a.worker_id,
                            "b_worker": pair.b.worker_id,
                            "rationale": pair.rationale.value,
                            "similarity": pair.similarity,
                        }
                    },
                )
        ack_key = f"{worker_id}:{_payload_hash(payload)}"
        return task["acks"][ack_key]

    def _handle_ballot(self, task: dict, worker_id: str, payload: dict) -> dict:
        if payload.get("kind") != BALLOT:
            raise StageViolation(BALLOT, str(payload.get("kind")))
        choice = payload.get("choice")
        if choice not in ("a", "b"):
            raise InvalidPayload("ballot choice must be 'a' or 'b'")
        config = PipelineConfig.from_dict(task["config"])
        refined = payload.get("refined_text")
        if config.refinement_enabled:
            if refined is None:
                raise InvalidPayload("refined_text is required when iterations=3")
            if not isinstance(refined, str) or refined.strip() == "":
                raise EmptyPayload("refined_text must be non-blank")
        elif refined is not None:
            raise InvalidPayload("refined_text is not accepted when iterations=2")

        task_id = task["task_id"]
        self._append(
            EventKind.BALLOT_RECORDED,
            task_id,
            {
                "worker_id": worker_id,
                "choice": choice,
                "refined_text": refined,
                "payload": payload,
            },
        )
        if len(task["ballots"]) == 3:
            outcomes = [ScaffoldOutcome.from_dict(o) for o in task["outcomes"]]
            pair = self._pair_of(task, outcomes)
            ballots = [Ballot.from_dict(b) for b in task["ballots"]]
            selection = consensus.tally(
                ballots, pair, scaffold_worker_ids={o.worker_id for o in outcomes}
            )
            email = submission_from_dict(task["email"])
            result = consensus.compose_result(
                email,
                outcomes,
                pair,
                selection,
                ballots,
                task_id=task_id,
                event_count=task["event_count"] + 1,
            )
            self._append(EventKind.RESULT_FINALIZED, task_id, {"result": result})
        ack_key = f"{worker_id}:{_payload_hash(payload)}"
        return task["acks"][ack_key]

    def _pair_of(self, task: dict, outcomes: list[ScaffoldOutcome]) -> CandidatePair:
        info = task["pair"]
        by_worker = {o.worker_id: o for o in outcomes}
        return CandidatePair(
            a=by_worker[info["a_worker"]],
            b=by_worker[info["b_worker"]],
            rationale=PairRationale(info["rationale"]),
            similarity=info.get("similarity"),
        )

    def expire_overdue(self, now: float | None = None) -> list[str]:
        """Expire live assignments past deadline; their slots reopen."""
        with self._lock:
            if now is None:
                now = self._clock()
            expired: list[str] = []
            for task_id in sorted(self._s["tasks"]):
                task = self._s["tasks"][task_id]
                overdue = [
                    (worker_id, a)
                    for worker_id, a in sorted(task["assignments"].items())
                    if a["deadline"] < now
                ]
                for worker_id, a in overdue:
                    self._append(
                        EventKind.TASK_EXPIRED,
                        task_id,
                        {
                            "worker_id": worker_id,
                            "kind": a["kind"],
                            "deadline": a["deadline"],
                            "expired_at": now,
                        },
                    )
                    if task_id not in expired:
                        expired.append(task_id)
            return expired

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def _task(self, task_id: str) -> dict:
        task = self._s["tasks"].get(task_id)
        if task is None:
            raise UnknownTask(f"no such task: {task_id}")
        return task

    def _status_of(self, task: dict) -> dict:
        state = task["state"]
        completed = None
        if state == PipelineState.SCAFFOLDING.value:
            completed = len(task["outcomes"])
        elif state == PipelineState.BALLOTING.value:
            completed = len(task["ballots"])
        return {
            "task_id": task["task_id"],
            "state": state,
            "completed": completed,
            "timestamps": dict(task["timestamps"]),
        }

    def status(self, task_id: str) -> dict:
        with self._lock:
            return self._status_of(self._task(task_id))

    def result(self, task_id: str) -> dict | None:
        """The finished result document, or None while the pipeline runs."""
        with self._lock:
            task = self._task(task_id)
            if task["result"] is None:
                return None
            return json.loads(canonical_json(task["result"]))

    def task_document(self, task_id: str, worker_id: str) -> dict:
        """Stage-specific work document for a worker's live assignment."""
        with self._lock:
            task = self._task(task_id)
            assignment = task["assignments"].get(worker_id)
            if assignment is None:
                raise WorkerMismatch(f"worker {worker_id} holds no live assignment on {task_id}")
            email = submission_from_dict(task["email"])
            config = PipelineConfig.from_dict(task["config"])
            doc = {
                "task_id": f"{task_id}.{assignment['kind']}.{worker_id}",
                "email_ref": task_id,
                "worker_id": worker_id,
                "kind": assignment["kind"],
                "issued_at": assignment["issued_at"],
                "deadline": assignment["deadline"],
                "email": email.to_dict(),
                "taxonomy": taxonomy(),
            }
            if assignment["kind"] == SCAFFOLD:
                session = ScaffoldTaskState.from_dict(task["sessions"][worker_id])
                doc["stage"] = session.stage.value
                doc["allowed_payload_kind"] = scaffolding.EXPECTED_KIND[session.stage]
                doc["instructions"] = scaffolding.instructions(session.stage, email)
            else:
                outcomes = {o["worker_id"]: o for o in task["outcomes"]}
                info = task["pair"]
                doc["stage"] = None
                doc["allowed_payload_kind"] = BALLOT
                doc["refinement_required"] = config.refinement_enabled
                doc["pair"] = {
                    "a": {"body": outcomes[info["a_worker"]]["improved_text"]},
                    "b": {"body": outcomes[info["b_worker"]]["improved_text"]},
                }
                template = "ballot_refine" if config.refinement_enabled else "ballot"
                doc["instructions"] = _ballot_instructions(template, email)
            return doc

    def list_tasks(self) -> list[dict]:
        with self._lock:
            return [self._status_of(self._s["tasks"][tid]) for tid in sorted(self._s["tasks"])]

    def open_slots(self, task_id: str) -> dict:
        """How many assignments of which kind the task can still hand out."""
        with self._lock:
            task = self._task(task_id)
            kind = self._open_slot_kind(task)
            if kind is None:
                return {"kind": None, "open": 0}
            live = sum(1 for a in task["assignments"].values() if a["kind"] == kind)
            done = len(task["outcomes"]) if kind == SCAFFOLD else len(task["ballots"])
            return {"kind": kind, "open": 3 - live - done}


def _ballot_instructions(template: str, email: EmailSubmission) -> str:
    from importlib import resources
    from string import Template

    pkg = resources.files(__package__) / "resources" / "instructions" / scaffolding.INSTRUCTIONS_VERSION
    text = Template((pkg / f"{template}.txt").read_text(encoding="utf-8"))
    return text.safe_substitute(recipient_relationship=email.recipient_relationship)


def replay(events: Iterable[Event]) -> Orchestrator:
    """Reconstruct an orchestrator from an event log (CorruptLog on gaps)."""
    return Orchestrator.from_events(events)


def replay_store(store_dir: str | Path) -> Orchestrator:
    """Replay a store directory's full event log from scratch."""
    store = EventStore(store_dir)
    return Orchestrator.from_events(store.read_events())
