"""Append-only event log with snapshots.

Wire format: one JSON object per line in ``events.jsonl`` (UTF-8, dense seq
starting at 1); ``snapshot.json`` holds the canonical serialization of the
orchestrator state with the last applied seq embedded. Canonical JSON means
sorted keys and compact separators, so equal states are equal bytes.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Iterable

from .errors import CorruptLog


class EventKind(str, Enum):
    EMAIL_SUBMITTED = "email_submitted"
    TASK_ASSIGNED = "task_assigned"
    STEP_RECORDED = "step_recorded"
    TASK_COMPLETED = "task_completed"
    TASK_EXPIRED = "task_expired"
    PAIR_SELECTED = "pair_selected"
    BALLOT_RECORDED = "ballot_recorded"
    RESULT_FINALIZED = "result_finalized"


@dataclass(frozen=True)
class Event:
    seq: int
    ts: float
    kind: EventKind
    task_id: str | None
    payload: dict

    def to_dict(self) -> dict:
        return {
            "seq": self.seq,
            "ts": self.ts,
            "kind": self.kind.value,
            "task_id": self.task_id,
            "payload": self.payload,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Event":
        return cls(
            seq=data["seq"],
            ts=data["ts"],
            kind=EventKind(data["kind"]),
            task_id=data.get("task_id"),
            payload=data.get("payload", {}),
        )


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def check_dense(events: Iterable[Event]) -> list[Event]:
    """Validate that seq runs 1,2,3,... with no gaps or repeats."""
    out = []
    expected = 1
    for event in events:
        if event.seq != expected:
            raise CorruptLog(event.seq, f"expected seq {expected}, found {event.seq}")
        out.append(event)
        expected += 1
    return out


class EventStore:
    """Directory-backed store: events.jsonl plus periodic snapshot.json."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.events_path = self.directory / "events.jsonl"
        self.snapshot_path = self.directory / "snapshot.json"

    def append(self, event: Event) -> None:
        line = canonical_json(event.to_dict())
        with open(self.events_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def read_events(self, after_seq: int = 0) -> list[Event]:
        if not self.events_path.exists():
            return []
        events = []
        with open(self.events_path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    event = Event.from_dict(json.loads(line))
                except (json.JSONDecodeError, KeyError, ValueError) as exc:
                    raise CorruptLog(lineno, f"unreadable event at line {lineno}: {exc}")
                if event.seq > after_seq:
                    events.append(event)
        return events

    def write_snapshot(self, state_dict: dict) -> None:
        tmp = self.snapshot_path.with_suffix(".json.tmp")
        tmp.write_text(canonical_json(state_dict), encoding="utf-8")
        tmp.replace(self.snapshot_path)

    def read_snapshot(self) -> dict | None:
        if not self.snapshot_path.exists():
            return None
        return json.loads(self.snapshot_path.read_text(encoding="utf-8"))
