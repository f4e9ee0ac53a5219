"""Phase-1 state machine: one worker's tone identification-to-improvement pass.

A worker reviews the email from the recipient's perspective, identifies the
current tone, gives a yes/no verdict on whether that tone is right, and then
walks either the 2-step path (yes: scope notes, direct improvement) or the
4-step path (no: target tone, improvement list, revision, refinement). No
stage is skippable or repeatable; transitions are value-to-value, so a state
can be handed between threads freely.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from string import Template

from .errors import (
    EmptyPayload,
    InvalidPayload,
    NotDone,
    StageViolation,
    TargetToneMissingIntensity,
    UnchangedText,
)
from .tones import EmailSubmission, ToneTuple

INSTRUCTIONS_VERSION = "v1"


class Stage(str, Enum):
    AWAIT_CURRENT_TONE = "await_current_tone"
    AWAIT_VERDICT = "await_verdict"
    YES_AWAIT_SCOPE = "yes_await_scope"
    YES_AWAIT_IMPROVEMENT = "yes_await_improvement"
    NO_AWAIT_TARGET_TONE = "no_await_target_tone"
    NO_AWAIT_IMPROVEMENT_LIST = "no_await_improvement_list"
    NO_AWAIT_REVISION = "no_await_revision"
    NO_AWAIT_REFINEMENT = "no_await_refinement"
    DONE = "done"


# payload kind accepted at each non-terminal stage
EXPECTED_KIND = {
    Stage.AWAIT_CURRENT_TONE: "current_tone",
    Stage.AWAIT_VERDICT: "verdict",
    Stage.YES_AWAIT_SCOPE: "scope_note",
    Stage.YES_AWAIT_IMPROVEMENT: "direct_improvement",
    Stage.NO_AWAIT_TARGET_TONE: "target_tone",
    Stage.NO_AWAIT_IMPROVEMENT_LIST: "improvement_list",
    Stage.NO_AWAIT_REVISION: "revision",
    Stage.NO_AWAIT_REFINEMENT: "refinement",
}

STEP_KINDS = frozenset(EXPECTED_KIND.values())

_EDIT_KINDS = ("direct_improvement", "revision", "refinement")
_LIST_KINDS = {"scope_note": "notes", "improvement_list": "items"}


@dataclass(frozen=True)
class ScaffoldTaskState:
    """Full state of one worker's scaffolding session."""

    email_ref: str
    worker_id: str
    original_body: str
    stage: Stage = Stage.AWAIT_CURRENT_TONE
    current_tone: ToneTuple | None = None
    verdict: bool | None = None
    target_tone: ToneTuple | None = None
    scope_notes: tuple[str, ...] = ()
    improvement_items: tuple[str, ...] = ()
    drafts: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "email_ref": self.email_ref,
            "worker_id": self.worker_id,
            "original_body": self.original_body,
            "stage": self.stage.value,
            "current_tone": self.current_tone.to_dict() if self.current_tone else None,
            "verdict": self.verdict,
            "target_tone": self.target_tone.to_dict() if self.target_tone else None,
            "scope_notes": list(self.scope_notes),
            "improvement_items": list(self.improvement_items),
            "drafts": list(self.drafts),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScaffoldTaskState":
        return cls(
            email_ref=data["email_ref"],
            worker_id=data["worker_id"],
            original_body=data["original_body"],
            stage=Stage(data["stage"]),
            current_tone=ToneTuple.from_dict(data["current_tone"]) if data.get("current_tone") else None,
            verdict=data.get("verdict"),
            target_tone=ToneTuple.from_dict(data["target_tone"]) if data.get("target_tone") else None,
            scope_notes=tuple(data.get("scope_notes", ())),
            improvement_items=tuple(data.get("improvement_items", ())),
            drafts=tuple(data.get("drafts", ())),
        )


@dataclass(frozen=True)
class ScaffoldOutcome:
    """One worker's finished phase-1 product: an improved email version."""

    worker_id: str
    current_tone: ToneTuple
    verdict: bool
    target_tone: ToneTuple | None
    notes: tuple[str, ...]
    improved_text: str
    draft_history: tuple[str, ...]
    completed_at: int = 0

    def to_dict(self) -> dict:
        return {
            "worker_id": self.worker_id,
            "current_tone": self.current_tone.to_dict(),
            "verdict": self.verdict,
            "target_tone": self.target_tone.to_dict() if self.target_tone else None,
            "notes": list(self.notes),
            "improved_text": self.improved_text,
            "draft_history": list(self.draft_history),
            "completed_at": self.completed_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScaffoldOutcome":
        return cls(
            worker_id=data["worker_id"],
            current_tone=ToneTuple.from_dict(data["current_tone"]),
            verdict=data["verdict"],
            target_tone=ToneTuple.from_dict(data["target_tone"]) if data.get("target_tone") else None,
            notes=tuple(data["notes"]),
            improved_text=data["improved_text"],
            draft_history=tuple(data["draft_history"]),
            completed_at=data.get("completed_at", 0),
        )


def start_task(email: EmailSubmission, worker_id: str, email_ref: str = "") -> ScaffoldTaskState:
    """Open a scaffolding session; the worker reads as the recipient first."""
    email.validate()
    return ScaffoldTaskState(
        email_ref=email_ref or email.subject,
        worker_id=worker_id,
        original_body=email.body,
    )


def _clean_text(payload: dict, state: ScaffoldTaskState) -> str:
    text = payload.get("text")
    if not isinstance(text, str) or text.strip() == "":
        raise EmptyPayload("editing step requires non-blank text")
    if text.strip() == state.original_body.strip():
        raise UnchangedText("submitted text is byte-identical to the original email body")
    return text


def _clean_items(payload: dict, key: str) -> tuple[str, ...]:
    items = payload.get(key)
    if not isinstance(items, list) or len(items) == 0:
        raise EmptyPayload(f"at least one entry required in {key}")
    cleaned = []
    for item in items:
        if not isinstance(item, str) or item.strip() == "":
            raise EmptyPayload(f"blank entry in {key}")
        cleaned.append(item)
    return tuple(cleaned)


def advance(state: ScaffoldTaskState, payload: dict) -> ScaffoldTaskState:
    """Apply one step payload (kind-tagged dict) and return the next state.

    The payload kind must match the current stage exactly; list payloads
    need at least one non-blank entry, editing payloads must differ from the
    original body, and a target tone must carry an intensity.
    """
    if not isinstance(payload, dict) or "kind" not in payload:
        raise InvalidPayload("step payload must be an object with a kind tag")
    kind = payload["kind"]
    if kind not in STEP_KINDS:
        raise InvalidPayload(f"unknown step kind {kind!r}")
    if state.stage is Stage.DONE:
        raise StageViolation("nothing (task done)", kind)
    expected = EXPECTED_KIND[state.stage]
    if kind != expected:
        raise StageViolation(expected, kind)

    if kind == "current_tone":
        tone = ToneTuple.from_dict(payload.get("tone"))
        return dataclasses.replace(state, stage=Stage.AWAIT_VERDICT, current_tone=tone)

    if kind == "verdict":
        value = payload.get("value")
        if not isinstance(value, bool):
            raise InvalidPayload("verdict payload requires a boolean value")
        next_stage = Stage.YES_AWAIT_SCOPE if value else Stage.NO_AWAIT_TARGET_TONE
        return dataclasses.replace(state, stage=next_stage, verdict=value)

    if kind == "scope_note":
        notes = _clean_items(payload, "notes")
        return dataclasses.replace(state, stage=Stage.YES_AWAIT_IMPROVEMENT, scope_notes=notes)

    if kind == "direct_improvement":
        text = _clean_text(payload, state)
        return dataclasses.replace(state, stage=Stage.DONE, drafts=state.drafts + (text,))

    if kind == "target_tone":
        tone = ToneTuple.from_dict(payload.get("tone"))
        if tone.intensity is None:
            raise TargetToneMissingIntensity()
        return dataclasses.replace(state, stage=Stage.NO_AWAIT_IMPROVEMENT_LIST, target_tone=tone)

    if kind == "improvement_list":
        items = _clean_items(payload, "items")
        return dataclasses.replace(
            state, stage=Stage.NO_AWAIT_REVISION, improvement_items=items
        )

    if kind == "revision":
        text = _clean_text(payload, state)
        return dataclasses.replace(
            state, stage=Stage.NO_AWAIT_REFINEMENT, drafts=state.drafts + (text,)
        )

    # refinement
    text = _clean_text(payload, state)
    return dataclasses.replace(state, stage=Stage.DONE, drafts=state.drafts + (text,))


def finalize(state: ScaffoldTaskState, completed_at: int = 0) -> ScaffoldOutcome:
    """Collapse a finished session into its outcome (last draft wins)."""
    if state.stage is not Stage.DONE:
        raise NotDone(f"session still at stage {state.stage.value}")
    notes = state.scope_notes if state.verdict else state.improvement_items
    return ScaffoldOutcome(
        worker_id=state.worker_id,
        current_tone=state.current_tone,  # type: ignore[arg-type]
        verdict=bool(state.verdict),
        target_tone=state.target_tone,
        notes=notes,
        improved_text=state.drafts[-1],
        draft_history=state.drafts,
        completed_at=completed_at,
    )


def instructions(stage: Stage, email: EmailSubmission) -> str:
    """Render the versioned instruction template for a stage."""
    name = f"{stage.value}.txt"
    pkg = resources.files(__package__) / "resources" / "instructions" / INSTRUCTIONS_VERSION
    template = Template((pkg / name).read_text(encoding="utf-8"))
    return template.safe_substitute(
        sender_relationship=email.sender_relationship,
        recipient_relationship=email.recipient_relationship,
        subject=email.subject,
    )
