"""Error hierarchy shared by the engines, the orchestrator, the API and the CLI.

Every error carries a stable ``code`` string. The REST layer maps codes to
HTTP statuses one-to-one, and the CLI prints them as machine-readable JSON,
so the set of codes is part of the public contract.
"""

from __future__ import annotations

from typing import Any


class CrowdToneError(Exception):
    """Base class for all domain errors."""

    code = "error"
    http_status = 500

    def __init__(self, message: str, **detail: Any):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_dict(self) -> dict:
        body = {"code": self.code, "message": self.message}
        if self.detail:
            body["detail"] = self.detail
        return body


class UnknownLabel(CrowdToneError):
    """A tone/enum string did not match any canonical member."""

    code = "unknown_label"
    http_status = 400

    def __init__(self, field: str, value: str):
        super().__init__(f"unknown {field}: {value!r}", field=field, value=value)
        self.field = field
        self.value = value


class InvalidSubmission(CrowdToneError):
    code = "invalid_submission"
    http_status = 400


class ContextModeRejected(CrowdToneError):
    code = "context_mode_rejected"
    http_status = 422


class InvalidPayload(CrowdToneError):
    """Step payload is structurally malformed (unknown kind, wrong fields)."""

    code = "invalid_payload"
    http_status = 400


class StageViolation(CrowdToneError):
    code = "stage_violation"
    http_status = 422

    def __init__(self, expected: str, got: str):
        super().__init__(
            f"stage expects {expected} payload, got {got}", expected=expected, got=got
        )
        self.expected = expected
        self.got = got


class EmptyPayload(CrowdToneError):
    code = "empty_payload"
    http_status = 422


class TargetToneMissingIntensity(CrowdToneError):
    code = "target_tone_missing_intensity"
    http_status = 422

    def __init__(self):
        super().__init__("target tone requires an intensity rating")


class UnchangedText(CrowdToneError):
    """An editing step submitted the original email body unchanged."""

    code = "unchanged_text"
    http_status = 422


class NotDone(CrowdToneError):
    code = "not_done"
    http_status = 409


class ArityError(CrowdToneError):
    code = "arity_error"
    http_status = 422


class DuplicateWorker(CrowdToneError):
    code = "duplicate_worker"
    http_status = 409


class WorkerOverlap(CrowdToneError):
    """A consensus voter also authored one of the email's improved versions."""

    code = "worker_overlap"
    http_status = 409


class UnqualifiedWorker(CrowdToneError):
    code = "unqualified_worker"
    http_status = 403


class StaleAssignment(CrowdToneError):
    code = "stale_assignment"
    http_status = 409


class WorkerMismatch(CrowdToneError):
    code = "worker_mismatch"
    http_status = 403


class UnknownTask(CrowdToneError):
    code = "unknown_task"
    http_status = 404


class UnknownWorker(CrowdToneError):
    code = "unknown_worker"
    http_status = 404


class CorruptLog(CrowdToneError):
    code = "corrupt_log"
    http_status = 500

    def __init__(self, seq: int, message: str = ""):
        super().__init__(message or f"event log corrupt at seq {seq}", seq=seq)
        self.seq = seq


class InsufficientWorkers(CrowdToneError):
    code = "insufficient_workers"
    http_status = 422
