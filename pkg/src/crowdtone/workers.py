"""Worker profiles and the qualification policy gate.

The policy is data, not code: a minimum approval rating (inclusive) and a
locale allowlist, serializable so deployments can relax either.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QualificationPolicy:
    min_rating: float = 0.95
    locales: tuple[str, ...] = ("US",)

    def to_dict(self) -> dict:
        return {"min_rating": self.min_rating, "locales": list(self.locales)}

    @classmethod
    def from_dict(cls, data: dict | None) -> "QualificationPolicy":
        if not data:
            return cls()
        return cls(
            min_rating=float(data.get("min_rating", 0.95)),
            locales=tuple(data.get("locales", ("US",))),
        )


@dataclass(frozen=True)
class WorkerProfile:
    worker_id: str
    approval_rating: float
    locale: str
    education: str | None = None
    native_speaker: bool | None = None

    def __post_init__(self):
        if not 0.0 <= self.approval_rating <= 1.0:
            raise ValueError(f"approval_rating out of range: {self.approval_rating}")

    def to_dict(self) -> dict:
        return {
            "worker_id": self.worker_id,
            "approval_rating": self.approval_rating,
            "locale": self.locale,
            "education": self.education,
            "native_speaker": self.native_speaker,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WorkerProfile":
        return cls(
            worker_id=str(data["worker_id"]),
            approval_rating=float(data["approval_rating"]),
            locale=str(data["locale"]),
            education=data.get("education"),
            native_speaker=data.get("native_speaker"),
        )


def qualifies(worker: WorkerProfile, policy: QualificationPolicy) -> bool:
    """True iff rating meets the floor (inclusive) and locale is allowed."""
    return worker.approval_rating >= policy.min_rating and worker.locale in policy.locales
