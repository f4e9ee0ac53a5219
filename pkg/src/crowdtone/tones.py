"""Tone taxonomy, submission schema and the tone-similarity metric.

The taxonomy is fixed: two primary tones, ten secondary tones and three
intensity levels. Canonical wire strings are lower-case, slash-joined for
the secondaries ("courteous/respectful/polite") and "quite close" keeps its
space. Everything here is a pure constant or a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidSubmission, UnknownLabel


class PrimaryTone(str, Enum):
    FORMAL = "formal"
    INFORMAL = "informal"


class SecondaryTone(str, Enum):
    APPRECIATIVE_THANKFUL = "appreciative/thankful"
    CONFIDENT = "confident"
    COURTEOUS_RESPECTFUL_POLITE = "courteous/respectful/polite"
    EMOTIONAL_PERSUASIVE = "emotional/persuasive"
    ENTHUSIASTIC_CHEERFUL = "enthusiastic/cheerful"
    LIGHT_HUMOROUS_FRIENDLINESS = "light/humorous/friendliness"
    REGRETFUL_SORROWFUL = "regretful/sorrowful"
    SERIOUS = "serious"
    COLD_UNFRIENDLY = "cold/unfriendly"
    ENRAGED = "enraged"


class Intensity(str, Enum):
    VERY = "very"
    QUITE_CLOSE = "quite close"
    SOMEWHAT = "somewhat"

    @property
    def rank(self) -> int:
        """Total order: very > quite close > somewhat."""
        return {"very": 3, "quite close": 2, "somewhat": 1}[self.value]

    # str defines lexicographic comparisons; rank order must win
    def __lt__(self, other):  # type: ignore[override]
        if isinstance(other, Intensity):
            return self.rank < other.rank
        return NotImplemented

    def __le__(self, other):  # type: ignore[override]
        if isinstance(other, Intensity):
            return self.rank <= other.rank
        return NotImplemented

    def __gt__(self, other):  # type: ignore[override]
        if isinstance(other, Intensity):
            return self.rank > other.rank
        return NotImplemented

    def __ge__(self, other):  # type: ignore[override]
        if isinstance(other, Intensity):
            return self.rank >= other.rank
        return NotImplemented


class Hierarchy(str, Enum):
    SENIOR = "senior"
    SAME_LEVEL = "same level"
    JUNIOR = "junior"


class RelationshipType(str, Enum):
    FRIENDS_FAMILY = "friends and family"
    ACQUAINTANCES = "acquaintances"
    STRANGERS = "strangers"


class ContextMode(str, Enum):
    MINIMAL = "minimal"
    MAXIMUM = "maximum"
    PARTIAL = "partial"


def taxonomy() -> dict:
    """Return the complete fixed option lists in canonical order."""
    return {
        "primaries": [t.value for t in PrimaryTone],
        "secondaries": [t.value for t in SecondaryTone],
        "intensities": [t.value for t in Intensity],
    }


def _match_member(enum_cls, field_name: str, raw: str):
    folded = raw.strip().lower()
    for member in enum_cls:
        if member.value == folded:
            return member
    raise UnknownLabel(field_name, raw)


@dataclass(frozen=True)
class ToneTuple:
    """A (primary, secondary) tone pair with an optional closeness rating.

    Intensity is required whenever the tuple denotes a target ("right")
    tone; a current-tone identification may leave it unset.
    """

    primary: PrimaryTone
    secondary: SecondaryTone
    intensity: Intensity | None = None

    def to_dict(self) -> dict:
        return {
            "primary": self.primary.value,
            "secondary": self.secondary.value,
            "intensity": self.intensity.value if self.intensity else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ToneTuple":
        if not isinstance(data, dict):
            raise UnknownLabel("tone", repr(data))
        intensity = data.get("intensity")
        return parse_tone(
            str(data.get("primary", "")),
            str(data.get("secondary", "")),
            str(intensity) if intensity is not None else None,
        )

    def __str__(self) -> str:
        if self.intensity:
            return f"{self.intensity.value} {self.primary.value} and {self.secondary.value}"
        return f"{self.primary.value} and {self.secondary.value}"


def parse_tone(
    primary_str: str, secondary_str: str, intensity_str: str | None = None
) -> ToneTuple:
    """Case-insensitive parse of canonical tone strings into a ToneTuple."""
    primary = _match_member(PrimaryTone, "primary", primary_str)
    secondary = _match_member(SecondaryTone, "secondary", secondary_str)
    intensity = None
    if intensity_str is not None and intensity_str.strip() != "":
        intensity = _match_member(Intensity, "intensity", intensity_str)
    return ToneTuple(primary, secondary, intensity)


def tone_similarity(a: ToneTuple, b: ToneTuple) -> int:
    """Weighted agreement score between two tone tuples, range 0..7.

    Primary agreement counts 4, secondary 2, intensity 1 (only when both
    ratings are present), so primary agreement always dominates.
    """
    score = 0
    if a.primary == b.primary:
        score += 4
    if a.secondary == b.secondary:
        score += 2
    if a.intensity is not None and b.intensity is not None and a.intensity == b.intensity:
        score += 1
    return score


MANDATORY_FIELDS = (
    "sender_relationship",
    "recipient_relationship",
    "subject",
    "body",
    "context_note",
)

OPTIONAL_FIELDS = (
    "sender_gender",
    "recipient_gender",
    "sender_native_language",
    "recipient_native_language",
    "hierarchy",
    "relationship_type",
)


@dataclass(frozen=True)
class EmailSubmission:
    """A sender's email plus the context the crowd works from.

    The five mandatory fields must be non-empty after whitespace trim. The
    six optional fields determine the context mode: minimal when all are
    absent, maximum when all are present, partial otherwise.
    """

    sender_relationship: str
    recipient_relationship: str
    subject: str
    body: str
    context_note: str
    sender_gender: str | None = None
    recipient_gender: str | None = None
    sender_native_language: str | None = None
    recipient_native_language: str | None = None
    hierarchy: Hierarchy | None = None
    relationship_type: RelationshipType | None = None

    def validate(self) -> None:
        for name in MANDATORY_FIELDS:
            value = getattr(self, name)
            if not isinstance(value, str) or value.strip() == "":
                raise InvalidSubmission(f"mandatory field {name} is missing or blank", field=name)

    @property
    def context_mode(self) -> ContextMode:
        present = [self._optional_present(name) for name in OPTIONAL_FIELDS]
        if not any(present):
            return ContextMode.MINIMAL
        if all(present):
            return ContextMode.MAXIMUM
        return ContextMode.PARTIAL

    def _optional_present(self, name: str) -> bool:
        value = getattr(self, name)
        if value is None:
            return False
        if isinstance(value, str):
            return value.strip() != ""
        return True

    def to_dict(self) -> dict:
        data = {name: getattr(self, name) for name in MANDATORY_FIELDS}
        for name in OPTIONAL_FIELDS:
            value = getattr(self, name)
            if isinstance(value, Enum):
                value = value.value
            data[name] = value
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "EmailSubmission":
        if not isinstance(data, dict):
            raise InvalidSubmission("submission body must be a JSON object")
        kwargs: dict = {}
        for name in MANDATORY_FIELDS:
            value = data.get(name)
            if value is None:
                raise InvalidSubmission(f"mandatory field {name} is missing or blank", field=name)
            kwargs[name] = str(value)
        for name in ("sender_gender", "recipient_gender",
                     "sender_native_language", "recipient_native_language"):
            value = data.get(name)
            kwargs[name] = str(value) if value is not None else None
        raw_hierarchy = data.get("hierarchy")
        if raw_hierarchy is not None:
            kwargs["hierarchy"] = _match_member(Hierarchy, "hierarchy", str(raw_hierarchy))
        raw_rel = data.get("relationship_type")
        if raw_rel is not None:
            kwargs["relationship_type"] = _match_member(
                RelationshipType, "relationship_type", str(raw_rel)
            )
        email = cls(**kwargs)
        email.validate()
        return email


# Unknown-enum errors surface as InvalidSubmission for submissions, keeping
# the REST error code set small.
def submission_from_dict(data: dict) -> EmailSubmission:
    try:
        return EmailSubmission.from_dict(data)
    except UnknownLabel as exc:
        raise InvalidSubmission(exc.message, field=exc.field) from exc
