"""Phase-2 consensus: pair selection, three-worker ballot, result composition.

Phase A reduces the three improved versions to two: majority verdict wins
when the yes/no verdicts split 2-1; on a unanimous verdict the two versions
whose tone tuples agree most (per the weighted similarity metric) go
forward, comparing target tones after a unanimous "no" and current tones
after a unanimous "yes". Phase B is a plain majority ballot over the pair,
optionally carrying one more refinement pass per voter. Everything here is
a deterministic pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import ArityError, DuplicateWorker, WorkerOverlap
from .scaffolding import ScaffoldOutcome
from .tones import EmailSubmission, ToneTuple, tone_similarity


class PairRationale(str, Enum):
    MAJORITY_YES = "majority_yes"
    MAJORITY_NO = "majority_no"
    UNANIMOUS_SIMILARITY = "unanimous_similarity"


class Choice(str, Enum):
    A = "a"
    B = "b"


class Margin(str, Enum):
    TWO_OF_THREE = "two_of_three"
    UNANIMOUS = "unanimous"


@dataclass(frozen=True)
class CandidatePair:
    """The two improved versions forwarded for the final ballot."""

    a: ScaffoldOutcome
    b: ScaffoldOutcome
    rationale: PairRationale
    similarity: int | None = None

    def to_dict(self) -> dict:
        return {
            "a": self.a.to_dict(),
            "b": self.b.to_dict(),
            "rationale": self.rationale.value,
            "similarity": self.similarity,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CandidatePair":
        return cls(
            a=ScaffoldOutcome.from_dict(data["a"]),
            b=ScaffoldOutcome.from_dict(data["b"]),
            rationale=PairRationale(data["rationale"]),
            similarity=data.get("similarity"),
        )


@dataclass(frozen=True)
class Ballot:
    """One consensus worker's vote, with their refinement when enabled."""

    worker_id: str
    choice: Choice
    refined_text: str | None = None
    completed_at: int = 0

    def to_dict(self) -> dict:
        return {
            "worker_id": self.worker_id,
            "choice": self.choice.value,
            "refined_text": self.refined_text,
            "completed_at": self.completed_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Ballot":
        return cls(
            worker_id=data["worker_id"],
            choice=Choice(data["choice"]),
            refined_text=data.get("refined_text"),
            completed_at=data.get("completed_at", 0),
        )


@dataclass(frozen=True)
class FinalSelection:
    winner: Choice
    margin: Margin
    final_text: str
    alternates: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "winner": self.winner.value,
            "margin": self.margin.value,
            "final_text": self.final_text,
            "alternates": list(self.alternates),
        }


def _ordered(outcomes) -> list[ScaffoldOutcome]:
    return sorted(outcomes, key=lambda o: (o.completed_at, o.worker_id))


def select_pair(outcomes: list[ScaffoldOutcome]) -> CandidatePair:
    """Phase A: pick the two versions that go forward to the ballot.

    Pair ordering is by completion: ``a`` finished before ``b``. Similarity
    ties on unanimous verdicts break toward the earliest-completed pair.
    """
    if len(outcomes) != 3:
        raise ArityError(f"phase A needs exactly 3 outcomes, got {len(outcomes)}")
    if len({o.worker_id for o in outcomes}) != 3:
        raise DuplicateWorker("scaffold outcomes must come from three distinct workers")

    ordered = _ordered(outcomes)
    yes = [o for o in ordered if o.verdict]
    no = [o for o in ordered if not o.verdict]

    if len(yes) == 2:
        return CandidatePair(yes[0], yes[1], PairRationale.MAJORITY_YES)
    if len(no) == 2:
        return CandidatePair(no[0], no[1], PairRationale.MAJORITY_NO)

    # unanimous verdict: compare target tones after "no", current tones after "yes"
    unanimous_no = len(no) == 3

    def compared(outcome: ScaffoldOutcome) -> ToneTuple:
        return outcome.target_tone if unanimous_no else outcome.current_tone  # type: ignore[return-value]

    best: tuple[ScaffoldOutcome, ScaffoldOutcome] | None = None
    best_score = -1
    for first, second in combinations(ordered, 2):
        score = tone_similarity(compared(first), compared(second))
        if score > best_score:
            best = (first, second)
            best_score = score
    assert best is not None
    return CandidatePair(best[0], best[1], PairRationale.UNANIMOUS_SIMILARITY, best_score)


def tally(
    ballots: list[Ballot],
    pair: CandidatePair,
    scaffold_worker_ids: set[str] | None = None,
) -> FinalSelection:
    """Phase B: majority vote over the pair, 2-1 or 3-0.

    With refinement enabled (all ballots carry refined text), the final text
    is the earliest-completed majority ballot's refinement and the remaining
    majority refinements become alternates; otherwise the winning version's
    improved text stands. ``scaffold_worker_ids`` widens the overlap check to
    all three phase-1 authors, not just the pair's.
    """
    if len(ballots) != 3:
        raise ArityError(f"phase B needs exactly 3 ballots, got {len(ballots)}")
    if len({b.worker_id for b in ballots}) != 3:
        raise DuplicateWorker("ballots must come from three distinct workers")
    authors = scaffold_worker_ids or {pair.a.worker_id, pair.b.worker_id}
    overlap = {b.worker_id for b in ballots} & set(authors)
    if overlap:
        raise WorkerOverlap(
            f"ballot workers also authored scaffold outcomes: {sorted(overlap)}"
        )

    refined_flags = [b.refined_text is not None for b in ballots]
    if any(refined_flags) and not all(refined_flags):
        raise ValueError("ballots disagree on refinement presence")
    refinement_enabled = all(refined_flags)

    ordered = sorted(ballots, key=lambda b: (b.completed_at, b.worker_id))
    a_votes = sum(1 for b in ordered if b.choice is Choice.A)
    winner = Choice.A if a_votes >= 2 else Choice.B
    margin = Margin.UNANIMOUS if a_votes in (0, 3) else Margin.TWO_OF_THREE

    majority = [b for b in ordered if b.choice is winner]
    if refinement_enabled:
        final_text = majority[0].refined_text or ""
        alternates = tuple(b.refined_text or "" for b in majority[1:])
    else:
        winning_outcome = pair.a if winner is Choice.A else pair.b
        final_text = winning_outcome.improved_text
        alternates = ()
    return FinalSelection(winner, margin, final_text, alternates)


def compose_result(
    email: EmailSubmission,
    outcomes: list[ScaffoldOutcome],
    pair: CandidatePair,
    selection: FinalSelection,
    ballots: list[Ballot],
    task_id: str = "",
    event_count: int = 0,
) -> dict:
    """Assemble the output JSON document for a completed pipeline.

    Tone metadata comes from the final text's lineage author: the scaffold
    worker whose version won the ballot. Their verdict decides whether a
    target tone block appears.
    """
    lineage = pair.a if selection.winner is Choice.A else pair.b
    original = lineage.current_tone
    result: dict = {
        "task_id": task_id,
        "original_tone": {
            "primary": original.primary.value,
            "secondary": original.secondary.value,
            "intensity": original.intensity.value if original.intensity else "unrated",
        },
        "tone_was_correct": lineage.verdict,
    }
    if not lineage.verdict and lineage.target_tone is not None:
        result["target_tone"] = lineage.target_tone.to_dict()
    result["improved_email"] = {"subject": email.subject, "body": selection.final_text}
    result["notes"] = list(lineage.notes)
    result["alternates"] = list(selection.alternates)
    result["audit"] = {
        "worker_ids": [o.worker_id for o in _ordered(outcomes)]
        + [b.worker_id for b in sorted(ballots, key=lambda b: (b.completed_at, b.worker_id))],
        "pair_rationale": pair.rationale.value,
        "margin": selection.margin.value,
        "event_count": event_count,
    }
    return result
