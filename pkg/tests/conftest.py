import pytest

from crowdtone.crowd import BotProfile
from crowdtone.orchestrator import LogicalClock, Orchestrator
from crowdtone.tones import EmailSubmission
from crowdtone.workers import WorkerProfile

MINIMAL_EMAIL = {
    "sender_relationship": "student",
    "recipient_relationship": "professor",
    "subject": "Need an extension",
    "body": "I need more time for the assignment! Give me an extension! I had a busy week.",
    "context_note": "The student missed the deadline and wants two more days.",
}

MAXIMAL_EMAIL = dict(
    MINIMAL_EMAIL,
    sender_gender="female",
    recipient_gender="male",
    sender_native_language="Spanish",
    recipient_native_language="English",
    hierarchy="senior",
    relationship_type="strangers",
)

PARTIAL_EMAIL = dict(MINIMAL_EMAIL, hierarchy="junior")


@pytest.fixture
def minimal_email() -> EmailSubmission:
    return EmailSubmission.from_dict(MINIMAL_EMAIL)


@pytest.fixture
def maximal_email() -> EmailSubmission:
    return EmailSubmission.from_dict(MAXIMAL_EMAIL)


@pytest.fixture
def orch() -> Orchestrator:
    return Orchestrator(clock=LogicalClock())


def worker(worker_id: str, rating: float = 0.99, locale: str = "US") -> WorkerProfile:
    return WorkerProfile(worker_id, rating, locale)


def bot_population(n: int = 8, yes_ratio: float = 0.4, seed: int = 0) -> list[BotProfile]:
    """Deterministic mixed population: verdict/tone/edit rules cycle."""
    edits = ("append_signoff", "soften_exclamations", "template_rewrite")
    bots = []
    for i in range(n):
        verdict = "always_yes" if (i * 7 + seed) % 10 < yes_ratio * 10 else "always_no"
        bots.append(
            BotProfile(
                worker_id=f"bot{seed}-{i:02d}",
                verdict_rule={"kind": verdict},
                tone_rule={"kind": "hash"},
                edit_rule={"kind": edits[i % 3]},
                latency_steps=i,
            )
        )
    return bots


def yes_path_payloads(text: str = "A noticeably better body.") -> list[dict]:
    return [
        {"kind": "current_tone", "tone": {"primary": "formal", "secondary": "serious", "intensity": "very"}},
        {"kind": "verdict", "value": True},
        {"kind": "scope_note", "notes": ["Greeting could be warmer"]},
        {"kind": "direct_improvement", "text": text},
    ]


def no_path_payloads(revision: str = "Revised body.", refinement: str = "Refined body.") -> list[dict]:
    return [
        {"kind": "current_tone", "tone": {"primary": "informal", "secondary": "enraged", "intensity": None}},
        {"kind": "verdict", "value": False},
        {"kind": "target_tone", "tone": {"primary": "formal", "secondary": "courteous/respectful/polite", "intensity": "very"}},
        {"kind": "improvement_list", "items": ["Ask, do not demand", "Add a greeting"]},
        {"kind": "revision", "text": revision},
        {"kind": "refinement", "text": refinement},
    ]


def drive_scaffolds(orch: Orchestrator, task_id: str, scripts: dict[str, list[dict]]):
    """Assign and run the given worker->payloads scripts against a task."""
    for worker_id, payloads in scripts.items():
        assignment = orch.next_task(worker(worker_id))
        assert assignment is not None and assignment.email_ref == task_id
        for payload in payloads:
            orch.submit_step(task_id, worker_id, payload)
