"""Worker sources: deterministic simulated bots and a mock platform client.

Bots make the whole protocol verifiable at desk scale: every rule is a pure
function of (bot, email, seed), so a simulation run is reproducible byte for
byte. The mock platform client models the post-task/fetch-responses/expire
seam an external crowd service would occupy, fed from canned fixtures, so
the integration path is testable without network access.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from string import Template

from .errors import InsufficientWorkers, InvalidPayload, UnqualifiedWorker
from .events import canonical_json
from .orchestrator import (
    BALLOT,
    SCAFFOLD,
    LogicalClock,
    Orchestrator,
    PipelineConfig,
    PipelineState,
)
from .tones import EmailSubmission, Intensity, PrimaryTone, SecondaryTone, ToneTuple
from .workers import QualificationPolicy, WorkerProfile, qualifies

__all__ = [
    "BotProfile",
    "MockPlatformClient",
    "SimulationReport",
    "WorkerProfile",
    "QualificationPolicy",
    "qualifies",
    "load_bots",
    "load_lexicon",
    "run_simulation",
    "sim_worker_respond",
]

_PRIMARIES = list(PrimaryTone)
_SECONDARIES = list(SecondaryTone)
_INTENSITIES = list(Intensity)

_SIGNOFFS = (
    "Thank you for your time and consideration.\nBest regards",
    "I appreciate you taking the time to read this.\nKind regards",
    "Thank you very much for considering this.\nSincerely",
    "With thanks for your attention.\nRespectfully",
)

_NOTE_POOL = (
    "The greeting could be warmer",
    "The request should be phrased more politely",
    "The closing line feels abrupt",
    "Some wording reads as demanding",
    "The first sentence could acknowledge the recipient",
    "Exclamation marks make the tone pushy",
    "A thank-you near the end would soften the ask",
    "The subject matter deserves a more respectful register",
)


def _stable_int(*parts) -> int:
    joined = "\x1f".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(joined.encode("utf-8")).digest()[:8], "big")


@dataclass(frozen=True)
class BotProfile:
    """A deterministic simulated worker.

    verdict_rule: always_yes | always_no | keyword (no iff a keyword occurs)
    tone_rule:    hash | fixed | lexicon (first matching keyword wins)
    edit_rule:    append_signoff | soften_exclamations | template_rewrite
    latency_steps orders bots inside a simulation pass.
    """

    worker_id: str
    approval_rating: float = 0.99
    locale: str = "US"
    verdict_rule: dict = field(default_factory=lambda: {"kind": "always_no"})
    tone_rule: dict = field(default_factory=lambda: {"kind": "hash"})
    edit_rule: dict = field(default_factory=lambda: {"kind": "append_signoff"})
    latency_steps: int = 0

    @property
    def profile(self) -> WorkerProfile:
        return WorkerProfile(self.worker_id, self.approval_rating, self.locale)

    @classmethod
    def from_dict(cls, data: dict) -> "BotProfile":
        return cls(
            worker_id=str(data["worker_id"]),
            approval_rating=float(data.get("approval_rating", 0.99)),
            locale=str(data.get("locale", "US")),
            verdict_rule=dict(data.get("verdict_rule", {"kind": "always_no"})),
            tone_rule=dict(data.get("tone_rule", {"kind": "hash"})),
            edit_rule=dict(data.get("edit_rule", {"kind": "append_signoff"})),
            latency_steps=int(data.get("latency_steps", 0)),
        )

    def to_dict(self) -> dict:
        return {
            "worker_id": self.worker_id,
            "approval_rating": self.approval_rating,
            "locale": self.locale,
            "verdict_rule": self.verdict_rule,
            "tone_rule": self.tone_rule,
            "edit_rule": self.edit_rule,
            "latency_steps": self.latency_steps,
        }


def load_lexicon(path: str | Path) -> list[dict]:
    """Parse a plain-text keyword-to-tone map (tab-separated columns)."""
    entries = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("\t") if c.strip()]
        if len(cols) < 3:
            raise InvalidPayload(f"lexicon line needs keyword, primary, secondary: {raw!r}")
        entry = {"keyword": cols[0], "primary": cols[1], "secondary": cols[2]}
        if len(cols) > 3:
            entry["intensity"] = cols[3]
        entries.append(entry)
    return entries


def load_bots(path: str | Path) -> list[BotProfile]:
    """Load a bot population file, resolving lexicon file references."""
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    bots = []
    for item in data:
        for rule_key in ("verdict_rule", "tone_rule"):
            rule = item.get(rule_key)
            if isinstance(rule, dict) and "file" in rule:
                rule = dict(rule)
                rule["entries"] = load_lexicon(path.parent / rule.pop("file"))
                item[rule_key] = rule
        edit = item.get("edit_rule")
        if isinstance(edit, dict) and "file" in edit:
            edit = dict(edit)
            edit["template"] = (path.parent / edit.pop("file")).read_text(encoding="utf-8")
            item["edit_rule"] = edit
        bots.append(BotProfile.from_dict(item))
    return bots


# ----------------------------------------------------------------------
# bot behavior (pure in (bot, email, seed))
# ----------------------------------------------------------------------


def _bot_verdict(bot: BotProfile, email: EmailSubmission) -> bool:
    rule = bot.verdict_rule
    kind = rule.get("kind", "always_no")
    if kind == "always_yes":
        return True
    if kind == "always_no":
        return False
    if kind == "keyword":
        haystack = f"{email.subject}\n{email.body}".lower()
        keywords = rule.get("keywords") or [e["keyword"] for e in rule.get("entries", [])]
        return not any(str(k).lower() in haystack for k in keywords)
    raise InvalidPayload(f"unknown verdict rule {kind!r}")


def _bot_tone(bot: BotProfile, email: EmailSubmission, seed: int, role: str) -> ToneTuple:
    """role='current' may leave intensity unrated; role='target' never does."""
    rule = bot.tone_rule
    kind = rule.get("kind", "hash")
    primary = secondary = intensity = None
    if kind == "fixed":
        primary = PrimaryTone(rule["primary"])
        secondary = SecondaryTone(rule["secondary"])
        if rule.get("intensity"):
            intensity = Intensity(rule["intensity"])
    elif kind == "lexicon":
        haystack = f"{email.subject}\n{email.body}".lower()
        for entry in rule.get("entries", []):
            if str(entry["keyword"]).lower() in haystack:
                primary = PrimaryTone(entry["primary"])
                secondary = SecondaryTone(entry["secondary"])
                if entry.get("intensity"):
                    intensity = Intensity(entry["intensity"])
                break
    elif kind != "hash":
        raise InvalidPayload(f"unknown tone rule {kind!r}")

    h = _stable_int(bot.worker_id, seed, role, email.body)
    if primary is None:
        primary = _PRIMARIES[h % 2]
        secondary = _SECONDARIES[(h >> 4) % 10]
    if role == "target":
        if intensity is None:
            intensity = _INTENSITIES[(h >> 8) % 3]
    elif intensity is None and (h >> 12) % 3 > 0:
        # current-tone ratings are optional; leave a third of them unrated
        intensity = _INTENSITIES[(h >> 16) % 3]
    return ToneTuple(primary, secondary, intensity)


def _bot_edit(bot: BotProfile, email: EmailSubmission, text: str, seed: int, salt: str) -> str:
    rule = bot.edit_rule
    kind = rule.get("kind", "append_signoff")
    h = _stable_int(bot.worker_id, seed, salt, text)
    if kind == "append_signoff":
        edited = text.rstrip() + "\n\n" + _SIGNOFFS[h % len(_SIGNOFFS)]
    elif kind == "soften_exclamations":
        edited = text.replace("!", ".")
    elif kind == "template_rewrite":
        template = rule.get("template")
        if not template:
            pkg = resources.files(__package__) / "resources" / "templates"
            template = (pkg / "polite_rewrite.txt").read_text(encoding="utf-8")
        edited = Template(template).safe_substitute(
            body=text.strip(), subject=email.subject, context=email.context_note
        )
    else:
        raise InvalidPayload(f"unknown edit rule {kind!r}")
    # every draft must differ from the original body
    if edited.strip() == email.body.strip() or edited.strip() == "":
        edited = edited.rstrip() + "\n\n" + _SIGNOFFS[(h >> 8) % len(_SIGNOFFS)]
    return edited


def _bot_notes(bot: BotProfile, seed: int, email: EmailSubmission, salt: str) -> list[str]:
    h = _stable_int(bot.worker_id, seed, salt, email.body)
    count = 1 + h % 3
    return [_NOTE_POOL[(h >> (4 * i)) % len(_NOTE_POOL)] for i in range(count)]


def sim_worker_respond(bot: BotProfile, assignment: dict, email: EmailSubmission, seed: int) -> list[dict]:
    """Produce the bot's full ordered payload sequence for one assignment.

    ``assignment`` is the task document from the orchestrator; for ballots
    it carries the candidate pair and whether refinement is required.
    """
    if assignment["kind"] == SCAFFOLD:
        current = _bot_tone(bot, email, seed, "current")
        verdict = _bot_verdict(bot, email)
        steps: list[dict] = [
            {"kind": "current_tone", "tone": current.to_dict()},
            {"kind": "verdict", "value": verdict},
        ]
        if verdict:
            steps.append({"kind": "scope_note", "notes": _bot_notes(bot, seed, email, "scope")})
            steps.append(
                {
                    "kind": "direct_improvement",
                    "text": _bot_edit(bot, email, email.body, seed, "improve"),
                }
            )
        else:
            target = _bot_tone(bot, email, seed, "target")
            revision = _bot_edit(bot, email, email.body, seed, "revision")
            steps.append({"kind": "target_tone", "tone": target.to_dict()})
            steps.append(
                {"kind": "improvement_list", "items": _bot_notes(bot, seed, email, "items")}
            )
            steps.append({"kind": "revision", "text": revision})
            steps.append(
                {"kind": "refinement", "text": _bot_edit(bot, email, revision, seed, "refine")}
            )
        return steps

    # ballot
    pair = assignment["pair"]
    h = _stable_int(bot.worker_id, seed, "ballot", pair["a"]["body"], pair["b"]["body"])
    choice = "a" if h % 2 == 0 else "b"
    payload = {"kind": BALLOT, "choice": choice}
    if assignment.get("refinement_required"):
        chosen = pair[choice]["body"]
        payload["refined_text"] = _bot_edit(bot, email, chosen, seed, "ballot-refine")
    return [payload]


# ----------------------------------------------------------------------
# simulation runner
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SimulationReport:
    """Deterministic digest of a batch run, identical bytes per (inputs, seed)."""

    seed: int
    config: dict
    bot_count: int
    per_email: tuple[dict, ...]
    aggregate: dict

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "bot_count": self.bot_count,
            "per_email": list(self.per_email),
            "aggregate": self.aggregate,
        }

    def canonical(self) -> str:
        return canonical_json(self.to_dict())


def run_simulation(
    emails: list[EmailSubmission | dict],
    bots: list[BotProfile],
    config: PipelineConfig | dict | None = None,
    seed: int = 0,
    orchestrator: Orchestrator | None = None,
) -> SimulationReport:
    """Drive every email through the full pipeline with simulated workers.

    Bots are handed work in latency order, one claim per pass. Requires at
    least six bots that pass the run's qualification policy.
    """
    if isinstance(config, dict) or config is None:
        config = PipelineConfig.from_dict(config)
    parsed = [e if isinstance(e, EmailSubmission) else EmailSubmission.from_dict(e) for e in emails]
    qualified = [b for b in bots if qualifies(b.profile, config.qualification_policy)]
    if len(qualified) < 6:
        raise InsufficientWorkers(
            f"simulation needs >=6 qualified bots, have {len(qualified)}"
        )

    orch = orchestrator or Orchestrator(clock=LogicalClock())
    email_by_task: dict[str, EmailSubmission] = {}
    task_ids = []
    for email in parsed:
        task_id = orch.submit(email, config)
        task_ids.append(task_id)
        email_by_task[task_id] = email

    ordered = sorted(bots, key=lambda b: (b.latency_steps, b.worker_id))
    pending = set(task_ids)
    while pending:
        progress = False
        for bot in ordered:
            try:
                assignment = orch.next_task(bot.profile)
            except UnqualifiedWorker:
                continue
            if assignment is None:
                continue
            doc = orch.task_document(assignment.email_ref, bot.worker_id)
            email = email_by_task[assignment.email_ref]
            for payload in sim_worker_respond(bot, doc, email, seed):
                orch.submit_step(assignment.email_ref, bot.worker_id, payload)
            progress = True
        pending = {
            t for t in task_ids if orch.status(t)["state"] != PipelineState.COMPLETE.value
        }
        if pending and not progress:
            break  # stalled: remaining emails are reported as failed

    state = orch.state_dict()
    per_email = []
    margins: dict[str, int] = {}
    rationales: dict[str, int] = {}
    completed = failed = 0
    for task_id in task_ids:
        task = state["tasks"][task_id]
        outcomes = task["outcomes"]
        row = {
            "task_id": task_id,
            "state": task["state"] if task["state"] == "complete" else "failed",
            "last_state": task["state"],
            "context_mode": email_by_task[task_id].context_mode.value,
            "verdict_pattern": "".join("Y" if o["verdict"] else "N" for o in outcomes),
            "margin": None,
            "pair_rationale": None,
            "worker_ids": [],
        }
        if task["result"] is not None:
            audit = task["result"]["audit"]
            row["margin"] = audit["margin"]
            row["pair_rationale"] = audit["pair_rationale"]
            row["worker_ids"] = list(audit["worker_ids"])
            margins[audit["margin"]] = margins.get(audit["margin"], 0) + 1
            rationales[audit["pair_rationale"]] = rationales.get(audit["pair_rationale"], 0) + 1
            completed += 1
        else:
            failed += 1
        per_email.append(row)

    report = SimulationReport(
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
    return report


# ----------------------------------------------------------------------
# mock external platform client
# ----------------------------------------------------------------------


class MockPlatformClient:
    """Models an external crowd platform without any network.

    Canned fixtures are queues of worker responses per task kind:
    ``{"scaffold": [{"worker_id": ..., "payloads": [...]}, ...], "ballot": [...]}``.
    post_task parks a task document, fetch_responses marries posted tasks to
    the next canned response of the matching kind, expire withdraws a task.
    Safe for concurrent polling.
    """

    def __init__(self, fixtures: dict | str | Path):
        if not isinstance(fixtures, dict):
            fixtures = json.loads(Path(fixtures).read_text(encoding="utf-8"))
        import threading

        self._lock = threading.Lock()
        self._queues = {
            SCAFFOLD: list(fixtures.get(SCAFFOLD, [])),
            BALLOT: list(fixtures.get(BALLOT, [])),
        }
        self._posted: dict[str, dict] = {}
        self._counter = 0

    def post_task(self, task_document: dict) -> str:
        with self._lock:
            self._counter += 1
            hit_id = f"hit-{self._counter:05d}"
            self._posted[hit_id] = task_document
            return hit_id

    def fetch_responses(self) -> list[dict]:
        """Collect responses for posted tasks; each task answers at most once."""
        out = []
        with self._lock:
            for hit_id in sorted(self._posted):
                doc = self._posted[hit_id]
                queue = self._queues[doc["kind"]]
                if not queue:
                    continue
                canned = queue.pop(0)
                out.append(
                    {
                        "hit_id": hit_id,
                        "task_id": doc["email_ref"],
                        "worker_id": canned["worker_id"],
                        "payloads": canned["payloads"],
                    }
                )
            for item in out:
                self._posted.pop(item["hit_id"], None)
        return out

    def expire(self, hit_id: str) -> None:
        with self._lock:
            self._posted.pop(hit_id, None)


def run_via_mock_client(
    orch: Orchestrator,
    client: MockPlatformClient,
    profiles: dict[str, WorkerProfile],
    max_cycles: int = 50,
) -> None:
    """Pump open work through the mock platform seam until idle.

    Posts one hit per open slot, fetches canned responses, claims the slot
    for the responding worker and submits their payloads. Fixtures must line
    up with the submitted emails (responses are consumed in task order).
    """
    outstanding: dict[tuple[str, str], int] = {}
    for _ in range(max_cycles):
        for status in orch.list_tasks():
            slots = orch.open_slots(status["task_id"])
            if not slots["kind"]:
                continue
            key = (status["task_id"], slots["kind"])
            for _n in range(slots["open"] - outstanding.get(key, 0)):
                client.post_task({"email_ref": status["task_id"], "kind": slots["kind"]})
                outstanding[key] = outstanding.get(key, 0) + 1
        responses = client.fetch_responses()
        if not responses:
            return
        for response in responses:
            worker = profiles[response["worker_id"]]
            assignment = orch.next_task(worker)
            if assignment is None or assignment.email_ref != response["task_id"]:
                raise InvalidPayload(
                    f"fixture response for {response['task_id']} does not match "
                    f"assignment {assignment.email_ref if assignment else None}"
                )
            outstanding[(response["task_id"], assignment.kind)] -= 1
            for payload in response["payloads"]:
                orch.submit_step(assignment.email_ref, worker.worker_id, payload)
