"""Portal contract fidelity: the payloads the browser portal emits (recorded
by its test suite under frontend/recordings/) replay through the engine with
zero StageViolation errors, and the portal's taxonomy fixture matches what
the API serves.
"""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from crowdtone.api import create_app
from crowdtone.errors import StageViolation
from crowdtone.orchestrator import LogicalClock, Orchestrator
from crowdtone.scaffolding import Stage, advance, finalize, start_task
from crowdtone.tones import EmailSubmission

from .conftest import MINIMAL_EMAIL, worker

FRONTEND = Path(__file__).resolve().parent.parent / "frontend"


@pytest.fixture(scope="module")
def recording() -> dict:
    path = FRONTEND / "recordings" / "portal_payloads.json"
    assert path.exists(), "run `npm run record` in frontend/ to regenerate"
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture
def email(recording) -> EmailSubmission:
    return EmailSubmission.from_dict(dict(MINIMAL_EMAIL, body=recording["original_body"]))


def replay_scaffold(email: EmailSubmission, worker_id: str, payloads: list[dict]):
    state = start_task(email, worker_id)
    for payload in payloads:
        try:
            state = advance(state, payload)
        except StageViolation as exc:  # pragma: no cover - contract breach
            pytest.fail(f"portal payload rejected at {state.stage}: {exc}")
    assert state.stage is Stage.DONE
    return finalize(state)


def test_yes_path_recording_replays_clean(recording, email):
    outcome = replay_scaffold(email, "portal-yes", recording["yes_path"]["payloads"])
    assert outcome.verdict is True
    assert outcome.target_tone is None
    assert outcome.notes
    assert outcome.improved_text.strip() != email.body.strip()


def test_no_path_recording_replays_clean(recording, email):
    outcome = replay_scaffold(email, "portal-no", recording["no_path"]["payloads"])
    assert outcome.verdict is False
    assert outcome.target_tone is not None
    assert outcome.target_tone.intensity is not None
    assert len(outcome.draft_history) == 2


@pytest.mark.parametrize("iterations,key", [(2, "ballot_plain"), (3, "ballot_refined")])
def test_ballot_recordings_drive_full_pipeline(recording, email, iterations, key):
    orch = Orchestrator(clock=LogicalClock())
    task_id = orch.submit(email, {"iterations": iterations})
    # three scaffolds from the recorded portal sessions (third reuses the
    # no-path script under another worker id, as a third human would)
    scripts = [
        ("portal-yes", recording["yes_path"]["payloads"]),
        ("portal-no", recording["no_path"]["payloads"]),
        ("portal-no2", recording["no_path"]["payloads"]),
    ]
    for worker_id, payloads in scripts:
        assert orch.next_task(worker(worker_id)) is not None
        for payload in payloads:
            orch.submit_step(task_id, worker_id, payload)
    assert orch.status(task_id)["state"] == "pair_selected"

    ballot = recording[key]["payloads"][0]
    for i in range(3):
        voter = f"{recording[key]['worker_id']}-{i}"
        orch.next_task(worker(voter))
        orch.submit_step(task_id, voter, ballot)
    assert orch.status(task_id)["state"] == "complete"
    result = orch.result(task_id)
    assert len(set(result["audit"]["worker_ids"])) == 6
    if iterations == 3:
        assert result["improved_email"]["body"] == ballot["refined_text"]


def test_portal_taxonomy_fixture_matches_api():
    fixture = json.loads((FRONTEND / "fixtures" / "taxonomy.json").read_text(encoding="utf-8"))
    client = TestClient(create_app(Orchestrator()))
    live = client.get("/v1/taxonomy").json()
    assert fixture == live
    assert len(fixture["primaries"]) == 2
    assert len(fixture["secondaries"]) == 10
    assert len(fixture["intensities"]) == 3
