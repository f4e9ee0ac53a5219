import random

import pytest

from crowdtone.errors import (
    EmptyPayload,
    InvalidPayload,
    InvalidSubmission,
    NotDone,
    StageViolation,
    TargetToneMissingIntensity,
    UnchangedText,
)
from crowdtone.scaffolding import (
    EXPECTED_KIND,
    Stage,
    advance,
    finalize,
    instructions,
    start_task,
)
from crowdtone.tones import EmailSubmission

from .conftest import MINIMAL_EMAIL, no_path_payloads, yes_path_payloads


@pytest.fixture
def email():
    return EmailSubmission.from_dict(MINIMAL_EMAIL)


@pytest.fixture
def fresh(email):
    return start_task(email, "w1", email_ref="t1")


def walk(state, payloads):
    for payload in payloads:
        state = advance(state, payload)
    return state


def test_start_task_initial_stage(fresh):
    assert fresh.stage is Stage.AWAIT_CURRENT_TONE
    assert fresh.drafts == ()


def test_start_task_rejects_invalid_email():
    bad = dict(MINIMAL_EMAIL, body=" ")
    with pytest.raises(InvalidSubmission):
        start_task(EmailSubmission(**{**MINIMAL_EMAIL, "body": " "}), "w1")
    with pytest.raises(InvalidSubmission):
        EmailSubmission.from_dict(bad)


def test_verdict_before_tone_is_stage_violation(fresh):
    with pytest.raises(StageViolation) as exc:
        advance(fresh, {"kind": "verdict", "value": True})
    assert exc.value.expected == "current_tone"
    assert exc.value.got == "verdict"


def test_yes_path_walk(fresh):
    state = walk(fresh, yes_path_payloads())
    assert state.stage is Stage.DONE
    assert state.verdict is True
    assert state.target_tone is None
    outcome = finalize(state, completed_at=9)
    assert outcome.verdict is True
    assert outcome.target_tone is None
    assert outcome.notes == ("Greeting could be warmer",)
    assert outcome.improved_text == "A noticeably better body."
    assert outcome.completed_at == 9


def test_no_path_walk(fresh):
    state = walk(fresh, no_path_payloads())
    assert state.stage is Stage.DONE
    assert state.verdict is False
    assert state.drafts == ("Revised body.", "Refined body.")
    outcome = finalize(state)
    assert outcome.verdict is False
    assert outcome.target_tone is not None
    assert outcome.target_tone.intensity is not None
    assert outcome.notes == ("Ask, do not demand", "Add a greeting")
    assert outcome.improved_text == "Refined body."
    assert outcome.draft_history == ("Revised body.", "Refined body.")


def test_verdict_routing(fresh):
    at_verdict = advance(fresh, yes_path_payloads()[0])
    assert advance(at_verdict, {"kind": "verdict", "value": True}).stage is Stage.YES_AWAIT_SCOPE
    assert advance(at_verdict, {"kind": "verdict", "value": False}).stage is Stage.NO_AWAIT_TARGET_TONE


def test_empty_scope_note(fresh):
    state = walk(fresh, yes_path_payloads()[:2])
    with pytest.raises(EmptyPayload):
        advance(state, {"kind": "scope_note", "notes": []})
    with pytest.raises(EmptyPayload):
        advance(state, {"kind": "scope_note", "notes": ["  "]})


def test_empty_improvement_list(fresh):
    state = walk(fresh, no_path_payloads()[:3])
    with pytest.raises(EmptyPayload):
        advance(state, {"kind": "improvement_list", "items": []})


def test_blank_edit_text(fresh):
    state = walk(fresh, yes_path_payloads()[:3])
    with pytest.raises(EmptyPayload):
        advance(state, {"kind": "direct_improvement", "text": "   "})


def test_unchanged_text_rejected(fresh, email):
    state = walk(fresh, yes_path_payloads()[:3])
    with pytest.raises(UnchangedText):
        advance(state, {"kind": "direct_improvement", "text": email.body})
    # trailing whitespace does not count as a change
    with pytest.raises(UnchangedText):
        advance(state, {"kind": "direct_improvement", "text": email.body + "  \n"})


def test_target_tone_requires_intensity(fresh):
    state = walk(fresh, no_path_payloads()[:2])
    with pytest.raises(TargetToneMissingIntensity):
        advance(state, {"kind": "target_tone",
                        "tone": {"primary": "formal", "secondary": "serious", "intensity": None}})


def test_unknown_kind(fresh):
    with pytest.raises(InvalidPayload):
        advance(fresh, {"kind": "grade_essay", "text": "x"})
    with pytest.raises(InvalidPayload):
        advance(fresh, {"no": "kind"})


def test_no_step_after_done(fresh):
    state = walk(fresh, yes_path_payloads())
    with pytest.raises(StageViolation):
        advance(state, {"kind": "refinement", "text": "more"})


def test_finalize_requires_done(fresh):
    state = walk(fresh, yes_path_payloads()[:2])
    with pytest.raises(NotDone):
        finalize(state)


def test_current_tone_intensity_optional(fresh):
    state = advance(fresh, {"kind": "current_tone",
                            "tone": {"primary": "formal", "secondary": "serious"}})
    assert state.current_tone.intensity is None


def test_state_roundtrips_through_dict(fresh):
    state = walk(fresh, no_path_payloads()[:4])
    from crowdtone.scaffolding import ScaffoldTaskState

    assert ScaffoldTaskState.from_dict(state.to_dict()) == state


def random_script(rng: random.Random) -> tuple[bool, list[dict]]:
    """A random legal worker script; returns (verdict, payloads)."""
    verdict = rng.random() < 0.5
    tone = {
        "primary": rng.choice(["formal", "informal"]),
        "secondary": rng.choice(["serious", "confident", "enraged"]),
        "intensity": rng.choice(["very", "quite close", "somewhat", None]),
    }
    steps = [{"kind": "current_tone", "tone": tone}, {"kind": "verdict", "value": verdict}]
    if verdict:
        steps.append({"kind": "scope_note",
                      "notes": [f"note {rng.randrange(100)}" for _ in range(rng.randint(1, 3))]})
        steps.append({"kind": "direct_improvement", "text": f"better body {rng.randrange(10**6)}"})
    else:
        steps.append({"kind": "target_tone",
                      "tone": {"primary": "formal", "secondary": "serious",
                               "intensity": rng.choice(["very", "quite close", "somewhat"])}})
        steps.append({"kind": "improvement_list",
                      "items": [f"item {rng.randrange(100)}" for _ in range(rng.randint(1, 4))]})
        steps.append({"kind": "revision", "text": f"revision {rng.randrange(10**6)}"})
        steps.append({"kind": "refinement", "text": f"refinement {rng.randrange(10**6)}"})
    return verdict, steps


def test_path_length_property(email):
    # yes-verdict tasks take exactly 2 post-verdict steps, no-verdict exactly 4
    rng = random.Random(20240901)
    for case in range(500):
        verdict, steps = random_script(rng)
        state = start_task(email, f"w{case}")
        post_verdict = 0
        seen_verdict = False
        for payload in steps:
            state = advance(state, payload)
            if seen_verdict:
                post_verdict += 1
            if payload["kind"] == "verdict":
                seen_verdict = True
        assert state.stage is Stage.DONE
        assert post_verdict == (2 if verdict else 4)
        outcome = finalize(state)
        assert outcome.improved_text == steps[-1]["text"]


ALL_KINDS = list(EXPECTED_KIND.values())


def legal_payload_for(kind: str, rng: random.Random) -> dict:
    if kind == "current_tone":
        return {"kind": kind, "tone": {"primary": "formal", "secondary": "serious"}}
    if kind == "verdict":
        return {"kind": kind, "value": rng.random() < 0.5}
    if kind == "scope_note":
        return {"kind": kind, "notes": ["a note"]}
    if kind == "improvement_list":
        return {"kind": kind, "items": ["an item"]}
    if kind == "target_tone":
        return {"kind": kind,
                "tone": {"primary": "formal", "secondary": "serious", "intensity": "very"}}
    return {"kind": kind, "text": f"text {rng.randrange(10**9)}"}


def test_reachability_fuzz(email):
    # random step sequences reach Done only along the two legal paths
    rng = random.Random(42)
    yes_order = ["current_tone", "verdict", "scope_note", "direct_improvement"]
    no_order = ["current_tone", "verdict", "target_tone", "improvement_list", "revision", "refinement"]
    for _ in range(300):
        state = start_task(email, "w")
        taken = []
        for _ in range(rng.randint(1, 8)):
            kind = rng.choice(ALL_KINDS)
            payload = legal_payload_for(kind, rng)
            try:
                state = advance(state, payload)
                taken.append(kind if kind != "verdict" else f"verdict:{payload['value']}")
            except StageViolation:
                pass
            if state.stage is Stage.DONE:
                break
        if state.stage is Stage.DONE:
            kinds = [t.split(":")[0] for t in taken]
            assert kinds in (yes_order, no_order)
            if kinds == yes_order:
                assert taken[1] == "verdict:True"
            else:
                assert taken[1] == "verdict:False"


def test_instructions_render(email):
    text = instructions(Stage.AWAIT_CURRENT_TONE, email)
    assert "recipient" in text
    assert email.recipient_relationship in text
    for stage in Stage:
        assert instructions(stage, email).strip()
