import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crowdtone.errors import InvalidSubmission, UnknownLabel
from crowdtone.tones import (
    ContextMode,
    EmailSubmission,
    Intensity,
    PrimaryTone,
    SecondaryTone,
    ToneTuple,
    parse_tone,
    taxonomy,
    tone_similarity,
)

from .conftest import MAXIMAL_EMAIL, MINIMAL_EMAIL, PARTIAL_EMAIL

PRIMARIES = ["formal", "informal"]
SECONDARIES = [
    "appreciative/thankful",
    "confident",
    "courteous/respectful/polite",
    "emotional/persuasive",
    "enthusiastic/cheerful",
    "light/humorous/friendliness",
    "regretful/sorrowful",
    "serious",
    "cold/unfriendly",
    "enraged",
]
INTENSITIES = ["very", "quite close", "somewhat"]


def test_taxonomy_lists_exact():
    tax = taxonomy()
    assert tax["primaries"] == PRIMARIES
    assert tax["secondaries"] == SECONDARIES
    assert tax["intensities"] == INTENSITIES


def test_taxonomy_first_secondary():
    assert taxonomy()["secondaries"][0] == "appreciative/thankful"


def test_taxonomy_pure_constant():
    assert taxonomy() == taxonomy()


def test_enum_cardinality():
    assert len(PrimaryTone) == 2
    assert len(SecondaryTone) == 10
    assert len(Intensity) == 3


def test_intensity_total_order():
    assert Intensity.VERY > Intensity.QUITE_CLOSE > Intensity.SOMEWHAT


def test_parse_tone_basic():
    tone = parse_tone("formal", "serious")
    assert tone == ToneTuple(PrimaryTone.FORMAL, SecondaryTone.SERIOUS, None)


def test_parse_tone_case_folding():
    tone = parse_tone("FORMAL", "Appreciative/Thankful", "very")
    assert tone.primary is PrimaryTone.FORMAL
    assert tone.secondary is SecondaryTone.APPRECIATIVE_THANKFUL
    assert tone.intensity is Intensity.VERY


def test_parse_tone_unknown_primary():
    with pytest.raises(UnknownLabel) as exc:
        parse_tone("casual", "serious")
    assert exc.value.field == "primary"
    assert exc.value.value == "casual"


def test_parse_tone_unknown_secondary_and_intensity():
    with pytest.raises(UnknownLabel):
        parse_tone("formal", "sarcastic")
    with pytest.raises(UnknownLabel):
        parse_tone("formal", "serious", "extremely")


def test_parse_roundtrip_exhaustive():
    # canonical print -> parse is the identity on all 2 x 10 x (3+1) tuples
    for p, s, i in itertools.product(PRIMARIES, SECONDARIES, INTENSITIES + [None]):
        tone = parse_tone(p, s, i)
        assert tone.primary.value == p
        assert tone.secondary.value == s
        assert (tone.intensity.value if tone.intensity else None) == i
        again = ToneTuple.from_dict(tone.to_dict())
        assert again == tone


def test_similarity_frozen_examples():
    a = parse_tone("formal", "serious", "very")
    assert tone_similarity(a, a) == 7
    assert tone_similarity(parse_tone("formal", "serious"), parse_tone("informal", "serious")) == 2
    assert (
        tone_similarity(
            parse_tone("formal", "confident", "very"),
            parse_tone("formal", "serious", "somewhat"),
        )
        == 4
    )


def test_similarity_intensity_needs_both_present():
    rated = parse_tone("formal", "serious", "very")
    unrated = parse_tone("formal", "serious")
    assert tone_similarity(rated, unrated) == 6
    assert tone_similarity(unrated, unrated) == 6


tones = st.builds(
    ToneTuple,
    st.sampled_from(list(PrimaryTone)),
    st.sampled_from(list(SecondaryTone)),
    st.one_of(st.none(), st.sampled_from(list(Intensity))),
)


@given(tones, tones)
def test_similarity_symmetric(a, b):
    assert tone_similarity(a, b) == tone_similarity(b, a)


@given(tones, tones)
def test_similarity_range_and_self_maximal(a, b):
    # intensity only scores when both sides rate it, so sim(a, a) bounds
    # every score a can reach
    score = tone_similarity(a, b)
    assert 0 <= score <= 7
    assert tone_similarity(a, a) >= score


def test_context_modes():
    assert EmailSubmission.from_dict(MINIMAL_EMAIL).context_mode is ContextMode.MINIMAL
    assert EmailSubmission.from_dict(MAXIMAL_EMAIL).context_mode is ContextMode.MAXIMUM
    assert EmailSubmission.from_dict(PARTIAL_EMAIL).context_mode is ContextMode.PARTIAL


@pytest.mark.parametrize("field", [
    "sender_relationship", "recipient_relationship", "subject", "body", "context_note",
])
def test_mandatory_fields_enforced(field):
    data = dict(MINIMAL_EMAIL)
    data[field] = "   "
    with pytest.raises(InvalidSubmission):
        EmailSubmission.from_dict(data)
    data.pop(field)
    with pytest.raises(InvalidSubmission):
        EmailSubmission.from_dict(data)


def test_bad_hierarchy_rejected():
    with pytest.raises(InvalidSubmission):
        from crowdtone.tones import submission_from_dict

        submission_from_dict(dict(MINIMAL_EMAIL, hierarchy="boss"))


def test_blank_optional_counts_as_absent():
    email = EmailSubmission.from_dict(dict(MINIMAL_EMAIL, sender_gender="  "))
    assert email.context_mode is ContextMode.MINIMAL


def test_submission_roundtrip():
    email = EmailSubmission.from_dict(MAXIMAL_EMAIL)
    assert EmailSubmission.from_dict(email.to_dict()) == email
