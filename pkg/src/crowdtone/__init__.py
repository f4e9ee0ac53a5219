"""Crowd-powered email tone identification and improvement pipeline.

Three workers scaffold an improved version each (identify the tone, judge
it, edit), a pair of versions is selected by majority verdict or tone
similarity, three fresh workers vote on the pair (optionally refining the
winner), and the result ships as a JSON document over a REST API. Simulated
deterministic workers make the whole protocol verifiable offline.
"""

from .consensus import (
    Ballot,
    CandidatePair,
    Choice,
    FinalSelection,
    Margin,
    PairRationale,
    compose_result,
    select_pair,
    tally,
)
from .errors import CrowdToneError
from .orchestrator import (
    Assignment,
    LogicalClock,
    Orchestrator,
    PipelineConfig,
    PipelineState,
    replay,
    replay_store,
)
from .scaffolding import (
    ScaffoldOutcome,
    ScaffoldTaskState,
    Stage,
    advance,
    finalize,
    start_task,
)
from .tones import (
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
from .workers import QualificationPolicy, WorkerProfile, qualifies

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "Ballot",
    "CandidatePair",
    "Choice",
    "ContextMode",
    "CrowdToneError",
    "EmailSubmission",
    "FinalSelection",
    "Intensity",
    "LogicalClock",
    "Margin",
    "Orchestrator",
    "PairRationale",
    "PipelineConfig",
    "PipelineState",
    "PrimaryTone",
    "QualificationPolicy",
    "ScaffoldOutcome",
    "ScaffoldTaskState",
    "SecondaryTone",
    "Stage",
    "ToneTuple",
    "WorkerProfile",
    "advance",
    "compose_result",
    "finalize",
    "parse_tone",
    "qualifies",
    "replay",
    "replay_store",
    "select_pair",
    "start_task",
    "tally",
    "taxonomy",
    "tone_similarity",
]
