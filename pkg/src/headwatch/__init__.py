"""headwatch: head-movement and emotion event pipeline.

Turns per-frame head-pose and facial animation-unit streams into movement and
emotion events, persists them as JSON session documents, aggregates them into
time buckets and serves them to a dashboard.
"""

from .types import (
    AUVector,
    Direction,
    Emotion,
    EmotionEvent,
    FrameSample,
    GroundTruthAnnotation,
    HeadPose,
    MovementEvent,
    Session,
    TimeBucket,
    ValidationError,
)
from .extract import (
    DEFAULT_THRESHOLD_DEG,
    ExtractionConfig,
    classify_emotion,
    classify_movement,
    extract_emotions,
    extract_movements,
    pose_diff,
)

__version__ = "0.1.0"

__all__ = [
    "AUVector",
    "DEFAULT_THRESHOLD_DEG",
    "Direction",
    "Emotion",
    "EmotionEvent",
    "ExtractionConfig",
    "FrameSample",
    "GroundTruthAnnotation",
    "HeadPose",
    "MovementEvent",
    "Session",
    "TimeBucket",
    "ValidationError",
    "classify_emotion",
    "classify_movement",
    "extract_emotions",
    "extract_movements",
    "pose_diff",
]
