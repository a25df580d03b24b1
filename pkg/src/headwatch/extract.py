"""Frame-pair differencing and rule-based classification of movements and emotions.

Movement rules compare the pose difference between consecutive frames against a
threshold (default 4 degrees); emotion rules test fixed boundaries on the six
AU weights in a configurable priority order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .types import (
    AUVector,
    Direction,
    Emotion,
    EmotionEvent,
    FrameSample,
    HeadPose,
    MovementEvent,
    ValidationError,
)

DEFAULT_THRESHOLD_DEG = 4.0

DEFAULT_EMOTION_PRIORITY = (
    Emotion.SAD,
    Emotion.SURPRISED,
    Emotion.HAPPY,
    Emotion.ANGRY,
)


@dataclass(frozen=True)
class ExtractionConfig:
    """Tunables for event extraction.

    literal_rules replays the legacy uncorrected boundary conditions
    (down/right compare against +threshold, surprise's jaw test is vacuous);
    it exists for documentation and comparison, not for production use.
    """

    threshold_deg: float = DEFAULT_THRESHOLD_DEG
    emotion_priority: Tuple[Emotion, ...] = DEFAULT_EMOTION_PRIORITY
    emit_emotion_on_transition_only: bool = True
    literal_rules: bool = False

    def __post_init__(self):
        if not self.threshold_deg > 0:
            raise ValidationError(f"threshold {self.threshold_deg} must be positive")
        priority = tuple(self.emotion_priority)
        if sorted(priority, key=lambda e: e.value) != sorted(Emotion, key=lambda e: e.value):
            raise ValidationError(
                "emotion_priority must be a permutation of the four emotions, "
                f"got {[e.value for e in priority]}"
            )
        object.__setattr__(self, "emotion_priority", priority)


def pose_diff(prev: HeadPose, curr: HeadPose) -> Tuple[float, float]:
    """Per-axis difference between the previous and the current frame's pose."""
    return (prev.pitch - curr.pitch, prev.yaw - curr.yaw)


def classify_movement(
    pitch_diff: float, yaw_diff: float, cfg: ExtractionConfig = ExtractionConfig()
) -> List[Tuple[Direction, float]]:
    """Map a frame-pair pose difference to 0-2 directed movements.

    Vertical result (if any) comes before the horizontal one; intensity is the
    absolute difference on the triggering axis.
    """
    threshold = cfg.threshold_deg
    results: List[Tuple[Direction, float]] = []
    if pitch_diff > threshold:
        results.append((Direction.UP, abs(pitch_diff)))
    elif pitch_diff < (threshold if cfg.literal_rules else -threshold):
        results.append((Direction.DOWN, abs(pitch_diff)))
    if yaw_diff > threshold:
        results.append((Direction.LEFT, abs(yaw_diff)))
    elif yaw_diff < (threshold if cfg.literal_rules else -threshold):
        results.append((Direction.RIGHT, abs(yaw_diff)))
    return results


def extract_movements(
    frames: Sequence[FrameSample], cfg: ExtractionConfig = ExtractionConfig()
) -> List[MovementEvent]:
    """Run frame-pair differencing over a time-ordered stream.

    Pairs where either frame lacks a pose are skipped; dropouts never bridge
    into a single large difference. Each event carries the later frame's time.
    """
    events: List[MovementEvent] = []
    for prev, curr in zip(frames, frames[1:]):
        if prev.pose is None or curr.pose is None:
            continue
        pitch_diff, yaw_diff = pose_diff(prev.pose, curr.pose)
        for direction, intensity in classify_movement(pitch_diff, yaw_diff, cfg):
            events.append(MovementEvent(t=curr.t, direction=direction, intensity=intensity))
    return events


def _is_sad(au: AUVector, literal: bool) -> bool:
    return au.a6 < 0 and au.a5 > 0


def _is_surprised(au: AUVector, literal: bool) -> bool:
    if literal:
        return (au.a2 < 0.25 or au.a2 > 0.25) and au.a4 < 0
    return (au.a2 < -0.25 or au.a2 > 0.25) and au.a4 < 0


def _is_happy(au: AUVector, literal: bool) -> bool:
    return au.a3 > 0.4 or au.a5 < 0


def _is_angry(au: AUVector, literal: bool) -> bool:
    return (au.a4 > 0 and (au.a2 > 0.25 or au.a2 < -0.25)) or (au.a4 > 0 and au.a5 > 0)


_EMOTION_RULES = {
    Emotion.SAD: _is_sad,
    Emotion.SURPRISED: _is_surprised,
    Emotion.HAPPY: _is_happy,
    Emotion.ANGRY: _is_angry,
}


def classify_emotion(
    au: AUVector, cfg: ExtractionConfig = ExtractionConfig()
) -> Optional[Emotion]:
    """Return the first emotion whose boundary rule fires, in priority order.

    The rules overlap, so the priority order breaks ties; the neutral
    all-zero vector never fires any rule.
    """
    for emotion in cfg.emotion_priority:
        if _EMOTION_RULES[emotion](au, cfg.literal_rules):
            return emotion
    return None


def extract_emotions(
    frames: Sequence[FrameSample], cfg: ExtractionConfig = ExtractionConfig()
) -> List[EmotionEvent]:
    """Classify every AU-bearing frame and emit emotion events.

    By default an event is emitted only when the classification changes to a
    non-neutral label (transition-only); with
    emit_emotion_on_transition_only=False every non-neutral frame emits.
    """
    events: List[EmotionEvent] = []
    previous: Optional[Emotion] = None
    for frame in frames:
        if frame.au is None:
            continue
        label = classify_emotion(frame.au, cfg)
        if cfg.emit_emotion_on_transition_only:
            if label is not None and label != previous:
                events.append(EmotionEvent(t=frame.t, emotion=label))
            previous = label
        elif label is not None:
            events.append(EmotionEvent(t=frame.t, emotion=label))
    return events
