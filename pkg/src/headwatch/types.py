"""Shared domain types: poses, AU vectors, frames, events, sessions, buckets.

All types are immutable values and safe to share across threads.
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Union


class ValidationError(ValueError):
    """Base class for every domain validation failure."""


class PoseRangeError(ValidationError):
    """Pitch or yaw angle outside its allowed range."""


class WeightRangeError(ValidationError):
    """Animation-unit weight outside [-1, 1]."""


class TimestampError(ValidationError):
    """Negative or non-monotone timestamp."""


class Direction(str, Enum):
    UP = "UP"
    DOWN = "DOWN"
    LEFT = "LEFT"
    RIGHT = "RIGHT"


class Emotion(str, Enum):
    ANGRY = "ANGRY"
    HAPPY = "HAPPY"
    SAD = "SAD"
    SURPRISED = "SURPRISED"


EventLabel = Union[Direction, Emotion]


def label_from_string(value: str) -> EventLabel:
    """Resolve an uppercase label string to a Direction or Emotion member."""
    for enum_cls in (Direction, Emotion):
        try:
            return enum_cls(value)
        except ValueError:
            continue
    raise ValidationError(
        f"unknown label {value!r}: expected one of "
        f"{[d.value for d in Direction] + [e.value for e in Emotion]}"
    )


def _require_number(value, what: str) -> float:
    # bool is an int subclass; JSON true/false must not pass as numbers
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(f"{what} must be finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class HeadPose:
    """Head orientation in degrees: pitch (nod up/down) and yaw (turn left/right)."""

    pitch: float
    yaw: float

    def __post_init__(self):
        pitch = _require_number(self.pitch, "pitch")
        yaw = _require_number(self.yaw, "yaw")
        if not -90.0 <= pitch <= 90.0:
            raise PoseRangeError(f"pitch {pitch} outside [-90, 90]")
        if not -180.0 <= yaw <= 180.0:
            raise PoseRangeError(f"yaw {yaw} outside [-180, 180]")
        object.__setattr__(self, "pitch", pitch)
        object.__setattr__(self, "yaw", yaw)

    def to_json(self) -> dict:
        return {"pitch": self.pitch, "yaw": self.yaw}

    @classmethod
    def from_json(cls, data: dict) -> "HeadPose":
        return cls(pitch=data["pitch"], yaw=data["yaw"])


@dataclass(frozen=True)
class AUVector:
    """Six animation-unit weights in [-1, 1], all zero in the neutral state.

    a1: lip raiser, a2: jaw lower, a3: lip stretcher,
    a4: brow lower, a5: lip corner depressor, a6: brow raiser.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    a6: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a5", "a6"):
            weight = _require_number(getattr(self, name), name)
            if not -1.0 <= weight <= 1.0:
                raise WeightRangeError(f"{name} weight {weight} outside [-1, 1]")
            object.__setattr__(self, name, weight)

    @classmethod
    def neutral(cls) -> "AUVector":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def as_tuple(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6)

    def to_json(self) -> list:
        return list(self.as_tuple())

    @classmethod
    def from_json(cls, data: Sequence[float]) -> "AUVector":
        if not isinstance(data, (list, tuple)) or len(data) != 6:
            raise ValidationError(f"AU vector must be a list of 6 numbers, got {data!r}")
        return cls(*data)


@dataclass(frozen=True)
class FrameSample:
    """One timestamped sensor frame holding a pose, an AU vector, or both."""

    t: float
    pose: Optional[HeadPose] = None
    au: Optional[AUVector] = None

    def __post_init__(self):
        t = _require_number(self.t, "t")
        if t < 0:
            raise TimestampError(f"timestamp {t} is negative")
        if self.pose is None and self.au is None:
            raise ValidationError("frame carries neither pose nor AU vector")
        object.__setattr__(self, "t", t)

    def to_json(self) -> dict:
        record: dict = {"t": self.t}
        if self.pose is not None:
            record["pitch"] = self.pose.pitch
            record["yaw"] = self.pose.yaw
        if self.au is not None:
            record["au"] = self.au.to_json()
        return record

    @classmethod
    def from_json(cls, data: dict) -> "FrameSample":
        pose = None
        if "pitch" in data or "yaw" in data:
            if ("pitch" in data) != ("yaw" in data):
                raise ValidationError("pitch and yaw must be present together")
            pose = HeadPose(data["pitch"], data["yaw"])
        au = AUVector.from_json(data["au"]) if "au" in data else None
        return cls(t=data["t"], pose=pose, au=au)


def validate_frame_stream(frames: Sequence[FrameSample]) -> Sequence[FrameSample]:
    """Check that timestamps are strictly increasing; returns the input."""
    for i in range(1, len(frames)):
        if frames[i].t <= frames[i - 1].t:
            raise TimestampError(
                f"non-monotone timestamp at index {i}: "
                f"{frames[i].t} follows {frames[i - 1].t}"
            )
    return frames


@dataclass(frozen=True)
class MovementEvent:
    """A detected head movement: when, which direction, how many degrees."""

    t: float
    direction: Direction
    intensity: float

    def __post_init__(self):
        t = _require_number(self.t, "t")
        if t < 0:
            raise TimestampError(f"timestamp {t} is negative")
        if not isinstance(self.direction, Direction):
            raise ValidationError(f"direction must be a Direction, got {self.direction!r}")
        intensity = _require_number(self.intensity, "intensity")
        if intensity < 0:
            raise ValidationError(f"intensity {intensity} is negative")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "intensity", intensity)

    def to_json(self) -> dict:
        return {"time": self.t, "direction": self.direction.value, "intensity": self.intensity}

    @classmethod
    def from_json(cls, data: dict) -> "MovementEvent":
        direction = data["direction"]
        if not isinstance(direction, Direction):
            try:
                direction = Direction(direction)
            except ValueError:
                raise ValidationError(
                    f"unknown direction {direction!r}: expected one of "
                    f"{[d.value for d in Direction]}"
                ) from None
        return cls(t=data["time"], direction=direction, intensity=data["intensity"])


@dataclass(frozen=True)
class EmotionEvent:
    """A detected emotion transition: when it was first observed and the label.

    With transition-only extraction (the default), consecutive events in one
    session always differ in emotion; per-frame extraction may repeat labels.
    """

    t: float
    emotion: Emotion

    def __post_init__(self):
        t = _require_number(self.t, "t")
        if t < 0:
            raise TimestampError(f"timestamp {t} is negative")
        if not isinstance(self.emotion, Emotion):
            raise ValidationError(f"emotion must be an Emotion, got {self.emotion!r}")
        object.__setattr__(self, "t", t)

    def to_json(self) -> dict:
        return {"time": self.t, "emotion": self.emotion.value}

    @classmethod
    def from_json(cls, data: dict) -> "EmotionEvent":
        emotion = data["emotion"]
        if not isinstance(emotion, Emotion):
            try:
                emotion = Emotion(emotion)
            except ValueError:
                raise ValidationError(
                    f"unknown emotion {emotion!r}: expected one of "
                    f"{[e.value for e in Emotion]}"
                ) from None
        return cls(t=data["time"], emotion=emotion)


@dataclass(frozen=True)
class Session:
    """One user's recorded run: a dated pair of ordered event lists."""

    session_date: dt.date
    user_label: str = ""
    movements: tuple = ()
    emotions: tuple = ()

    def __post_init__(self):
        if not isinstance(self.session_date, dt.date) or isinstance(self.session_date, dt.datetime):
            raise ValidationError(f"session_date must be a date, got {self.session_date!r}")
        if not isinstance(self.user_label, str):
            raise ValidationError(f"user_label must be a string, got {self.user_label!r}")
        movements = tuple(self.movements)
        emotions = tuple(self.emotions)
        for event in movements:
            if not isinstance(event, MovementEvent):
                raise ValidationError(f"movements must hold MovementEvent, got {event!r}")
        for event in emotions:
            if not isinstance(event, EmotionEvent):
                raise ValidationError(f"emotions must hold EmotionEvent, got {event!r}")
        for name, events in (("movements", movements), ("emotions", emotions)):
            for i in range(1, len(events)):
                if events[i].t < events[i - 1].t:
                    raise ValidationError(
                        f"{name} not ordered by time: {events[i].t} follows {events[i - 1].t}"
                    )
        object.__setattr__(self, "movements", movements)
        object.__setattr__(self, "emotions", emotions)


@dataclass(frozen=True)
class TimeBucket:
    """Event counts over one half-open interval [start_t, start_t + width)."""

    start_t: float
    width: float
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        width = _require_number(self.width, "width")
        if width <= 0:
            raise ValidationError(f"bucket width {width} must be positive")
        start_t = _require_number(self.start_t, "start_t")
        if start_t < 0:
            raise ValidationError(f"bucket start {start_t} is negative")
        ratio = start_t / width
        if abs(ratio - round(ratio)) > 1e-9:
            raise ValidationError(f"bucket start {start_t} is not a multiple of width {width}")
        for label, count in self.counts.items():
            if not isinstance(label, (Direction, Emotion)):
                raise ValidationError(f"bucket key must be Direction or Emotion, got {label!r}")
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise ValidationError(f"count for {label.value} must be a non-negative int")
        object.__setattr__(self, "start_t", start_t)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "counts", dict(self.counts))

    @property
    def end_t(self) -> float:
        return self.start_t + self.width

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "startT": self.start_t,
            "width": self.width,
            "counts": {label.value: count for label, count in self.counts.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "TimeBucket":
        counts = {label_from_string(key): value for key, value in data["counts"].items()}
        return cls(start_t=data["startT"], width=data["width"], counts=counts)


@dataclass(frozen=True)
class GroundTruthAnnotation:
    """A manually or synthetically asserted event used to score extraction."""

    t: float
    label: EventLabel

    def __post_init__(self):
        t = _require_number(self.t, "t")
        if t < 0:
            raise TimestampError(f"timestamp {t} is negative")
        if not isinstance(self.label, (Direction, Emotion)):
            raise ValidationError(f"label must be Direction or Emotion, got {self.label!r}")
        object.__setattr__(self, "t", t)

    def to_json(self) -> dict:
        return {"t": self.t, "label": self.label.value}

    @classmethod
    def from_json(cls, data: dict) -> "GroundTruthAnnotation":
        return cls(t=data["t"], label=label_from_string(data["label"]))
