"""Frame streams without a physical sensor: replay files and scripted synthesis.

Replay files are UTF-8 text, one JSON object per line with fields
t (seconds), optional pitch/yaw (degrees, present together) and optional
au (array of 6 weights in [-1, 1]). Unknown fields are rejected.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

import numpy as np

from .extract import DEFAULT_THRESHOLD_DEG
from .types import (
    AUVector,
    Direction,
    Emotion,
    FrameSample,
    GroundTruthAnnotation,
    HeadPose,
    TimestampError,
    ValidationError,
)

_REPLAY_FIELDS = {"t", "pitch", "yaw", "au"}

# AU exemplars used when synthesizing an emotion interval. Each satisfies its
# own boundary rule and no higher-priority rule under the default priority
# (SAD, SURPRISED, HAPPY, ANGRY).
EMOTION_AU_EXEMPLARS = {
    Emotion.SAD: AUVector(0.0, 0.0, 0.0, 0.0, 0.5, -0.3),
    Emotion.SURPRISED: AUVector(0.0, 0.5, 0.0, -0.2, 0.0, 0.0),
    Emotion.HAPPY: AUVector(0.0, 0.0, 0.5, 0.0, 0.0, 0.0),
    Emotion.ANGRY: AUVector(0.0, 0.5, 0.0, 0.3, 0.0, 0.0),
}

# Sign of the pose step that realizes a move, per axis, in the frame-pair
# difference convention (diff = previous - current).
_MOVE_STEP = {
    Direction.UP: ("pitch", -1.0),
    Direction.DOWN: ("pitch", +1.0),
    Direction.LEFT: ("yaw", -1.0),
    Direction.RIGHT: ("yaw", +1.0),
}

_POSE_LIMITS = {"pitch": 90.0, "yaw": 180.0}


class ReplayParseError(ValidationError):
    """Malformed replay line; the message names the offending line."""


class SubThresholdMoveWarning(UserWarning):
    """A scripted move too small to be recovered at the default threshold."""


def parse_replay(stream: Union[str, Iterable[str]]) -> List[FrameSample]:
    """Parse a line-delimited replay stream into validated, time-ordered frames."""
    if isinstance(stream, str):
        stream = stream.splitlines()
    samples: List[FrameSample] = []
    last_t = None
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ReplayParseError(f"invalid JSON at line {lineno}: {exc.msg}") from None
        if not isinstance(record, dict):
            raise ReplayParseError(f"record at line {lineno} is not a JSON object")
        unknown = set(record) - _REPLAY_FIELDS
        if unknown:
            raise ReplayParseError(
                f"unknown field(s) {sorted(unknown)} at line {lineno}"
            )
        if "t" not in record:
            raise ReplayParseError(f"missing field 't' at line {lineno}")
        if ("pitch" in record) != ("yaw" in record):
            raise ReplayParseError(
                f"pitch and yaw must be present together at line {lineno}"
            )
        try:
            pose = HeadPose(record["pitch"], record["yaw"]) if "pitch" in record else None
            au = AUVector.from_json(record["au"]) if "au" in record else None
            sample = FrameSample(t=record["t"], pose=pose, au=au)
        except ValidationError as exc:
            raise type(exc)(f"{exc} at line {lineno}") from None
        if last_t is not None and sample.t <= last_t:
            raise TimestampError(f"non-monotone timestamp at line {lineno}")
        last_t = sample.t
        samples.append(sample)
    return samples


def serialize_replay(samples: Iterable[FrameSample]) -> str:
    """Inverse of parse_replay: one JSON object per line."""
    return "".join(json.dumps(sample.to_json()) + "\n" for sample in samples)


@dataclass(frozen=True)
class ScriptedMove:
    at_t: float
    direction: Direction
    magnitude_deg: float


@dataclass(frozen=True)
class EmotionInterval:
    from_t: float
    to_t: float
    emotion: Emotion


@dataclass(frozen=True)
class SyntheticScript:
    """A deterministic session recipe: scripted moves, emotion intervals, noise."""

    duration_s: float
    frame_rate_hz: float = 30.0
    moves: Tuple[ScriptedMove, ...] = ()
    emotions: Tuple[EmotionInterval, ...] = ()
    noise_std_deg: float = 0.0
    noise_std_au: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not self.duration_s > 0:
            raise ValidationError(f"duration {self.duration_s} must be positive")
        if not self.frame_rate_hz > 0:
            raise ValidationError(f"frame rate {self.frame_rate_hz} must be positive")
        if self.noise_std_deg < 0 or self.noise_std_au < 0:
            raise ValidationError("noise standard deviations must be non-negative")
        moves = tuple(self.moves)
        for move in moves:
            if not move.magnitude_deg > 0:
                raise ValidationError(
                    f"move at t={move.at_t} has non-positive magnitude {move.magnitude_deg}"
                )
            if not 0 < move.at_t <= self.duration_s:
                raise ValidationError(
                    f"move time {move.at_t} outside (0, {self.duration_s}]"
                )
        intervals = tuple(self.emotions)
        for interval in intervals:
            if not 0 <= interval.from_t < interval.to_t <= self.duration_s:
                raise ValidationError(
                    f"emotion interval [{interval.from_t}, {interval.to_t}) outside "
                    f"[0, {self.duration_s}] or empty"
                )
        by_start = sorted(intervals, key=lambda iv: iv.from_t)
        for prev, curr in zip(by_start, by_start[1:]):
            if curr.from_t < prev.to_t:
                raise ValidationError(
                    f"overlapping emotion intervals: [{prev.from_t}, {prev.to_t}) and "
                    f"[{curr.from_t}, {curr.to_t})"
                )
        object.__setattr__(self, "moves", moves)
        object.__setattr__(self, "emotions", intervals)

    def to_json(self) -> dict:
        return {
            "durationS": self.duration_s,
            "frameRateHz": self.frame_rate_hz,
            "moves": [
                {"atT": m.at_t, "direction": m.direction.value, "magnitudeDeg": m.magnitude_deg}
                for m in self.moves
            ],
            "emotions": [
                {"fromT": iv.from_t, "toT": iv.to_t, "emotion": iv.emotion.value}
                for iv in self.emotions
            ],
            "noiseStdDeg": self.noise_std_deg,
            "noiseStdAu": self.noise_std_au,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SyntheticScript":
        known = {"durationS", "frameRateHz", "moves", "emotions", "noiseStdDeg", "noiseStdAu", "seed"}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown script field(s) {sorted(unknown)}")
        moves = tuple(
            ScriptedMove(m["atT"], Direction(m["direction"]), m["magnitudeDeg"])
            for m in data.get("moves", ())
        )
        emotions = tuple(
            EmotionInterval(iv["fromT"], iv["toT"], Emotion(iv["emotion"]))
            for iv in data.get("emotions", ())
        )
        return cls(
            duration_s=data["durationS"],
            frame_rate_hz=data.get("frameRateHz", 30.0),
            moves=moves,
            emotions=emotions,
            noise_std_deg=data.get("noiseStdDeg", 0.0),
            noise_std_au=data.get("noiseStdAu", 0.0),
            seed=data.get("seed", 0),
        )


def _frame_index_at(t: float, rate: float) -> int:
    """Index of the first frame whose time is >= t on the regular grid."""
    return max(0, math.ceil(t * rate - 1e-9))


def generate_synthetic(
    script: SyntheticScript,
) -> Tuple[List[FrameSample], List[GroundTruthAnnotation]]:
    """Render a script into a frame stream plus the ground truth it encodes.

    Each scripted move becomes a single-frame pose step of the scripted
    magnitude (held afterwards); each emotion interval holds that emotion's AU
    exemplar. Deterministic for a fixed seed.
    """
    rate = script.frame_rate_hz
    n_frames = int(math.floor(script.duration_s * rate + 1e-9)) + 1
    pitch = np.zeros(n_frames)
    yaw = np.zeros(n_frames)
    channels = {"pitch": pitch, "yaw": yaw}

    taken = set()
    for move in script.moves:
        axis, sign = _MOVE_STEP[move.direction]
        frame = _frame_index_at(move.at_t, rate)
        if frame >= n_frames:
            raise ValidationError(
                f"move at t={move.at_t} falls after the last frame "
                f"(t={(n_frames - 1) / rate:.4f})"
            )
        if (frame, axis) in taken:
            raise ValidationError(
                f"two moves on the {axis} axis land on the same frame "
                f"(t={frame / rate:.4f}); space them at least one frame apart"
            )
        taken.add((frame, axis))
        if move.magnitude_deg <= DEFAULT_THRESHOLD_DEG:
            warnings.warn(
                f"move at t={move.at_t} has magnitude {move.magnitude_deg} <= "
                f"default threshold {DEFAULT_THRESHOLD_DEG} and will not be "
                "recovered at default settings",
                SubThresholdMoveWarning,
            )
        channels[axis][frame:] += sign * move.magnitude_deg

    for axis, series in channels.items():
        limit = _POSE_LIMITS[axis]
        worst = np.argmax(np.abs(series))
        if abs(series[worst]) > limit:
            raise ValidationError(
                f"scripted moves drive {axis} to {series[worst]:.2f} at "
                f"t={worst / rate:.4f}, outside [-{limit}, {limit}]"
            )

    rng = np.random.default_rng(script.seed)
    if script.noise_std_deg > 0:
        pitch = np.clip(pitch + rng.normal(0.0, script.noise_std_deg, n_frames), -90.0, 90.0)
        yaw = np.clip(yaw + rng.normal(0.0, script.noise_std_deg, n_frames), -180.0, 180.0)

    au_rows = np.zeros((n_frames, 6))
    for interval in script.emotions:
        exemplar = EMOTION_AU_EXEMPLARS[interval.emotion]
        first = _frame_index_at(interval.from_t, rate)
        stop = _frame_index_at(interval.to_t, rate)
        au_rows[first:stop] = exemplar.as_tuple()
    if script.noise_std_au > 0:
        au_rows = np.clip(au_rows + rng.normal(0.0, script.noise_std_au, au_rows.shape), -1.0, 1.0)

    frames = [
        FrameSample(
            t=i / rate,
            pose=HeadPose(float(pitch[i]), float(yaw[i])),
            au=AUVector(*au_rows[i]),
        )
        for i in range(n_frames)
    ]

    truth = [GroundTruthAnnotation(m.at_t, m.direction) for m in script.moves]
    truth += [GroundTruthAnnotation(iv.from_t, iv.emotion) for iv in script.emotions]
    truth.sort(key=lambda a: a.t)
    return frames, truth
