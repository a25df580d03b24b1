"""Chart-ready series: per-user scatter points and fixed-width time buckets."""

from __future__ import annotations

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .types import Direction, Emotion, EventLabel, Session, TimeBucket

DEFAULT_BUCKET_WIDTH_S = 2.0


def bucket_events(
    events: Sequence[Tuple[float, EventLabel]],
    width_s: float = DEFAULT_BUCKET_WIDTH_S,
) -> List[TimeBucket]:
    """Count events into half-open buckets [k*width, (k+1)*width).

    Buckets run contiguously from 0 through the last event; every bucket
    carries a count for every member of the label's enum, zeros included.
    A boundary event belongs to the bucket starting there.
    """
    if not width_s > 0:
        raise ValueError(f"bucket width {width_s} must be positive")
    if not events:
        return []
    label_cls = type(events[0][1])
    if label_cls not in (Direction, Emotion):
        raise ValueError(f"labels must be Direction or Emotion, got {label_cls!r}")
    indexed = []
    for t, label in events:
        if type(label) is not label_cls:
            raise ValueError(f"mixed label types: {label!r} among {label_cls.__name__}")
        if t < 0:
            raise ValueError(f"event time {t} is negative")
        indexed.append((int(t // width_s), label))
    n_buckets = max(index for index, _ in indexed) + 1
    counts = [{label: 0 for label in label_cls} for _ in range(n_buckets)]
    for index, label in indexed:
        counts[index][label] += 1
    return [
        TimeBucket(start_t=k * width_s, width=width_s, counts=counts[k])
        for k in range(n_buckets)
    ]


class ScatterPoint(NamedTuple):
    t: float
    direction: Direction
    intensity: float
    color_rank: float


def scatter_series(sessions: Sequence[Session]) -> Dict[str, List[ScatterPoint]]:
    """One movement series per user, colour-ranked by intensity.

    color_rank is the intensity divided by the maximum intensity across all
    given sessions (0 when that maximum is 0), so ranking never reorders.
    """
    max_intensity = max(
        (event.intensity for session in sessions for event in session.movements),
        default=0.0,
    )
    series: Dict[str, List[ScatterPoint]] = {}
    for session in sorted(sessions, key=lambda s: (s.user_label, s.session_date)):
        points = series.setdefault(session.user_label, [])
        for event in session.movements:
            rank = event.intensity / max_intensity if max_intensity > 0 else 0.0
            points.append(ScatterPoint(event.t, event.direction, event.intensity, rank))
    for points in series.values():
        points.sort(key=lambda p: p.t)
    return series


def direction_series(
    sessions: Sequence[Session], width_s: float = DEFAULT_BUCKET_WIDTH_S
) -> List[TimeBucket]:
    """Bucketed movement counts grouped by direction, summed over all users."""
    events = sorted(
        ((event.t, event.direction) for session in sessions for event in session.movements),
        key=lambda pair: pair[0],
    )
    return bucket_events(events, width_s)


def _coerce_emotions(labels: Iterable) -> List[Emotion]:
    coerced = []
    for label in labels:
        try:
            coerced.append(Emotion(label))
        except (TypeError, ValueError):
            raise ValueError(
                f"unknown emotion {label!r} in filter, expected one of "
                f"{[e.value for e in Emotion]}"
            ) from None
    return coerced


def emotion_series(
    sessions: Sequence[Session],
    width_s: float = DEFAULT_BUCKET_WIDTH_S,
    only: Optional[Iterable] = None,
) -> List[TimeBucket]:
    """Bucketed emotion counts, optionally restricted to a subset of emotions.

    Filtered-out events still extend the bucket range (their counts are just
    not reported), so toggling a series never reshapes the time axis.
    """
    events = sorted(
        ((event.t, event.emotion) for session in sessions for event in session.emotions),
        key=lambda pair: pair[0],
    )
    buckets = bucket_events(events, width_s)
    if only is None:
        return buckets
    keep = _coerce_emotions(only)
    kept_keys = [emotion for emotion in Emotion if emotion in keep]
    return [
        TimeBucket(
            start_t=bucket.start_t,
            width=bucket.width,
            counts={emotion: bucket.counts.get(emotion, 0) for emotion in kept_keys},
        )
        for bucket in buckets
    ]
