"""Score extracted events against ground-truth annotations.

Matching is greedy and in-order: both lists are walked front to back, and a
pair matches when the labels agree and the timestamps lie within tolerance.
The accuracy figure matched / (matched + missed + spurious) is an artifact
convention (the strictest symmetric choice), not an externally defined metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .types import EmotionEvent, GroundTruthAnnotation, MovementEvent

TimeLabel = Tuple[float, object]


def _as_time_label(item) -> TimeLabel:
    if isinstance(item, MovementEvent):
        return (item.t, item.direction)
    if isinstance(item, EmotionEvent):
        return (item.t, item.emotion)
    if isinstance(item, GroundTruthAnnotation):
        return (item.t, item.label)
    t, label = item
    return (float(t), label)


@dataclass(frozen=True)
class MatchReport:
    """Outcome of one matching run: pairs, unmatched truths, unmatched extractions."""

    matches: Tuple[Tuple[TimeLabel, TimeLabel], ...]
    missed: Tuple[TimeLabel, ...]
    spurious: Tuple[TimeLabel, ...]

    @property
    def matched_count(self) -> int:
        return len(self.matches)

    @property
    def missed_count(self) -> int:
        return len(self.missed)

    @property
    def spurious_count(self) -> int:
        return len(self.spurious)

    def to_json(self) -> dict:
        return {
            "matched": self.matched_count,
            "missed": self.missed_count,
            "spurious": self.spurious_count,
            "accuracyPct": accuracy(self),
        }


def match_events(
    extracted: Sequence, truth: Sequence, tol_s: float = 0.5
) -> MatchReport:
    """Greedily align two time-ordered event lists.

    Each element matches at most once. When the heads disagree, the earlier
    one is set aside (both, on an exact time tie), keeping the walk symmetric
    in its two inputs.
    """
    if tol_s < 0:
        raise ValueError(f"tolerance {tol_s} must be non-negative")
    ex = [_as_time_label(item) for item in extracted]
    tr = [_as_time_label(item) for item in truth]
    matches: List[Tuple[TimeLabel, TimeLabel]] = []
    missed: List[TimeLabel] = []
    spurious: List[TimeLabel] = []
    i = j = 0
    while i < len(ex) and j < len(tr):
        (et, el), (tt, tl) = ex[i], tr[j]
        if el == tl and abs(et - tt) <= tol_s:
            matches.append((ex[i], tr[j]))
            i += 1
            j += 1
        elif et < tt:
            spurious.append(ex[i])
            i += 1
        elif tt < et:
            missed.append(tr[j])
            j += 1
        else:
            spurious.append(ex[i])
            missed.append(tr[j])
            i += 1
            j += 1
    spurious.extend(ex[i:])
    missed.extend(tr[j:])
    return MatchReport(matches=tuple(matches), missed=tuple(missed), spurious=tuple(spurious))


def accuracy(report: MatchReport) -> float:
    """matched / (matched + missed + spurious) as a percentage; 100 when empty."""
    total = report.matched_count + report.missed_count + report.spurious_count
    if total == 0:
        return 100.0
    return report.matched_count / total * 100.0
