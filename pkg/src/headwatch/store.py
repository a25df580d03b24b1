"""Session persistence in the session-document JSON format, plus a disk registry.

A session document is an array of records, each carrying "SessionDate"
(D/Mon/YY, no leading zero) and "SessionData" (an array of event objects).
Movement events hold exactly time/direction/intensity, emotion events exactly
time/emotion, in that key order. A non-empty user label is written as an
optional "UserLabel" key between the two; documents without it parse to the
empty label, so the bare two-key shape stays valid.

The registry stores one document per (user, date, kind) as
<user>_<yyyy-mm-dd>_<kind>.json; writes are atomic (write-then-rename) and
serialized through an advisory lock.
"""

from __future__ import annotations

import datetime as dt
import json
import os
import re
import tempfile
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Sequence, Union

from filelock import FileLock

from .types import (
    Direction,
    Emotion,
    EmotionEvent,
    MovementEvent,
    Session,
    ValidationError,
)

KINDS = ("movement", "emotion")

_MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
           "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")

_DATE_RE = re.compile(r"^([0-9]{1,2})/(" + "|".join(_MONTHS) + r")/([0-9]{2})$")

# No underscore: it separates the filename fields.
_LABEL_RE = re.compile(r"^[A-Za-z0-9.-]+$")

_FILENAME_RE = re.compile(
    r"^(?P<user>[A-Za-z0-9.-]+)_(?P<date>\d{4}-\d{2}-\d{2})_(?P<kind>movement|emotion)\.json$"
)


class DocumentError(ValidationError):
    """Session document violates the schema; the message names the JSON path."""


class RegistryError(Exception):
    """Registry-level failure: duplicates, unsafe labels, missing entries."""


def _require_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def format_session_date(date: dt.date) -> str:
    """Render a date as D/Mon/YY (no leading zero on the day)."""
    if not 2000 <= date.year <= 2099:
        raise ValidationError(f"year {date.year} not representable as two digits (2000-2099)")
    return f"{date.day}/{_MONTHS[date.month - 1]}/{date.year % 100:02d}"


def parse_session_date(text: str) -> dt.date:
    """Inverse of format_session_date; rejects leading zeros and bad calendar days."""
    if not isinstance(text, str):
        raise DocumentError(f"session date must be a string, got {text!r}")
    match = _DATE_RE.match(text)
    if match is None:
        raise DocumentError(f"bad date format {text!r}: expected D/Mon/YY like 2/Mar/16")
    day_str, month_str, year_str = match.groups()
    if len(day_str) > 1 and day_str.startswith("0"):
        raise DocumentError(f"bad date format {text!r}: day must not carry a leading zero")
    try:
        return dt.date(2000 + int(year_str), _MONTHS.index(month_str) + 1, int(day_str))
    except ValueError:
        raise DocumentError(f"bad calendar date {text!r}") from None


def _events_of(session: Session, kind: str):
    return session.movements if kind == "movement" else session.emotions


def serialize_sessions(sessions: Sequence[Session], kind: str) -> str:
    """Emit the session-document JSON text for one event kind."""
    _require_kind(kind)
    document = []
    for session in sessions:
        record = {"SessionDate": format_session_date(session.session_date)}
        if session.user_label:
            record["UserLabel"] = session.user_label
        record["SessionData"] = [event.to_json() for event in _events_of(session, kind)]
        document.append(record)
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def _check_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _parse_movement(event: dict, path: str) -> MovementEvent:
    if set(event) != {"time", "direction", "intensity"}:
        raise DocumentError(
            f"{path}: movement event must carry exactly time, direction, intensity; "
            f"got keys {sorted(event)}"
        )
    t = _check_number(event["time"], f"{path}.time")
    try:
        direction = Direction(event["direction"])
    except (TypeError, ValueError):
        raise DocumentError(
            f"{path}.direction: unknown direction {event['direction']!r}, expected one of "
            f"{[d.value for d in Direction]}"
        ) from None
    intensity = _check_number(event["intensity"], f"{path}.intensity")
    try:
        return MovementEvent(t=t, direction=direction, intensity=intensity)
    except ValidationError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def _parse_emotion(event: dict, path: str) -> EmotionEvent:
    if set(event) != {"time", "emotion"}:
        raise DocumentError(
            f"{path}: emotion event must carry exactly time, emotion; got keys {sorted(event)}"
        )
    t = _check_number(event["time"], f"{path}.time")
    try:
        emotion = Emotion(event["emotion"])
    except (TypeError, ValueError):
        raise DocumentError(
            f"{path}.emotion: unknown emotion {event['emotion']!r}, expected one of "
            f"{[e.value for e in Emotion]}"
        ) from None
    try:
        return EmotionEvent(t=t, emotion=emotion)
    except ValidationError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def parse_sessions(text: str, kind: str) -> List[Session]:
    """Parse a session document; inverse of serialize_sessions."""
    _require_kind(kind)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(data, list):
        raise DocumentError("$: document must be an array of session records")
    sessions = []
    for i, record in enumerate(data):
        path = f"$[{i}]"
        if not isinstance(record, dict):
            raise DocumentError(f"{path}: session record must be an object")
        unknown = set(record) - {"SessionDate", "UserLabel", "SessionData"}
        if unknown:
            raise DocumentError(f"{path}: unknown key(s) {sorted(unknown)}")
        for required in ("SessionDate", "SessionData"):
            if required not in record:
                raise DocumentError(f"{path}: missing key {required!r}")
        try:
            date = parse_session_date(record["SessionDate"])
        except DocumentError as exc:
            raise DocumentError(f"{path}.SessionDate: {exc}") from None
        label = record.get("UserLabel", "")
        if not isinstance(label, str):
            raise DocumentError(f"{path}.UserLabel: expected a string, got {label!r}")
        raw_events = record["SessionData"]
        if not isinstance(raw_events, list):
            raise DocumentError(f"{path}.SessionData: expected an array")
        parse_event = _parse_movement if kind == "movement" else _parse_emotion
        events = []
        for j, event in enumerate(raw_events):
            event_path = f"{path}.SessionData[{j}]"
            if not isinstance(event, dict):
                raise DocumentError(f"{event_path}: event must be an object")
            events.append(parse_event(event, event_path))
        try:
            if kind == "movement":
                sessions.append(Session(session_date=date, user_label=label, movements=events))
            else:
                sessions.append(Session(session_date=date, user_label=label, emotions=events))
        except ValidationError as exc:
            raise DocumentError(f"{path}: {exc}") from None
    return sessions


@dataclass(frozen=True)
class RegistryEntry:
    user: str
    date: dt.date
    kind: str
    event_count: int

    @property
    def filename(self) -> str:
        return session_filename(self.user, self.date, self.kind)


def session_filename(user: str, date: dt.date, kind: str) -> str:
    return f"{user}_{date.isoformat()}_{kind}.json"


def _check_label(user_label: str) -> str:
    if not _LABEL_RE.match(user_label or ""):
        raise RegistryError(
            f"user label {user_label!r} not usable in filenames: "
            "need non-empty [A-Za-z0-9.-] (no underscore)"
        )
    return user_label


def save_session(
    registry_dir: Union[str, Path], session: Session, kind: str, overwrite: bool = False
) -> Path:
    """Atomically persist one session; rejects duplicates unless overwrite is set."""
    _require_kind(kind)
    _check_label(session.user_label)
    registry = Path(registry_dir)
    registry.mkdir(parents=True, exist_ok=True)
    target = registry / session_filename(session.user_label, session.session_date, kind)
    text = serialize_sessions([session], kind)
    with FileLock(str(registry / ".registry.lock")):
        if target.exists() and not overwrite:
            raise RegistryError(f"{target} already exists; pass overwrite to replace it")
        fd, tmp_name = tempfile.mkstemp(dir=str(registry), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp_name, target)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise
    return target


def load_session(
    registry_dir: Union[str, Path], user: str, date: dt.date, kind: str
) -> Session:
    """Load one registry entry; the filename's user wins over a blank UserLabel."""
    _require_kind(kind)
    path = Path(registry_dir) / session_filename(user, date, kind)
    if not path.exists():
        raise RegistryError(f"no session stored at {path}")
    try:
        sessions = parse_sessions(path.read_text(encoding="utf-8"), kind)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from None
    if len(sessions) != 1:
        raise RegistryError(f"{path} holds {len(sessions)} records, expected exactly 1")
    session = sessions[0]
    if not session.user_label:
        session = replace(session, user_label=user)
    elif session.user_label != user:
        raise RegistryError(
            f"{path} labelled {session.user_label!r} but filed under {user!r}"
        )
    return session


def list_sessions(registry_dir: Union[str, Path]) -> List[RegistryEntry]:
    """Enumerate registry entries as (user, date, kind, event count), sorted."""
    registry = Path(registry_dir)
    if not registry.is_dir():
        raise RegistryError(f"registry directory {registry} does not exist")
    entries = []
    for path in registry.iterdir():
        match = _FILENAME_RE.match(path.name)
        if match is None:
            continue
        user = match.group("user")
        date = dt.date.fromisoformat(match.group("date"))
        kind = match.group("kind")
        session = load_session(registry, user, date, kind)
        entries.append(
            RegistryEntry(user=user, date=date, kind=kind,
                          event_count=len(_events_of(session, kind)))
        )
    entries.sort(key=lambda e: (e.user, e.date, e.kind))
    return entries


def load_all_sessions(registry_dir: Union[str, Path], kind: str) -> List[Session]:
    """Load every session of one kind, ordered by (user, date)."""
    _require_kind(kind)
    return [
        load_session(registry_dir, entry.user, entry.date, entry.kind)
        for entry in list_sessions(registry_dir)
        if entry.kind == kind
    ]


def export_sessions(registry_dir: Union[str, Path], kind: str) -> str:
    """Concatenate every stored session of one kind into a single document."""
    return serialize_sessions(load_all_sessions(registry_dir, kind), kind)
