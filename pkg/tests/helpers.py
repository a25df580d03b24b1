"""Hypothesis strategies shared across test modules."""

import datetime as dt

from hypothesis import strategies as st

from headwatch.types import (
    Direction,
    Emotion,
    EmotionEvent,
    MovementEvent,
    Session,
)

times = st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False)
intensities = st.floats(min_value=0.0, max_value=720.0, allow_nan=False, allow_infinity=False)
directions = st.sampled_from(list(Direction))
emotions = st.sampled_from(list(Emotion))

# Registry filenames allow [A-Za-z0-9.-]; documents themselves take any string.
safe_user_labels = st.from_regex(r"[A-Za-z0-9.-]{1,12}", fullmatch=True)
user_labels = st.one_of(st.just(""), st.text(min_size=1, max_size=12))

session_dates = st.dates(min_value=dt.date(2000, 1, 1), max_value=dt.date(2099, 12, 31))


@st.composite
def movement_events(draw):
    return MovementEvent(draw(times), draw(directions), draw(intensities))


@st.composite
def emotion_events(draw):
    return EmotionEvent(draw(times), draw(emotions))


@st.composite
def sessions(draw, labels=user_labels):
    movements = sorted(draw(st.lists(movement_events(), max_size=8)), key=lambda e: e.t)
    emos = sorted(draw(st.lists(emotion_events(), max_size=8)), key=lambda e: e.t)
    return Session(
        session_date=draw(session_dates),
        user_label=draw(labels),
        movements=movements,
        emotions=emos,
    )


session_lists = st.lists(sessions(), max_size=5)
