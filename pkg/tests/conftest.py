import datetime as dt
from pathlib import Path

import pytest

from headwatch.store import save_session
from headwatch.types import Direction, Emotion, EmotionEvent, MovementEvent, Session

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def single_right_session() -> Session:
    """One movement session matching the single-RIGHT golden document."""
    return Session(
        session_date=dt.date(2016, 3, 2),
        movements=[MovementEvent(2.23, Direction.RIGHT, 6.78485)],
    )


@pytest.fixture
def single_angry_session() -> Session:
    """One emotion session matching the single-ANGRY golden document."""
    return Session(
        session_date=dt.date(2016, 3, 10),
        emotions=[EmotionEvent(7.98, Emotion.ANGRY)],
    )


@pytest.fixture
def populated_registry(tmp_path) -> Path:
    """Two users, one date, movement and emotion documents."""
    registry = tmp_path / "registry"
    alice = Session(
        session_date=dt.date(2016, 3, 2),
        user_label="alice",
        movements=[
            MovementEvent(2.23, Direction.RIGHT, 6.78485),
            MovementEvent(5.0, Direction.UP, 5.0),
        ],
        emotions=[EmotionEvent(7.98, Emotion.ANGRY)],
    )
    bob = Session(
        session_date=dt.date(2016, 3, 2),
        user_label="bob",
        movements=[MovementEvent(3.1, Direction.LEFT, 10.0)],
        emotions=[
            EmotionEvent(1.0, Emotion.HAPPY),
            EmotionEvent(6.5, Emotion.SAD),
        ],
    )
    for session in (alice, bob):
        save_session(registry, session, "movement")
        save_session(registry, session, "emotion")
    return registry
