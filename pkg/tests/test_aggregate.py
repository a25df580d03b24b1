import datetime as dt
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from headwatch.aggregate import (
    bucket_events,
    direction_series,
    emotion_series,
    scatter_series,
)
from headwatch.types import (
    Direction,
    Emotion,
    EmotionEvent,
    MovementEvent,
    Session,
)


def histogram_oracle(events, width):
    """Naive counting oracle: tally floor(t / width) per label."""
    tally = Counter()
    for t, label in events:
        tally[(int(t // width), label)] += 1
    return tally


class TestBucketEvents:
    def test_reference_event_lands_in_second_bucket(self):
        buckets = bucket_events([(2.23, Direction.RIGHT)], 2.0)
        assert len(buckets) == 2
        assert buckets[0].start_t == 0.0
        assert buckets[0].total() == 0
        assert buckets[1].counts[Direction.RIGHT] == 1
        assert buckets[1].total() == 1

    def test_empty_input(self):
        assert bucket_events([], 2.0) == []

    def test_boundary_event_goes_to_later_bucket(self):
        buckets = bucket_events([(2.0, Direction.UP)], 2.0)
        assert buckets[0].total() == 0
        assert buckets[1].counts[Direction.UP] == 1

    def test_every_bucket_carries_full_label_domain(self):
        buckets = bucket_events([(1.0, Emotion.SAD)], 2.0)
        assert set(buckets[0].counts) == set(Emotion)

    def test_non_positive_width_rejected(self):
        with pytest.raises(ValueError, match="width"):
            bucket_events([(1.0, Direction.UP)], 0.0)

    def test_mixed_label_types_rejected(self):
        with pytest.raises(ValueError, match="mixed"):
            bucket_events([(1.0, Direction.UP), (2.0, Emotion.SAD)], 2.0)

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError, match="negative"):
            bucket_events([(-1.0, Direction.UP)], 2.0)

    def test_thousand_random_events_match_oracle(self):
        rng = random.Random(3)
        events = sorted(
            ((rng.uniform(0, 120), rng.choice(list(Direction))) for _ in range(1000)),
            key=lambda pair: pair[0],
        )
        width = 2.0
        buckets = bucket_events(events, width)
        oracle = histogram_oracle(events, width)
        for k, bucket in enumerate(buckets):
            for label in Direction:
                assert bucket.counts[label] == oracle.get((k, label), 0)
        assert sum(b.total() for b in buckets) == 1000


event_lists = st.lists(
    st.tuples(
        st.floats(min_value=0, max_value=500, allow_nan=False),
        st.sampled_from(list(Direction)),
    ),
    max_size=200,
)

widths = st.one_of(st.just(1.0), st.just(2.0), st.just(5.0),
                   st.floats(min_value=0.25, max_value=10, allow_nan=False))


@settings(max_examples=60)
@given(event_lists, widths)
def test_conservation_property(events, width):
    buckets = bucket_events(sorted(events, key=lambda p: p[0]), width)
    assert sum(bucket.total() for bucket in buckets) == len(events)


@settings(max_examples=60)
@given(event_lists)
def test_partition_property(events):
    events = sorted(events, key=lambda p: p[0])
    width = 2.0
    buckets = bucket_events(events, width)
    # disjoint, contiguous from 0
    for k, bucket in enumerate(buckets):
        assert bucket.start_t == k * width
    # every event falls in exactly one bucket's interval
    for t, _ in events:
        holders = [b for b in buckets if b.start_t <= t < b.end_t]
        assert len(holders) == 1


@settings(max_examples=60)
@given(event_lists)
def test_width_refinement_property(events):
    events = sorted(events, key=lambda p: p[0])
    fine = bucket_events(events, 1.0)
    coarse = bucket_events(events, 2.0)
    for k, bucket in enumerate(coarse):
        for label in Direction:
            fine_sum = 0
            for j in (2 * k, 2 * k + 1):
                if j < len(fine):
                    fine_sum += fine[j].counts[label]
            assert bucket.counts[label] == fine_sum


def _movement_session(user, events, day=2):
    return Session(
        session_date=dt.date(2016, 3, day),
        user_label=user,
        movements=[MovementEvent(t, d, i) for t, d, i in events],
    )


def _emotion_session(user, events, day=2):
    return Session(
        session_date=dt.date(2016, 3, day),
        user_label=user,
        emotions=[EmotionEvent(t, e) for t, e in events],
    )


class TestScatterSeries:
    def test_single_event_self_normalizes(self):
        series = scatter_series([_movement_session("u", [(2.23, Direction.RIGHT, 6.78485)])])
        assert list(series) == ["u"]
        point = series["u"][0]
        assert point.color_rank == 1.0
        assert point.intensity == 6.78485

    def test_linear_normalization_across_users(self):
        sessions = [
            _movement_session("a", [(1.0, Direction.UP, 5.0)]),
            _movement_session("b", [(2.0, Direction.DOWN, 10.0)]),
        ]
        series = scatter_series(sessions)
        assert series["a"][0].color_rank == 0.5
        assert series["b"][0].color_rank == 1.0

    def test_empty_sessions(self):
        assert scatter_series([]) == {}

    def test_zero_max_intensity_gives_zero_rank(self):
        series = scatter_series([_movement_session("u", [(1.0, Direction.UP, 0.0)])])
        assert series["u"][0].color_rank == 0.0

    def test_points_ordered_by_time_across_sessions(self):
        sessions = [
            _movement_session("u", [(5.0, Direction.UP, 5.0)], day=3),
            _movement_session("u", [(1.0, Direction.DOWN, 5.0)], day=2),
        ]
        series = scatter_series(sessions)
        assert [p.t for p in series["u"]] == [1.0, 5.0]

    def test_normalization_never_reorders(self):
        rng = random.Random(5)
        events = [(i * 0.5, rng.choice(list(Direction)), rng.uniform(4.1, 30)) for i in range(50)]
        series = scatter_series([_movement_session("u", events)])
        points = series["u"]
        ranked = max(points, key=lambda p: p.color_rank)
        strongest = max(points, key=lambda p: p.intensity)
        assert ranked == strongest
        assert all(0.0 <= p.color_rank <= 1.0 for p in points)


class TestEmotionSeries:
    def test_reference_emotion_bucket(self):
        buckets = emotion_series([_emotion_session("u", [(7.98, Emotion.ANGRY)])])
        assert len(buckets) == 4  # [0,2) .. [6,8)
        assert buckets[3].counts[Emotion.ANGRY] == 1
        assert sum(b.total() for b in buckets) == 1

    def test_filter_keeps_span_but_drops_counts(self):
        buckets = emotion_series(
            [_emotion_session("u", [(7.98, Emotion.ANGRY)])], only=["HAPPY"]
        )
        assert len(buckets) == 4
        assert all(set(b.counts) == {Emotion.HAPPY} for b in buckets)
        assert all(b.total() == 0 for b in buckets)

    def test_filter_accepts_enum_members(self):
        buckets = emotion_series(
            [_emotion_session("u", [(1.0, Emotion.SAD)])], only=[Emotion.SAD]
        )
        assert buckets[0].counts[Emotion.SAD] == 1

    def test_unknown_filter_label_rejected(self):
        with pytest.raises(ValueError, match="BORED"):
            emotion_series([_emotion_session("u", [(1.0, Emotion.SAD)])], only=["BORED"])

    def test_mixed_fixture_matches_oracle(self):
        rng = random.Random(12)
        events = sorted(
            ((rng.uniform(0, 30), rng.choice(list(Emotion))) for _ in range(50)),
            key=lambda pair: pair[0],
        )
        sessions = [_emotion_session("u", events)]
        buckets = emotion_series(sessions, 2.0)
        oracle = histogram_oracle(events, 2.0)
        for k, bucket in enumerate(buckets):
            for label in Emotion:
                assert bucket.counts[label] == oracle.get((k, label), 0)

    def test_sums_across_users(self):
        sessions = [
            _emotion_session("a", [(1.0, Emotion.SAD)]),
            _emotion_session("b", [(1.5, Emotion.SAD)]),
        ]
        buckets = emotion_series(sessions)
        assert buckets[0].counts[Emotion.SAD] == 2


class TestDirectionSeries:
    def test_counts_movements_across_users(self):
        sessions = [
            _movement_session("a", [(2.23, Direction.RIGHT, 6.78485)]),
            _movement_session("b", [(2.5, Direction.RIGHT, 5.0)]),
        ]
        buckets = direction_series(sessions)
        assert buckets[1].counts[Direction.RIGHT] == 2
