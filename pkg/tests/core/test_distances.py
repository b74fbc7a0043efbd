"""Tests for the total variation distance."""

import numpy as np
import pytest

from tests.helpers import importorskip

hypothesis = importorskip("hypothesis")

from hypothesis import given, settings
from hypothesis import strategies as st

from exchkit import TupleDistribution, tv_distance


def _law(weights, k=1):
    weights = np.asarray(weights, dtype=float)
    c = round(weights.size ** (1 / k))
    return TupleDistribution.from_weights(k, c, weights)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ([0.3, 0.7], [0.3, 0.7], 0.0),
        ([1.0, 0.0], [0.0, 1.0], 1.0),
        ([0.5, 0.5], [0.25, 0.75], 0.25),
    ],
)
def test_tv_distance_examples(p, q, expected):
    assert tv_distance(_law(p), _law(q)) == pytest.approx(expected, abs=1e-15)


def test_tv_distance_dimension_mismatch():
    with pytest.raises(ValueError, match="Dimension mismatch"):
        tv_distance(_law([0.5, 0.5]), _law([0.2, 0.3, 0.5]))
    with pytest.raises(ValueError):
        tv_distance(_law([0.5, 0.5]), _law([0.25] * 4, k=2))


def test_tv_distance_is_sup_over_events():
    rng = np.random.default_rng(3)
    p = _law(rng.dirichlet(np.ones(8)), k=3)
    q = _law(rng.dirichlet(np.ones(8)), k=3)

    masks = np.indices((2,) * 8).reshape(8, -1).T.astype(bool)
    best = max(abs(p.probs[m].sum() - q.probs[m].sum()) for m in masks)

    assert tv_distance(p, q) == pytest.approx(best, abs=1e-14)


weights = st.lists(st.floats(min_value=0.01, max_value=10.0), min_size=4, max_size=4)


@settings(max_examples=200, deadline=None)
@given(weights, weights, weights)
def test_tv_distance_is_a_metric(a, b, c):
    p, q, r = (_law(w, k=2) for w in (a, b, c))

    assert 0.0 <= tv_distance(p, q) <= 1.0
    assert tv_distance(p, q) == pytest.approx(tv_distance(q, p), abs=1e-15)
    assert tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-12
    assert tv_distance(p, p) == 0.0
