import pytest

from spex1p.canon import is_isomorphic
from spex1p.constructions import spex_candidate
from spex1p.rewiring import REPLAYS, ReplayError, rewiring_replay


@pytest.mark.parametrize("name", list(REPLAYS))
def test_replay_defaults(name):
    r = rewiring_replay(name)
    assert 14 <= r.n <= 20
    assert r.ok, r.to_dict()
    assert r.lambda_after > r.lambda_before + 10 * r.tol
    assert r.g_new.n == r.g.n


@pytest.mark.parametrize("name", ["k4-double-chord", "k4-chord-and-edge", "k4-wrap-chords"])
def test_ladder_rewirings_end_at_candidate(name):
    r = rewiring_replay(name)
    assert is_isomorphic(r.g_new, spex_candidate(4, r.n)[0])


def test_chain_uses_permuted_vector():
    r = rewiring_replay("k4-chain-shift")
    assert r.y_delta is not None and r.y_delta > 0


@pytest.mark.parametrize("name, n, k", [("k4-chain-shift", 18, 2), ("k4-chain-close", 16, 3), ("k5-quad-restore", 14, 0)])
def test_other_sizes(name, n, k):
    assert rewiring_replay(name, n, k).ok


def test_replay_errors():
    with pytest.raises(ReplayError):
        rewiring_replay("missing")
    with pytest.raises(ReplayError):
        rewiring_replay("k4-double-chord", n=15)
    with pytest.raises(ReplayError):
        rewiring_replay("k4-chain-shift", n=20, k=1)
    with pytest.raises(ReplayError):
        rewiring_replay("k4-chain-shift", n=14, k=6)


def test_replay_serialization():
    d = rewiring_replay("k5-quad-restore").to_dict()
    assert d["schema"] == "spex1p.replay/1" and d["ok"] is True
