try:
    import tilecount as tc
except ImportError:
    import _tilecount as tc


def test_counts():
    assert tc.count(2, 4) == 2
    assert tc.count(2, 12) == 4
    assert tc.count(4, 16) == 6
    assert tc.count(3, 5) == 0
    assert tc.count_ie(2, 12) == 4
    assert tc.count_box(2, [3, 2]) == 1
    assert tc.total_count(12) == 16


def test_counts_are_python_ints():
    c = tc.family_2k(30)["count"]
    assert isinstance(c, int)
    assert c == 155117520
    assert tc.family_2k(30)["holds"]


def test_enumerate_and_oracle_agree():
    enumerated = tc.enumerate_interval(2, 12)
    assert len(enumerated) == 4
    assert enumerated[0]["A"] == [1, 2]
    assert enumerated[0]["B"] == [0, 2, 4, 6, 8, 10]

    oracle = tc.brute_force_tilings(2, list(range(1, 13)))
    key = lambda t: (tuple(t["A"]), tuple(t["B"]))
    assert sorted(map(key, oracle)) == sorted(map(key, enumerated))


def test_validity_and_bounds():
    assert tc.is_valid_tiling([1, 2, 5, 6, 9, 10], [0, 2], list(range(1, 13)))
    assert not tc.is_valid_tiling([1, 2], [0, 1], [1, 2, 3, 4])
    assert tc.upper_bound_holds(4, 16)
    assert tc.max_count(16) == (4, 6)


def test_probe_and_subtile():
    report = tc.conjecture_probe(2, 4, 6)
    assert report["violations"] == []
    assert report["max_count"] == 2
    assert report["argmax_C"] == [1, 2, 3, 4]

    verdict = tc.subtile_bound_check(2, [1, 2, 5, 6], [0, 2], 8)
    assert verdict["bound_holds"]
    assert verdict["injective"]
    assert verdict["tilings_of_tile"] == 2


def test_work_cap():
    import pytest

    with pytest.raises(tc.WorkCapExceeded):
        tc.brute_force_tilings(2, list(range(1, 25)), 3)
