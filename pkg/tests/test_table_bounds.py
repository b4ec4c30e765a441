import math

import pytest

from equistick.bounds import composite_bound, lower_sanity, report_composite, report_single, single_bound
from equistick.table import entry_names, get_entry, load_table

NON_ALTERNATING_8 = ("8_19", "8_20", "8_21")


def test_table_covers_census_through_eight():
    names = set(load_table())
    expected = {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"}
    expected |= {f"7_{k}" for k in range(1, 8)} | {f"8_{k}" for k in range(1, 22)}
    assert expected <= names
    assert "unknot2" in names


def test_census_order():
    names = entry_names()
    assert names[:3] == ["unknot2", "3_1", "4_1"]
    assert names.index("8_2") < names.index("8_10")


@pytest.mark.parametrize("name, c, n, det", [("3_1", 3, 5, 3), ("4_1", 4, 6, 5), ("5_1", 5, 7, 5), ("8_19", 8, 7, 3)])
def test_entry_metadata(name, c, n, det):
    e = get_entry(name)
    assert (e.crossing_number, e.arc_index, e.determinant) == (c, n, det)


def test_arc_index_bounds_hold():
    for e in load_table().values():
        if e.nontrivial:
            assert e.arc_index <= e.crossing_number + 2
            if e.alternating:
                assert e.arc_index == e.crossing_number + 2


@pytest.mark.parametrize("name", NON_ALTERNATING_8)
def test_non_alternating_entries(name):
    e = get_entry(name)
    assert e.nonalternating_prime
    assert e.arc_index <= e.crossing_number


def test_unknown_entry():
    with pytest.raises(KeyError):
        get_entry("11n_34")


@pytest.mark.parametrize("c, expected", [(3, 6), (4, 7), (5, 7), (6, 7), (7, 8), (8, 8)])
def test_lower_sanity(c, expected):
    assert lower_sanity(c) == expected
    assert lower_sanity(c) == math.ceil((7 + math.sqrt(8 * c + 1)) / 2)


def test_single_bounds():
    assert single_bound(get_entry("3_1")) == 8
    assert single_bound(get_entry("4_1")) == 10
    assert single_bound(get_entry("8_19")) == 14


def test_composite_bounds():
    t, f, n = get_entry("3_1"), get_entry("4_1"), get_entry("8_19")
    assert composite_bound(t, t) == 12
    assert composite_bound(t, f) == 14
    assert composite_bound(t, n) == 2 * 3 + 2 * 8 - 4
    assert composite_bound(n, n) == 24


def test_report_flags():
    r = report_single(get_entry("3_1"), 8)
    assert r.passed and r.upper_pass and r.lower_pass
    assert not report_single(get_entry("3_1"), 9).passed
    assert not report_single(get_entry("3_1"), 5).lower_pass
    assert report_single(get_entry("unknot2"), 4).passed
    assert report_single(get_entry("3_1"), 10, doubled=True).passed
    c = report_composite(get_entry("3_1"), get_entry("3_1"), 12)
    assert c.passed and c.to_dict()["upper_bound"] == 12


def test_composite_with_actual_table_counts():
    # non-alternating factors use their own arc index, which may beat the bound's assumption
    n = get_entry("8_19")
    sticks = 2 * n.arc_index + 2 * n.arc_index - 8
    assert report_composite(n, n, sticks).passed
