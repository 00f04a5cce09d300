import random

import pytest

from conftest import A, B, C, D, E, F, G, DATA, iset, random_instance
from thuim.cli import format_results
from thuim.miner import Decision, SearchSink, TargetPattern, match_step, mine, search
from thuim.model import build_index, itemset_utility, parse_database
from thuim.oracle import brute_force_thuis
from thuim.ulist import UtilityList, build_initial_ulists


@pytest.fixture
def index130(table1):
    return build_index(table1, 130)


@pytest.mark.parametrize("item, cursor, expected", [
    (G, 0, (Decision.KEEP, 0)),
    (E, 0, (Decision.ADVANCE, 1)),
    (A, 0, (Decision.PRUNE, 0)),
    (D, 0, (Decision.PRUNE, 0)),
    (B, 1, (Decision.KEEP, 1)),
    (F, 1, (Decision.ADVANCE, 2)),
    (G, 2, (Decision.KEEP, 2)),
    (F, 2, (Decision.KEEP, 2)),
])
def test_match_step(index130, item, cursor, expected):
    assert match_step(item, cursor, TargetPattern((E, F)), index130) == expected


def test_match_step_empty_target(index130):
    assert match_step(F, 0, TargetPattern(), index130) == (Decision.KEEP, 0)


def test_golden_ef(table1):
    out = mine(table1, 130, (E, F))
    assert out.as_dict() == {iset("ebf"): 145, iset("ef"): 139}
    # ordered lexicographically under the processing order g, e, a, d, b, f
    assert out.results == [((E, B, F), 145), ((E, F), 139)]


def test_golden_cf(table1):
    out = mine(table1, 50, (C, F))
    assert out.as_dict() == {
        iset("cadbf"): 71, iset("cabf"): 81, iset("cdbf"): 59, iset("cbf"): 66,
    }


def test_unpromising_target_short_circuits(table1):
    out = mine(table1, 130, (C, F))
    assert out.results == []
    assert out.candidates == 0


def test_full_hui_set(table1):
    out = mine(table1, 130)
    assert format_results(out.results) == (DATA / "table1_hui_130.txt").read_text()


def test_sigma_zero_lists_every_occurring_itemset(table1):
    out = mine(table1, 0)
    assert out.as_dict() == brute_force_thuis(table1, 0)
    assert all(u > 0 for _, u in out.results)


def test_candidates_count_every_list():
    # one dense transaction: every non-empty subset of 5 items is built once
    db = parse_database("1 2 3 4 5:15:1 2 3 4 5\n")
    out = mine(db, 0)
    assert out.candidates == 2 ** 5 - 1
    assert len(out.results) == 2 ** 5 - 1


def test_no_promising_items(table1):
    out = mine(table1, table1.total_utility + 1)
    assert out.results == []
    assert out.candidates == 0


def test_peak_elements(table1):
    out = mine(table1, 0)
    initial = sum(len(t) for t in table1)
    assert out.peak_elements >= initial


def test_reported_utilities_match_scan(table1):
    for X, u in mine(table1, 60, (B,)).results:
        assert u == itemset_utility(table1, X)
        assert B in X


def test_search_bound_guard(index130):
    # prefix bound below sigma: nothing is constructed
    low = UtilityList((G,), [5], [6], [10])
    other = UtilityList((E,), [5], [21], [5])
    sink = SearchSink()
    search(None, [low, other], 130, 0, TargetPattern(), index130, sink)
    assert sink.candidates == 0
    assert sink.found == []


def test_search_ebf_match(table1, index130):
    uls = {ul.item: ul for ul in build_initial_ulists(table1, index130)}
    from thuim.ulist import construct
    e = uls[E]
    children = [construct(None, e, uls[y]) for y in (A, D, B, F)]
    sink = SearchSink()
    search(e, children, 130, 1, TargetPattern((E, F)), index130, sink)
    assert sorted(sink.found) == [((E, B, F), 145), ((E, F), 139)]


def test_prune_stops_sibling_loop(table1, index130):
    # at cursor 0 the target item is e; a and everything after it is pruned
    uls = build_initial_ulists(table1, index130)
    sink = SearchSink()
    search(None, [ul for ul in uls if ul.item in (A, D, B, F)], 130, 0,
           TargetPattern((E, F)), index130, sink)
    assert sink.candidates == 0


@pytest.mark.parametrize("seed", range(40))
def test_random_against_brute_force(seed):
    db, sigma, target = random_instance(random.Random(seed))
    assert mine(db, sigma, target).as_dict() == brute_force_thuis(db, sigma, target)


def test_deterministic_output(table1):
    a = mine(table1, 60)
    b = mine(table1, 60)
    assert a.results == b.results
    assert a.candidates == b.candidates
