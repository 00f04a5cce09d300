"""Targeted high-utility itemset mining over utility-lists.

The search is the usual utility-list depth-first enumeration, extended with a
cursor into the (sorted) target pattern.  Each extension item is compared with
the next unmatched target item by serial number: equal advances the cursor,
smaller keeps it, larger means no itemset along this branch or any later
sibling can contain the target, so the sibling loop stops.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .model import ItemIndex, QuantitativeDatabase, build_index, validate_target
from .ulist import UtilityList, build_initial_ulists, construct

Itemset = tuple[int, ...]


class Decision(enum.Enum):
    ADVANCE = "advance"
    KEEP = "keep"
    PRUNE = "prune"


@dataclass(frozen=True)
class TargetPattern:
    items: tuple[int, ...] = ()

    @property
    def beta(self) -> int:
        return len(self.items)


@dataclass
class MiningOutcome:
    """Results in deterministic order plus search instrumentation.

    ``results`` holds (itemset, utility) pairs; itemsets are tuples in
    processing order and the list is sorted lexicographically by it.
    ``candidates`` counts every utility-list built (initial ones included),
    ``peak_elements`` the largest number of list elements alive at once.
    """

    results: list[tuple[Itemset, int]] = field(default_factory=list)
    candidates: int = 0
    elapsed: float = 0.0
    peak_elements: int = 0
    index: ItemIndex | None = None

    def as_dict(self) -> dict[frozenset, int]:
        return {frozenset(X): u for X, u in self.results}

    def __len__(self):
        return len(self.results)


class SearchSink:
    """Collects emitted itemsets and tracks list counters during a search."""

    def __init__(self):
        self.found: list[tuple[Itemset, int]] = []
        self.candidates = 0
        self.live = 0
        self.peak = 0

    def add_lists(self, lists: Sequence[UtilityList]) -> None:
        self.candidates += len(lists)
        self.live += sum(len(ul) for ul in lists)
        self.peak = max(self.peak, self.live)

    def drop_lists(self, lists: Sequence[UtilityList]) -> None:
        self.live -= sum(len(ul) for ul in lists)


def match_step(item: int, cursor: int, target: TargetPattern,
               index: ItemIndex) -> tuple[Decision, int]:
    if cursor >= target.beta:
        return Decision.KEEP, cursor
    s = index.serial[item]
    t = index.serial[target.items[cursor]]
    if s == t:
        return Decision.ADVANCE, cursor + 1
    if s < t:
        return Decision.KEEP, cursor
    return Decision.PRUNE, cursor


def search(prefix: UtilityList | None, extensions: Sequence[UtilityList], sigma: int,
           cursor: int, target: TargetPattern, index: ItemIndex, sink: SearchSink) -> None:
    """Depth-first extension of ``prefix`` by each list in ``extensions``.

    ``extensions`` must be sorted by processing order of their last item;
    the prune decision relies on it.
    """
    for i, x in enumerate(extensions):
        decision, current = match_step(x.item, cursor, target, index)
        if decision is Decision.PRUNE:
            break
        if not len(x):
            # absent from every transaction; only reachable when sigma == 0
            continue
        if x.sum_iutils >= sigma and current >= target.beta:
            sink.found.append((x.itemset, x.sum_iutils))
        if x.sum_iutils + x.sum_rutils >= sigma and i + 1 < len(extensions):
            children = [construct(prefix, x, y) for y in extensions[i + 1:]]
            sink.add_lists(children)
            search(x, children, sigma, current, target, index, sink)
            sink.drop_lists(children)


def mine(db: QuantitativeDatabase, sigma: int, target: Iterable[int] = (),
         order: str = "twu-asc") -> MiningOutcome:
    """All itemsets with utility >= sigma that contain every target item."""
    start = time.perf_counter()
    index = build_index(db, sigma, order)
    items = validate_target(target, index)
    if items is None:
        return MiningOutcome(elapsed=time.perf_counter() - start, index=index)
    pattern = TargetPattern(items)
    sink = SearchSink()
    initial = build_initial_ulists(db, index)
    sink.add_lists(initial)
    search(None, initial, sigma, 0, pattern, index, sink)
    rank = index.rank
    results = sorted(sink.found, key=lambda r: [rank[x] for x in r[0]])
    return MiningOutcome(results, sink.candidates, time.perf_counter() - start,
                         sink.peak, index)
