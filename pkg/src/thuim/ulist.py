"""Utility-lists: per-itemset (tid, iu, ru) triples held as parallel arrays."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .model import ItemIndex, QuantitativeDatabase

_EMPTY = np.empty(0, dtype=np.int64)


class CorruptListError(ValueError):
    pass


class UtilityList:
    """Utility-list of one itemset.

    ``tids`` is strictly increasing; ``iu[k]`` is the utility of the itemset
    in transaction ``tids[k]`` and ``ru[k]`` the utility of the promising
    items that come after its last item in that transaction.
    """

    __slots__ = ("itemset", "tids", "iu", "ru", "sum_iutils", "sum_rutils")

    def __init__(self, itemset: Sequence[int], tids=_EMPTY, iu=_EMPTY, ru=_EMPTY):
        self.itemset = tuple(itemset)
        self.tids = np.asarray(tids, dtype=np.int64)
        self.iu = np.asarray(iu, dtype=np.int64)
        self.ru = np.asarray(ru, dtype=np.int64)
        self.sum_iutils = int(self.iu.sum())
        self.sum_rutils = int(self.ru.sum())

    @property
    def item(self) -> int:
        return self.itemset[-1]

    @property
    def upper_bound(self) -> int:
        return self.sum_iutils + self.sum_rutils

    def __len__(self):
        return len(self.tids)

    def elements(self) -> list[tuple[int, int, int]]:
        return list(zip(self.tids.tolist(), self.iu.tolist(), self.ru.tolist()))

    def dump(self) -> str:
        """Debug dump: the itemset, then one ``tid iu ru`` line per element."""
        lines = [" ".join(map(str, self.itemset))]
        lines += [f"{t} {i} {r}" for t, i, r in self.elements()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (f"UtilityList({self.itemset}, n={len(self)}, "
                f"iu={self.sum_iutils}, ru={self.sum_rutils})")


def build_initial_ulists(db: QuantitativeDatabase, index: ItemIndex) -> list[UtilityList]:
    """Second database scan: one list per promising item, in index order."""
    serial = index.serial
    rank = index.rank
    cols: dict[int, tuple[list, list, list]] = {x: ([], [], []) for x in serial}
    for t in db:
        kept = [(rank[x], x, u) for x, u in zip(t.items, t.utilities) if x in serial]
        if not kept:
            continue
        kept.sort()
        remaining = sum(u for _, _, u in kept)
        for _, x, u in kept:
            remaining -= u
            tids, ius, rus = cols[x]
            tids.append(t.tid)
            ius.append(u)
            rus.append(remaining)
    return [UtilityList((x,), *cols[x]) for x in index.promising]


def construct(p: UtilityList | None, px: UtilityList, py: UtilityList) -> UtilityList:
    """Join the lists of PX and PY into the list of PXY.

    ``p`` is the list of the shared prefix, or None when PX and PY are
    single items. Each tid of PX is located in PY (and in P) by binary
    search over the sorted tid arrays.
    """
    if px.itemset[:-1] != py.itemset[:-1]:
        raise ValueError(f"prefix mismatch: {px.itemset} vs {py.itemset}")
    if p is None:
        if len(px.itemset) != 1:
            raise ValueError("prefix list required for itemsets longer than 1")
    elif p.itemset != px.itemset[:-1]:
        raise ValueError(f"prefix {p.itemset} does not match {px.itemset}")
    itemset = px.itemset + (py.item,)
    if len(px) == 0 or len(py) == 0:
        return UtilityList(itemset)

    pos = np.searchsorted(py.tids, px.tids)
    np.minimum(pos, len(py.tids) - 1, out=pos)
    hit = py.tids[pos] == px.tids
    iy = pos[hit]
    tids = px.tids[hit]
    iu = px.iu[hit] + py.iu[iy]
    if p is not None and len(tids):
        ip = np.searchsorted(p.tids, tids)
        if ip.size and (ip[-1] >= len(p.tids) or not np.array_equal(p.tids[ip], tids)):
            raise CorruptListError(f"prefix list {p.itemset} lacks tids of its extensions")
        iu -= p.iu[ip]
    return UtilityList(itemset, tids, iu, py.ru[iy])
