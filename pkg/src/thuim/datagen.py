"""Seeded synthetic quantitative databases.

Item popularity follows a Zipf-like law (exponent 1) over a random ranking of
the item ids, so a handful of items are frequent and the long tail is sparse.
This is a scale/sparsity stand-in for IBM Quest style data, not a clone of it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import QuantitativeDatabase, Transaction

ZIPF_EXPONENT = 1.0


@dataclass(frozen=True)
class GenParams:
    n_items: int = 870
    n_transactions: int = 100_000
    avg_len: float = 10.0
    max_len: int = 29
    max_quantity: int = 10
    max_profit: int = 100
    seed: int = 0

    def validate(self) -> None:
        if self.n_items < 1:
            raise ValueError("n_items must be positive")
        if self.n_transactions < 0:
            raise ValueError("n_transactions must be non-negative")
        if self.max_quantity < 1 or self.max_profit < 1:
            raise ValueError("max_quantity and max_profit must be positive")
        if not 1 <= self.avg_len <= self.max_len <= self.n_items:
            raise ValueError("need 1 <= avg_len <= max_len <= n_items")


def generate(params: GenParams) -> QuantitativeDatabase:
    params.validate()
    rng = np.random.default_rng(params.seed)
    n = params.n_items
    ids = np.arange(1, n + 1)
    profit = rng.integers(1, params.max_profit, size=n, endpoint=True)
    ranking = rng.permutation(n)
    weights = 1.0 / np.arange(1, n + 1) ** ZIPF_EXPONENT
    popularity = np.empty(n)
    popularity[ranking] = weights / weights.sum()

    m = params.n_transactions
    # 1 + Poisson keeps the mean at avg_len without a zero-length mass to clip
    lengths = np.minimum(1 + rng.poisson(params.avg_len - 1, size=m), params.max_len)
    cdf = np.cumsum(popularity)
    cdf[-1] = 1.0
    # Draw with replacement in bulk and keep first occurrences: that is the
    # same as successive weighted sampling without replacement.
    pool = np.searchsorted(cdf, rng.random(2 * int(lengths.sum()) + 64), side="right").tolist()
    pos = 0
    transactions = []
    for tid, length in enumerate(lengths.tolist(), start=1):
        chosen: dict[int, None] = {}
        while len(chosen) < length:
            if pos == len(pool):
                pool = np.searchsorted(cdf, rng.random(4096), side="right").tolist()
                pos = 0
            chosen[pool[pos]] = None
            pos += 1
        picked = np.array(sorted(chosen))
        qty = rng.integers(1, params.max_quantity, size=length, endpoint=True)
        transactions.append(Transaction(
            tid,
            tuple(ids[picked].tolist()),
            tuple(qty.tolist()),
            tuple((qty * profit[picked]).tolist()),
        ))
    return QuantitativeDatabase(transactions, dict(zip(ids.tolist(), profit.tolist())))
