"""Quantitative transaction databases, utility arithmetic and the item index.

A database is read from the usual utility-mining interchange format, one
transaction per line::

    <item> <item> ...:<transaction utility>:<utility> <utility> ...

All arithmetic is done on the per-transaction item utilities u(x, T), which
are exact integers.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, TextIO

ORDERS = ("twu-asc", "lexi", "twu-desc")
COMMENT_PREFIXES = ("#", "%", "@")


class DatabaseFormatError(ValueError):
    """Raised for malformed input, carrying the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnknownItemError(KeyError):
    def __init__(self, item):
        super().__init__(f"unknown item {item!r}")
        self.item = item


@dataclass(frozen=True)
class Transaction:
    tid: int
    items: tuple[int, ...]
    quantities: tuple[int, ...]
    utilities: tuple[int, ...]
    tu: int = field(init=False)

    def __post_init__(self):
        if not (len(self.items) == len(self.quantities) == len(self.utilities)):
            raise ValueError("items, quantities and utilities differ in length")
        if len(set(self.items)) != len(self.items):
            raise ValueError(f"duplicate item in transaction {self.tid}")
        object.__setattr__(self, "tu", sum(self.utilities))

    def __len__(self):
        return len(self.items)

    def utility_map(self) -> dict[int, int]:
        return dict(zip(self.items, self.utilities))


class QuantitativeDatabase:
    """An immutable sequence of transactions plus a unit-profit table.

    When the database was parsed from utilities alone, quantities are taken
    as 1 and ``profit`` records the first utility seen for each item; the
    miner never reads ``profit``, only the per-transaction utilities.
    """

    def __init__(self, transactions: Sequence[Transaction], profit: Mapping[int, int]):
        self.transactions: tuple[Transaction, ...] = tuple(transactions)
        self.profit: dict[int, int] = dict(profit)
        last = 0
        for t in self.transactions:
            if t.tid <= last:
                raise ValueError("transaction ids must be strictly increasing")
            last = t.tid
            for x, q, u in zip(t.items, t.quantities, t.utilities):
                if x < 0:
                    raise ValueError(f"negative item id {x}")
                if q <= 0 or u <= 0:
                    raise ValueError(f"non-positive quantity/utility for item {x} in T{t.tid}")
                if x not in self.profit:
                    raise ValueError(f"item {x} has no profit entry")
        if any(p <= 0 for p in self.profit.values()):
            raise ValueError("profits must be strictly positive")

    @classmethod
    def from_quantities(
        cls, rows: Iterable[Mapping[int, int]], profit: Mapping[int, int]
    ) -> "QuantitativeDatabase":
        """Build from per-transaction ``{item: quantity}`` maps and a profit table."""
        transactions = []
        for tid, row in enumerate(rows, start=1):
            items = tuple(row)
            for x in items:
                if x not in profit:
                    raise ValueError(f"item {x} has no profit entry")
            qty = tuple(row[x] for x in items)
            utils = tuple(q * profit[x] for x, q in zip(items, qty))
            transactions.append(Transaction(tid, items, qty, utils))
        return cls(transactions, profit)

    def __len__(self):
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)

    @property
    def items(self) -> set[int]:
        return {x for t in self.transactions for x in t.items}

    @property
    def total_utility(self) -> int:
        return sum(t.tu for t in self.transactions)


def parse_database(text: str | TextIO) -> QuantitativeDatabase:
    if isinstance(text, str):
        text = io.StringIO(text)
    transactions = []
    profit: dict[int, int] = {}
    tid = 0
    for lineno, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        parts = line.split(":")
        if len(parts) != 3:
            raise DatabaseFormatError(lineno, f"expected 3 ':'-separated fields, got {len(parts)}")
        try:
            items = tuple(int(s) for s in parts[0].split())
            declared = int(parts[1])
            utils = tuple(int(s) for s in parts[2].split())
        except ValueError as exc:
            raise DatabaseFormatError(lineno, f"non-integer field ({exc})") from None
        if not items:
            raise DatabaseFormatError(lineno, "empty transaction")
        if len(items) != len(utils):
            raise DatabaseFormatError(
                lineno, f"{len(items)} items but {len(utils)} item utilities"
            )
        if any(x < 0 for x in items):
            raise DatabaseFormatError(lineno, "negative item id")
        if any(u <= 0 for u in utils):
            raise DatabaseFormatError(lineno, "item utilities must be positive")
        if len(set(items)) != len(items):
            raise DatabaseFormatError(lineno, "duplicate item in transaction")
        if sum(utils) != declared:
            raise DatabaseFormatError(
                lineno, f"declared transaction utility {declared} != sum {sum(utils)}"
            )
        tid += 1
        for x, u in zip(items, utils):
            profit.setdefault(x, u)
        transactions.append(Transaction(tid, items, (1,) * len(items), utils))
    return QuantitativeDatabase(transactions, profit)


def read_database(path) -> QuantitativeDatabase:
    with open(path, encoding="utf-8") as fh:
        return parse_database(fh)


def format_transaction(t: Transaction) -> str:
    return "{}:{}:{}".format(
        " ".join(map(str, t.items)), t.tu, " ".join(map(str, t.utilities))
    )


def serialize_database(db: QuantitativeDatabase) -> str:
    return "".join(format_transaction(t) + "\n" for t in db)


def write_database(db: QuantitativeDatabase, fh: TextIO) -> None:
    for t in db:
        fh.write(format_transaction(t))
        fh.write("\n")


def itemset_utility(db: QuantitativeDatabase, itemset: Iterable[int]) -> int:
    """Utility of ``itemset``: summed over every transaction containing all of it."""
    X = set(itemset)
    if not X:
        raise ValueError("itemset must be non-empty")
    known = db.items
    for x in X:
        if x not in known:
            raise UnknownItemError(x)
    total = 0
    for t in db:
        umap = t.utility_map()
        if X <= umap.keys():
            total += sum(umap[x] for x in X)
    return total


def compute_twu(db: QuantitativeDatabase) -> dict[int, int]:
    twu: dict[int, int] = {}
    for t in db:
        for x in t.items:
            twu[x] = twu.get(x, 0) + t.tu
    return twu


@dataclass(frozen=True)
class ItemIndex:
    """Processing order over all items and serial numbers for promising ones.

    ``rank`` gives each item's position in ``order``; ``serial`` is defined
    only for items whose TWU reaches ``sigma`` and runs 1..P along the order.
    """

    sigma: int
    twu: Mapping[int, int]
    order: tuple[int, ...]
    rank: Mapping[int, int]
    serial: Mapping[int, int]
    kind: str = "twu-asc"

    def is_promising(self, item: int) -> bool:
        return item in self.serial

    @property
    def promising(self) -> tuple[int, ...]:
        return tuple(x for x in self.order if x in self.serial)

    def sort_key(self, item: int) -> int:
        return self.rank[item]


def _order_key(kind: str, twu: Mapping[int, int]):
    # Ties always break on ascending item id.
    if kind == "twu-asc":
        return lambda x: (twu[x], x)
    if kind == "twu-desc":
        return lambda x: (-twu[x], x)
    if kind == "lexi":
        return lambda x: x
    raise ValueError(f"unknown order {kind!r}; expected one of {ORDERS}")


def build_index(db: QuantitativeDatabase, sigma: int, order: str = "twu-asc",
                twu: Mapping[int, int] | None = None) -> ItemIndex:
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    if twu is None:
        twu = compute_twu(db)
    ordered = tuple(sorted(twu, key=_order_key(order, twu)))
    rank = {x: i for i, x in enumerate(ordered)}
    serial = {}
    for x in ordered:
        if twu[x] >= sigma:
            serial[x] = len(serial) + 1
    return ItemIndex(sigma, dict(twu), ordered, rank, serial, order)


def validate_target(raw: Iterable[int], index: ItemIndex) -> tuple[int, ...] | None:
    """Deduplicate and sort a target under the index order.

    Returns None when some target item is unknown or unpromising: no itemset
    containing it can reach the threshold. An empty target is returned as ().
    """
    items = set(raw)
    for x in items:
        if x not in index.serial:
            return None
    return tuple(sorted(items, key=index.rank.__getitem__))
