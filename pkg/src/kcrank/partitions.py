"""Brute-force enumeration of partitions and k-colored partitions.

Everything here counts objects one at a time. It is the ground truth the
series-based tables are checked against, so it deliberately avoids any
generating-function shortcut except in :func:`pk_table`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator

from .errors import BudgetExceeded, EmptyPartition, NeedsTwoComponents
from .series import PochhammerSpec, pochhammer

DEFAULT_BUDGET = 20
DEFAULT_RANK_BUDGET = 70


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts)) or "()"


@dataclass(frozen=True)
class ColoredPartition:
    components: tuple

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise ValueError("a colored partition needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def weight(self) -> int:
        return sum(c.weight for c in self.components)

    def swap_first_two(self) -> "ColoredPartition":
        if self.k < 2:
            raise NeedsTwoComponents("swap needs at least two components")
        c = self.components
        return ColoredPartition((c[1], c[0]) + c[2:])

    def __str__(self):
        return "(" + " | ".join("".join(map(str, c.parts)) or "." for c in self.components) + ")"


def _partition_tuples(n: int) -> Iterator[tuple]:
    # ZS1 (Zoghbi-Stojmenovic): reverse lexicographic order, one tuple per step
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` once, in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _partition_tuples(n):
        yield Partition(parts)


def _compositions(n: int, k: int) -> Iterator[tuple]:
    # weak compositions of n into k parts; first entry descending
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_colored(k: int, n: int) -> Iterator[ColoredPartition]:
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    for weights in _compositions(n, k):
        pools = [list(enumerate_partitions(w)) for w in weights]
        for combo in cartesian(*pools):
            yield ColoredPartition(combo)


def kcrank(cp: ColoredPartition) -> int:
    """Number of parts of the first component minus that of the second."""
    if cp.k < 2:
        raise NeedsTwoComponents(f"the k-crank needs k >= 2, got k={cp.k}")
    return len(cp.components[0]) - len(cp.components[1])


def ag_crank(p: Partition) -> int:
    """Andrews-Garvan crank: largest part if there are no ones, else mu - omega."""
    if not p.parts:
        raise EmptyPartition("the crank of the empty partition is undefined")
    ones = p.parts.count(1)
    if ones == 0:
        return p.parts[0]
    return sum(1 for x in p.parts if x > ones) - ones


def dyson_rank(p: Partition) -> int:
    if not p.parts:
        raise EmptyPartition("the rank of the empty partition is undefined")
    return p.parts[0] - len(p.parts)


@dataclass(frozen=True)
class PartsCountTable:
    """``values[n][t]`` = number of partitions of ``n`` with exactly ``t`` parts."""

    order: int
    values: tuple

    def __call__(self, n: int, t: int) -> int:
        if t < 0 or t > n:
            return 0
        return self.values[n][t]

    def column(self, t: int) -> list:
        """Coefficients of ``q^n``, ``n = 0..order``, in the count for ``t`` parts."""
        return [self(n, t) for n in range(self.order + 1)]


def parts_count_table(order: int) -> PartsCountTable:
    if order < 0:
        raise ValueError("order must be nonnegative")
    rows = [[1] + [0] * order]
    for n in range(1, order + 1):
        row = [0] * (order + 1)
        for t in range(1, n + 1):
            # drop a part equal to 1, or remove 1 from each of the t parts
            row[t] = rows[n - 1][t - 1] + (rows[n - t][t] if n - t >= t else 0)
        rows.append(row)
    return PartsCountTable(order, tuple(tuple(r) for r in rows))


def pk_table(k: int, order: int) -> list:
    """``p_k(0..order)``, coefficients of ``1/(q;q)_inf^k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(pochhammer(PochhammerSpec(1, 1, 1, -k), order).coeffs)


def distinct_odd_parity_counts(order: int) -> tuple:
    """Partitions into distinct odd parts split by parity of the number of parts.

    Returns ``(od0, od1)`` lists indexed by ``n = 0..order``.
    """
    od = ([0] * (order + 1), [0] * (order + 1))

    def walk(smallest, total, count):
        od[count & 1][total] += 1
        part = smallest
        while total + part <= order:
            walk(part + 2, total + part, count + 1)
            part += 2

    walk(1, 0, 0)
    return od


def _check_budget(order, budget):
    if order > budget:
        raise BudgetExceeded(f"enumeration to weight {order} exceeds the budget of {budget}")


def brute_force_table(k: int, order: int, budget: int = DEFAULT_BUDGET):
    """Histogram of the k-crank over every k-colored partition of weight <= order."""
    from .tables import KCrankTable

    if k < 2:
        raise NeedsTwoComponents("brute force tables need k >= 2")
    _check_budget(order, budget)
    rows = []
    for n in range(order + 1):
        hist = Counter(kcrank(cp) for cp in enumerate_colored(k, n))
        rows.append(tuple(hist.get(m, 0) for m in range(n + 1)))
        if any(hist[m] != hist[-m] for m in hist):
            raise AssertionError(f"k-crank histogram at n={n} is not symmetric")
    return KCrankTable(k, order, tuple(rows))


def crank_histogram(n: int) -> Counter:
    """Andrews-Garvan crank counts over the partitions of ``n >= 1``."""
    return Counter(ag_crank(p) for p in enumerate_partitions(n))


def rank_parity_counts(n: int, budget: int = DEFAULT_RANK_BUDGET) -> tuple:
    """``(even, odd)`` counts of partitions of ``n`` by parity of Dyson's rank."""
    _check_budget(n, budget)
    counts = [0, 0]
    for parts in _partition_tuples(n):
        if parts:
            counts[(parts[0] - len(parts)) & 1] += 1
        else:
            counts[0] += 1
    return counts[0], counts[1]
