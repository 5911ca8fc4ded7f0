"""Exact k-crank tables M_k(m, n) and their residue counts M_k(r, d, n).

For k >= 2 the k-crank only looks at the part counts of the first two
components, and the remaining k - 2 components contribute a factor p_{k-2}.
So with ``P_t(q)`` the generating function of partitions into exactly ``t``
parts::

    D_m(q)   = sum_t P_{t+|m|}(q) * P_t(q)
    M_k(m,n) = [q^n] D_m(q) * 1/(q;q)_inf^(k-2)

``D`` depends only on the order and is cached across k.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import CacheError, OrderExceeded
from .partitions import parts_count_table, pk_table
from .series import QSeries, lag_products

CACHE_VERSION = "v1"
CACHE_ENV = "KCRANK_CACHE_DIR"


@dataclass(frozen=True)
class KCrankTable:
    """M_k(m, n) for 0 <= n <= order.

    For k >= 2 row ``n`` holds ``M_k(0..n, n)`` and negative m is read by
    symmetry. For k = 1 row ``n`` is the full Laurent row ``M(-n..n, n)``.
    """

    k: int
    order: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} rows, got {len(self.rows)}")
        width = (lambda n: 2 * n + 1) if self.full else (lambda n: n + 1)
        for n, row in enumerate(self.rows):
            if len(row) != width(n):
                raise ValueError(f"row {n} has {len(row)} entries, expected {width(n)}")

    @property
    def full(self) -> bool:
        return self.k == 1

    def __call__(self, m: int, n: int) -> int:
        if n < 0 or n > self.order:
            raise OrderExceeded(f"n={n} outside table of order {self.order}")
        if abs(m) > n:
            return 0
        if self.full:
            return self.rows[n][m + n]
        return self.rows[n][abs(m)]

    def row(self, n: int) -> list:
        """``[M_k(m, n) for m in -n..n]``."""
        return [self(m, n) for m in range(-n, n + 1)]

    def row_total(self, n: int) -> int:
        return sum(self.row(n))

    def truncate(self, order: int) -> "KCrankTable":
        if order > self.order:
            raise OrderExceeded(f"cannot extend table of order {self.order} to {order}")
        return KCrankTable(self.k, order, self.rows[: order + 1])


@dataclass(frozen=True)
class ResidueTable:
    k: int
    modulus: int
    order: int
    values: tuple  # values[n][r]

    def __call__(self, r: int, n: int) -> int:
        return self.values[n][r % self.modulus]


@lru_cache(maxsize=8)
def _lag_columns(order: int) -> tuple:
    pct = parts_count_table(order)
    cols = [QSeries(tuple(pct.column(t))) for t in range(order + 1)]
    return tuple(lag_products(cols, cols, order, order))


def build(k: int, order: int) -> KCrankTable:
    """M_k(m, n) for k >= 2 from part-count convolutions."""
    if k < 2:
        raise ValueError("build covers k >= 2; the ordinary crank comes from bivariate.crank_gf")
    if order < 0:
        raise ValueError("order must be nonnegative")
    cols = _lag_columns(order)
    if k > 2:
        tail = QSeries(tuple(pk_table(k - 2, order)))
        cols = [c * tail for c in cols]
    rows = tuple(tuple(cols[m][n] for m in range(n + 1)) for n in range(order + 1))
    return KCrankTable(k, order, rows)


def residues(table: KCrankTable, modulus: int) -> ResidueTable:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    values = []
    for n in range(table.order + 1):
        acc = [0] * modulus
        for m in range(-n, n + 1):
            acc[m % modulus] += table(m, n)
        values.append(tuple(acc))
    return ResidueTable(table.k, modulus, table.order, tuple(values))


def residue_difference_series(table: KCrankTable, modulus: int, r1: int, r2: int) -> QSeries:
    """``sum_n (M_k(r1,d,n) - M_k(r2,d,n)) q^n``."""
    res = residues(table, modulus)
    return QSeries(tuple(res(r1, n) - res(r2, n) for n in range(table.order + 1)))


# ---------------------------------------------------------------------------
# cache files


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "kcrank"


def cache_path(directory: str | os.PathLike, k: int, order: int) -> Path:
    return Path(directory) / f"kcrank_k{k}_N{order}.txt"


def dumps_table(table: KCrankTable) -> str:
    lines = [f"KCRANK {CACHE_VERSION} k={table.k} N={table.order}"]
    for n, row in enumerate(table.rows):
        body = " ".join(map(str, row))
        if table.full:
            lines.append(f"{n}: full {body}")
        else:
            lines.append(f"{n}: {body}")
    lines.append(f"END {len(table.rows)}")
    return "\n".join(lines) + "\n"


def loads_table(text: str, k: int | None = None, order: int | None = None) -> KCrankTable:
    lines = text.splitlines()
    if not lines:
        raise CacheError("empty cache file")
    head = lines[0].split()
    try:
        if len(head) != 4 or head[0] != "KCRANK" or head[1] != CACHE_VERSION:
            raise ValueError
        fk = int(head[2].removeprefix("k="))
        fn = int(head[3].removeprefix("N="))
        if not (head[2].startswith("k=") and head[3].startswith("N=")):
            raise ValueError
    except ValueError:
        raise CacheError(f"bad cache header: {lines[0]!r}") from None
    if (k is not None and fk != k) or (order is not None and fn != order):
        raise CacheError(f"cache holds k={fk}, N={fn}; wanted k={k}, N={order}")
    if len(lines) != fn + 3 or lines[-1] != f"END {fn + 1}":
        raise CacheError("cache file is truncated or has a bad trailer")
    rows = []
    for n, line in enumerate(lines[1:-1]):
        label, _, body = line.partition(":")
        fields = body.split()
        if label != str(n):
            raise CacheError(f"row {n} is labelled {label!r}")
        if fk == 1:
            if not fields or fields[0] != "full":
                raise CacheError(f"row {n} of a k=1 table must be tagged 'full'")
            fields = fields[1:]
        try:
            rows.append(tuple(int(v) for v in fields))
        except ValueError:
            raise CacheError(f"row {n} has a non-integer entry") from None
    try:
        return KCrankTable(fk, fn, tuple(rows))
    except ValueError as exc:
        raise CacheError(str(exc)) from None


def write_cache(table: KCrankTable, directory: str | os.PathLike) -> Path:
    path = cache_path(directory, table.k, table.order)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps_table(table))
    tmp.replace(path)
    return path


def read_cache(directory: str | os.PathLike, k: int, order: int) -> KCrankTable | None:
    path = cache_path(directory, k, order)
    if not path.exists():
        return None
    return loads_table(path.read_text(), k, order)


def get_table(k: int, order: int, directory: str | os.PathLike | None = None) -> KCrankTable:
    """Table for any k >= 1, optionally through the on-disk cache."""
    if directory is not None:
        cached = read_cache(directory, k, order)
        if cached is not None:
            return cached
    if k == 1:
        from .bivariate import crank_gf, to_table

        table = to_table(crank_gf(1, order), 1)
    else:
        table = build(k, order)
    if directory is not None:
        write_cache(table, directory)
    return table
