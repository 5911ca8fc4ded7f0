"""Symmetrized and parity-weighted k-crank moments.

The weighted 2j-th moment

    mu_{2j,k}(-1, n) = sum_m C(m+j-1, 2j) (-1)^m M_k(m, n)

is computed three ways: directly from a table, from the weakly increasing
j-fold sum of q^(n_1+...+n_j) / prod (1+q^(n_i))^2, and from the strictly
increasing sum weighted by m_1 (m_2-m_1) ... (m_j-m_{j-1}). The last two
share the prefactor 1 / ((q;q)^(k-2) (-q;q)^2).

``C(a, b)`` is always the polynomial binomial a(a-1)...(a-b+1)/b!, which is
nonzero for negative ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .series import PochhammerSpec, QSeries, pochhammer, unit, zero

ROUTES = ("direct", "gf1", "gf2")


@dataclass(frozen=True)
class MomentValue:
    j: int
    k: int
    n: int
    value: int
    route: str


def gen_binom(a: int, b: int) -> int:
    if b < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def mu_symmetrized(j: int, k: int, table, order: int | None = None) -> list:
    """``mu_{j,k}(n)`` for ``n = 0..order``; odd ``j`` sums to zero by symmetry."""
    if table.k != k:
        raise ValueError(f"table is for k={table.k}, not k={k}")
    order = table.order if order is None else order
    off = (j - 1) // 2
    return [
        sum(gen_binom(m + off, j) * table(m, n) for m in range(-n, n + 1))
        for n in range(order + 1)
    ]


def mu_weighted_direct(j: int, k: int, table, order: int | None = None) -> list:
    """``mu_{2j,k}(-1, n)``; ``j`` is half the moment order."""
    if table.k != k:
        raise ValueError(f"table is for k={table.k}, not k={k}")
    order = table.order if order is None else order
    return [
        sum(
            gen_binom(m + j - 1, 2 * j) * (-1 if m & 1 else 1) * table(m, n)
            for m in range(-n, n + 1)
        )
        for n in range(order + 1)
    ]


def _prefactor(k: int, order: int) -> QSeries:
    return pochhammer(PochhammerSpec(1, 1, 1, 2 - k), order) * pochhammer(
        PochhammerSpec(-1, 1, 1, -2), order
    )


def _over_one_minus(s: QSeries, m: int, sign: int = 1) -> QSeries:
    """``s / (1 - sign*q^m)`` by forward substitution."""
    c = list(s.coeffs)
    for n in range(m, len(c)):
        c[n] += sign * c[n - m]
    return QSeries(tuple(c))


def _weak_term(n: int, order: int) -> QSeries:
    # q^n / (1 + q^n)^2 = sum_{i >= 1} (-1)^(i-1) i q^(n i)
    c = [0] * (order + 1)
    for i in range(1, order // n + 1):
        c[n * i] = i if i & 1 else -i
    return QSeries(tuple(c))


def mu_weighted_gf1(j: int, k: int, order: int) -> QSeries:
    """Generating function of ``mu_{2j,k}(-1, n)`` from the weakly increasing j-fold sum."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    # sums[r] = sum over n_1 <= ... <= n_r <= n of prod q^(n_i)/(1+q^(n_i))^2
    sums = [unit(order)] + [zero(order) for _ in range(j)]
    for n in range(1, order + 1):
        if j == 0:
            break
        term = _weak_term(n, order)
        for r in range(1, j + 1):
            sums[r] = sums[r] + term * sums[r - 1]
    inner = sums[j] if j % 2 == 0 else -sums[j]
    return _prefactor(k, order) * inner


def mu_weighted_gf2(j: int, k: int, order: int) -> QSeries:
    """Generating function of ``mu_{2j,k}(-1, n)`` from the strictly increasing sum."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return _prefactor(k, order)
    # level[m] = sum over m_1 < ... < m_r = m of m_1 (m_2-m_1)... / prod (1-q^(m_i))
    level = {m: _over_one_minus(unit(order) * m, m) for m in range(1, order + 1)}
    for _ in range(2, j + 1):
        nxt = {}
        count = zero(order)  # sum of level[m'] over m' < m
        moment = zero(order)  # sum of m' * level[m'] over m' < m
        for m in range(1, order + 1):
            nxt[m] = _over_one_minus(count * m - moment, m)
            if m in level:
                count = count + level[m]
                moment = moment + level[m] * m
        level = nxt
    inner = [0] * (order + 1)
    for m, s in level.items():
        sign = -1 if m & 1 else 1
        for n, c in enumerate(s.coeffs[: order + 1 - m]):
            inner[n + m] += sign * c
    return _prefactor(k, order) * QSeries(tuple(inner))


def weighted_moments(j: int, k: int, order: int, route: str, table=None) -> list:
    """``MomentValue`` records for ``n = 0..order`` along one route."""
    if route == "direct":
        if table is None:
            from .tables import get_table

            table = get_table(k, order)
        values = mu_weighted_direct(j, k, table, order)
    elif route == "gf1":
        values = list(mu_weighted_gf1(j, k, order).coeffs)
    elif route == "gf2":
        values = list(mu_weighted_gf2(j, k, order).coeffs)
    else:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    return [MomentValue(j, k, n, v, route) for n, v in enumerate(values)]


def dyson_second_moment_check(k: int, table, pk) -> list:
    """``(k * sum_m m^2 M_k(m,n), 2 n p_k(n))`` for every ``n`` in the table."""
    out = []
    for n in range(table.order + 1):
        lhs = k * sum(m * m * table(m, n) for m in range(-n, n + 1))
        out.append((lhs, 2 * n * pk[n]))
    return out
