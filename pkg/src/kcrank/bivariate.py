"""The crank generating function C_k(z, q) as a Laurent polynomial in z.

Expands::

    (q;q)_inf^(2-k) * sum_t z^t q^t/(q;q)_t * sum_s z^-s q^s/(q;q)_s

column by column in z. k = 1 gives the Andrews-Garvan crank series, whose
coefficients at n = 1 are -1, 1, 1 for m = 0, +-1 rather than the
combinatorial 0, 1, 0 (the empty crank convention of the series).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderExceeded
from .series import PochhammerSpec, QSeries, lag_products, pochhammer


@dataclass(frozen=True)
class BivariateSeries:
    order: int
    zcoeffs: dict  # m -> QSeries of this order; absent m means zero

    def column(self, m: int) -> QSeries | None:
        return self.zcoeffs.get(m)


def _q_exponential_terms(order: int) -> list:
    """``q^t / (q;q)_t`` for ``t = 0..order``, built by successive division."""
    terms = []
    c = [1] + [0] * order
    terms.append(QSeries(tuple(c)))
    for t in range(1, order + 1):
        # multiply by q, then divide by (1 - q^t)
        c = [0] + c[:-1]
        for n in range(t, order + 1):
            c[n] += c[n - t]
        terms.append(QSeries(tuple(c)))
    return terms


def crank_gf(k: int, order: int) -> BivariateSeries:
    if k < 1:
        raise ValueError("k must be at least 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    # z^t side and z^-s side of the product; same series, kept apart for clarity
    zpos = _q_exponential_terms(order)
    zneg = _q_exponential_terms(order)
    prefactor = pochhammer(PochhammerSpec(1, 1, 1, 2 - k), order)
    zcoeffs = {}
    # z^m with m >= 0 collects t = s + m; z^-m collects s = t + m
    for m, col in enumerate(lag_products(zpos, zneg, order, order)):
        zcoeffs[m] = col * prefactor
    for m, col in enumerate(lag_products(zneg, zpos, order, order)):
        if m:
            zcoeffs[-m] = col * prefactor
    return BivariateSeries(order, zcoeffs)


def coeff(b: BivariateSeries, m: int, n: int) -> int:
    if n < 0 or n > b.order:
        raise OrderExceeded(f"n={n} outside bivariate series of order {b.order}")
    col = b.zcoeffs.get(m)
    return 0 if col is None else col[n]


def to_table(b: BivariateSeries, k: int):
    from .tables import KCrankTable

    if k == 1:
        rows = tuple(tuple(coeff(b, m, n) for m in range(-n, n + 1)) for n in range(b.order + 1))
    else:
        rows = tuple(tuple(coeff(b, m, n) for m in range(n + 1)) for n in range(b.order + 1))
    return KCrankTable(k, b.order, rows)
