"""Truncated power series in q with exact integer coefficients.

A :class:`QSeries` of order ``N`` knows the coefficients of ``q^0 .. q^N``
exactly and nothing beyond. Binary operations truncate at the smaller order
of their operands, so the order of a result is always part of its value.

Multiplication packs each coefficient list into a single Python integer
(Kronecker substitution), multiplies once, and unpacks. Coefficients are
signed, so every slot is wide enough to hold a bound on the absolute value
of the corresponding product coefficient plus a sign bit.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadModuli, NonUnitConstant, NotDivisible

# Below this length the schoolbook product beats packing overhead.
_SCHOOLBOOK_CUTOFF = 12


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a QSeries needs at least the q^0 coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"QSeries({list(self.coeffs)})"

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return combine(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return combine(self, other, "subtract")

    def __rsub__(self, other):
        if isinstance(other, int):
            return combine(constant(other, self.order), self, "subtract")
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        return combine(self, other, "multiply")

    __rmul__ = __mul__

    def __neg__(self):
        return QSeries(tuple(-c for c in self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return power(invert(self), -exponent)
        return power(self, exponent)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class PochhammerSpec:
    """``(sign * q^a; q^b)_inf ** exponent``."""

    sign: int
    a: int
    b: int
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.a < 1 or self.b < 1:
            raise ValueError("Pochhammer offset and step must be positive")


def unit(order: int) -> QSeries:
    return constant(1, order)


def constant(value: int, order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return QSeries((value,) + (0,) * order)


def zero(order: int) -> QSeries:
    return constant(0, order)


# ---------------------------------------------------------------------------
# Kronecker substitution


def _slot_bytes(bound: int) -> int:
    # one sign bit above the magnitude bound
    return (bound.bit_length() + 1 + 7) // 8


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    pos = int.from_bytes(
        b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs), "little"
    )
    if min(coeffs) >= 0:
        return pos
    neg = int.from_bytes(
        b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs), "little"
    )
    return pos - neg


def _unpack(value: int, count: int, nbytes: int) -> list:
    """Read ``count`` balanced signed slots from the low end of ``value``."""
    width = nbytes * count
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * count, "little")
    raw = ((value + bias) & ((1 << (8 * width)) - 1)).to_bytes(width, "little")
    return [int.from_bytes(raw[i : i + nbytes], "little") - half for i in range(0, width, nbytes)]


def _magnitude(coeffs: Sequence[int]) -> int:
    return max(abs(c) for c in coeffs)


def _schoolbook(a: Sequence[int], b: Sequence[int], n_out: int) -> list:
    out = [0] * n_out
    for i, x in enumerate(a[:n_out]):
        if x:
            for j, y in enumerate(b[: n_out - i]):
                out[i + j] += x * y
    return out


def _mul(a: Sequence[int], b: Sequence[int], n_out: int) -> list:
    """First ``n_out`` coefficients of the product of two coefficient lists."""
    a = a[:n_out]
    b = b[:n_out]
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b, n_out)
    ma, mb = _magnitude(a), _magnitude(b)
    if ma == 0 or mb == 0:
        return [0] * n_out
    nbytes = _slot_bytes(ma * mb * min(len(a), len(b)))
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), n_out, nbytes)


def combine(a: QSeries, b: QSeries, op: str) -> QSeries:
    """Add, subtract or multiply two series at the smaller of their orders."""
    n = min(a.order, b.order) + 1
    if op == "add":
        return QSeries(tuple(map(operator.add, a.coeffs[:n], b.coeffs[:n])))
    if op == "subtract":
        return QSeries(tuple(map(operator.sub, a.coeffs[:n], b.coeffs[:n])))
    if op == "multiply":
        return QSeries(tuple(_mul(a.coeffs, b.coeffs, n)))
    raise ValueError(f"unknown operation {op!r}")


def product(factors: Iterable[QSeries]) -> QSeries:
    result = None
    for f in factors:
        result = f if result is None else result * f
    if result is None:
        raise ValueError("empty product has no order")
    return result


def power(a: QSeries, exponent: int) -> QSeries:
    if exponent < 0:
        return power(invert(a), -exponent)
    result = unit(a.order)
    base = a
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def invert(a: QSeries) -> QSeries:
    """Multiplicative inverse by Newton iteration; needs a unit constant term."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstant(a0)
    n = a.order + 1
    b = [a0]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        err = _mul(a.coeffs, b, prec)
        err = [-c for c in err]
        err[0] += 2
        b = _mul(b, err, prec)
    return QSeries(tuple(b))


def int_divide(a: QSeries, d: int) -> QSeries:
    if d == 0:
        raise ZeroDivisionError("division of a series by zero")
    out = []
    for n, c in enumerate(a.coeffs):
        quot, rem = divmod(c, d)
        if rem:
            raise NotDivisible(n, d)
        out.append(quot)
    return QSeries(tuple(out))


def _factor_offsets(a: int, b: int, order: int):
    return range(a, order + 1, b)


def pochhammer(spec: PochhammerSpec, order: int) -> QSeries:
    """Expand ``(sign*q^a; q^b)_inf ** exponent`` through ``q^order``.

    Only factors ``1 - sign*q^e`` with ``e <= order`` are applied; the rest
    are congruent to 1 modulo ``q^(order+1)``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if spec.exponent == 0:
        return unit(order)
    c = [1] + [0] * order
    s = spec.sign
    if spec.exponent > 0:
        for e in _factor_offsets(spec.a, spec.b, order):
            for n in range(order, e - 1, -1):
                c[n] -= s * c[n - e]
    else:
        for e in _factor_offsets(spec.a, spec.b, order):
            for n in range(e, order + 1):
                c[n] += s * c[n - e]
    return power(QSeries(tuple(c)), abs(spec.exponent))


def j_product(s: int, t: int | None, order: int) -> QSeries:
    """``J_s = (q^s;q^s)_inf`` or ``J_{s,t} = (q^s;q^t)(q^{t-s};q^t)(q^t;q^t)``."""
    if s < 1:
        raise BadModuli(f"J({s}) needs a positive index")
    if t is None:
        return pochhammer(PochhammerSpec(1, s, s), order)
    if t <= s:
        raise BadModuli(f"J({s},{t}) needs 1 <= s < t")
    return (
        pochhammer(PochhammerSpec(1, s, t), order)
        * pochhammer(PochhammerSpec(1, t - s, t), order)
        * pochhammer(PochhammerSpec(1, t, t), order)
    )


def substitute_neg_q(a: QSeries) -> QSeries:
    return QSeries(tuple(-c if n & 1 else c for n, c in enumerate(a.coeffs)))


def dissect(a: QSeries, d: int, r: int) -> QSeries:
    """Coefficients of ``q^(d*n + r)`` in ``a``, reindexed by ``n``."""
    if d < 1 or not 0 <= r < d:
        raise ValueError(f"need d >= 1 and 0 <= r < d, got d={d}, r={r}")
    if r > a.order:
        raise ValueError(f"residue {r} lies beyond order {a.order}")
    return QSeries(a.coeffs[r::d])


def dilate(a: QSeries, d: int) -> QSeries:
    """Substitute ``q -> q^d``; the result is exact through ``q^(d*(order+1)-1)``."""
    if d < 1:
        raise ValueError("dilation factor must be positive")
    out = [0] * (d * (a.order + 1))
    out[::d] = a.coeffs
    return QSeries(tuple(out))


def shift(a: QSeries, k: int) -> QSeries:
    """Multiply by ``q^k``; known coefficients move up, so the order grows by ``k``."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return QSeries((0,) * k + a.coeffs)


def lag_products(left: Sequence[QSeries], right: Sequence[QSeries], max_lag: int, order: int) -> list:
    """``C_m = sum_t left[t+m] * right[t]`` for ``m = 0..max_lag``, each of order ``order``.

    Every operand is packed into an integer once and reused for all lags.
    Operands whose first nonzero coefficient is at ``q^v`` are packed from
    ``q^v`` on, which keeps the integer products short.
    """
    n = order + 1

    def strip(s):
        c = s.coeffs[:n]
        v = next((i for i, x in enumerate(c) if x), n)
        return v, c[v:]

    lt = [strip(s) for s in left]
    rt = [strip(s) for s in right]
    mags = [_magnitude(c) if c else 0 for _, c in lt + rt]
    top = max(mags, default=0)
    if top == 0:
        return [zero(order) for _ in range(max_lag + 1)]
    # every accumulated coefficient is bounded by (sum of |coeffs|)^2
    total_l = sum(sum(abs(x) for x in c) for _, c in lt)
    total_r = sum(sum(abs(x) for x in c) for _, c in rt)
    nbytes = _slot_bytes(total_l * total_r)
    shift_bits = 8 * nbytes
    lp = [(v, _pack(c, nbytes)) if c else (v, 0) for v, c in lt]
    rp = [(v, _pack(c, nbytes)) if c else (v, 0) for v, c in rt]
    out = []
    for m in range(max_lag + 1):
        acc = 0
        for t in range(len(right)):
            if t + m >= len(left):
                break
            va, pa = lp[t + m]
            vb, pb = rp[t]
            if not pa or not pb or va + vb >= n:
                continue
            acc += (pa * pb) << (shift_bits * (va + vb))
        out.append(QSeries(tuple(_unpack(acc, n, nbytes))))
    return out
