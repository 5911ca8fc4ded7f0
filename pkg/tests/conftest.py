import pytest

# M_2(m, n) for m = 0..n exactly as printed in the source table (rows n = 0..12).
PRINTED_TABLE = [
    [1],
    [0, 1],
    [1, 1, 1],
    [2, 2, 1, 1],
    [4, 3, 3, 1, 1],
    [6, 6, 4, 3, 1, 1],
    [11, 9, 8, 5, 3, 1, 1],
    [16, 16, 12, 9, 5, 3, 1, 1],
    [27, 24, 21, 14, 10, 5, 3, 1, 1],
    [40, 39, 31, 25, 15, 10, 5, 3, 1, 1],
    [63, 59, 51, 37, 27, 15, 10, 5, 3, 1, 1],
    [92, 90, 75, 60, 41, 28, 16, 10, 5, 3, 1, 1],
    [141, 131, 116, 90, 67, 43, 29, 16, 10, 5, 3, 1, 1],
]

# Entries of the printed row n = 10 that disagree with enumeration.
PRINTED_MISPRINTS = {(10, 1): (59, 58), (10, 5): (15, 16)}


def naive_mul(a, b, n):
    out = [0] * n
    for i in range(min(len(a), n)):
        for j in range(min(len(b), n - i)):
            out[i + j] += a[i] * b[j]
    return out


def binomial_product(exponents, order, sign=-1):
    """prod (1 + sign*q^e) over the given exponents, by plain polynomial products."""
    poly = [1] + [0] * order
    for e in exponents:
        if e > order:
            continue
        factor = [0] * (order + 1)
        factor[0] = 1
        factor[e] += sign
        poly = naive_mul(poly, factor, order + 1)
    return poly


@pytest.fixture(scope="session")
def printed_table():
    return PRINTED_TABLE
