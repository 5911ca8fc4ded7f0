"""Finite-order checks of the k-crank inequalities, identities and conjectures.

Each suite walks the index range a theorem quantifies over and emits one
:class:`CheckRecord` per index and clause. Records are classified as

``pass``       observed relation satisfies the stated one;
``exception``  index is in the clause's declared exception set (not judged);
``recorded``   index the statement leaves open; observed relation is logged;
``violation``  anything else.

Record indices ``n`` are q-exponents (weights) unless the clause says
otherwise; ``clause`` names the statement in the theorem's own indexing.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .moments import mu_weighted_direct, mu_weighted_gf1, mu_weighted_gf2, dyson_second_moment_check
from .partitions import DEFAULT_RANK_BUDGET, pk_table, rank_parity_counts
from .series import dissect, j_product, invert
from .tables import KCrankTable, get_table, residues

STATUSES = ("pass", "exception", "recorded", "violation")
SUITES = ("mod2", "mod3", "mod4", "moments", "identities", "unimodal")


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    params: dict
    n: int
    observed: str
    expected: str
    status: str
    lhs: str
    rhs: str


@dataclass
class Report:
    suite: str
    params: dict
    records: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = dict.fromkeys(STATUSES, 0)
        for r in self.records:
            counts[r.status] += 1
        return counts

    @property
    def violations(self) -> list:
        return [r for r in self.records if r.status == "violation"]

    @property
    def ok(self) -> bool:
        return not self.violations

    def select(self, status: str | None = None, **params) -> list:
        out = []
        for r in self.records:
            if status is not None and r.status != status:
                continue
            if all(r.params.get(key) == value for key, value in params.items()):
                out.append(r)
        return out

    def to_dict(self, records: str = "all") -> dict:
        recs = self.records if records == "all" else [r for r in self.records if r.status != "pass"]
        return {
            "suite": self.suite,
            "params": self.params,
            "records": [asdict(r) for r in recs],
            "summary": self.summary,
        }

    def to_json(self, records: str = "all") -> str:
        return json.dumps(self.to_dict(records), sort_keys=True, indent=1)


def merge(reports, params: dict) -> Report:
    out = Report("all", params)
    for rep in reports:
        out.records.extend(rep.records)
    return out


# ---------------------------------------------------------------------------
# relation bookkeeping


def relation(a: int, b: int) -> str:
    return "<" if a < b else ">" if a > b else "="


def satisfies(observed: str, expected: str) -> bool:
    if expected in ("<", "=", ">"):
        return observed == expected
    if expected == ">=":
        return observed in (">", "=")
    if expected == "<=":
        return observed in ("<", "=")
    raise ValueError(f"unknown relation {expected!r}")


def _record(report, params, n, lhs, rhs, expected, exception=False, recorded=False):
    observed = relation(lhs, rhs)
    if recorded:
        status = "recorded"
    elif exception:
        status = "exception"
    elif satisfies(observed, expected):
        status = "pass"
    else:
        status = "violation"
    report.records.append(CheckRecord(report.suite, params, n, observed, expected, status, str(lhs), str(rhs)))


@lru_cache(maxsize=64)
def _table(k: int, order: int) -> KCrankTable:
    return get_table(k, order)


@lru_cache(maxsize=64)
def _residues(k: int, order: int, modulus: int):
    return residues(_table(k, order), modulus)


# ---------------------------------------------------------------------------
# suites


def suite_mod2(order: int, k_range) -> Report:
    rep = Report("mod2", {"order": order, "k": list(k_range)})
    for k in k_range:
        res = _residues(k, order, 2)
        for n in range(order + 1):
            if k <= 3:
                expected = ">" if n % 2 == 0 else "<"
                clause = "M(0,2,2n) > M(1,2,2n)" if n % 2 == 0 else "M(1,2,2n+1) > M(0,2,2n+1)"
            elif k == 4:
                expected = ">" if n % 2 == 0 else "="
                clause = "M(0,2,2n) > M(1,2,2n)" if n % 2 == 0 else "M(0,2,2n+1) = M(1,2,2n+1)"
            else:
                expected, clause = ">", "M(0,2,n) > M(1,2,n)"
            _record(rep, {"k": k, "modulus": 2, "clause": clause}, n, res(0, n), res(1, n), expected)
    return rep


def dissection_check(rep: Report, order: int):
    """J_1/J_3 = J_{12,27}/J_3 - q J_{6,27}/J_3 - q^2 J_{3,27}/J_3, per residue class mod 3."""
    inv_j3 = invert(j_product(3, None, order))
    lhs = j_product(1, None, order) * inv_j3
    pieces = {0: (1, 12), 1: (-1, 6), 2: (-1, 3)}
    for r, (sign, s) in pieces.items():
        rhs = j_product(s, 27, order) * inv_j3
        if r > order:
            continue
        left = dissect(lhs, 3, r)
        right = dissect(rhs, 3, 0)
        clause = f"3-dissection residue {r}"
        for i in range(left.order + 1):
            _record(rep, {"clause": clause, "modulus": 3}, 3 * i + r, left[i], sign * right[i], "=")
        # each J_{s,27}/J_3 lives on exponents divisible by 3
        for off in (1, 2):
            if off <= order:
                stray = dissect(rhs, 3, off)
                for i in range(stray.order + 1):
                    _record(rep, {"clause": f"J({s},27)/J(3) support", "modulus": 3}, 3 * i + off, stray[i], 0, "=")


def suite_mod3(order: int, k_range, dissection_order: int | None = None) -> Report:
    dorder = order if dissection_order is None else dissection_order
    rep = Report("mod3", {"order": order, "k": list(k_range), "dissection_order": dorder})
    for k in k_range:
        res = _residues(k, order, 3)
        for n in range(order + 1):
            t, cls = divmod(n, 3)
            recorded = False
            if k == 1:
                expected = (">", "<", "<")[cls]
                clause = ("M(0,3,3n) > M(1,3,3n)", "M(0,3,3n+1) < M(1,3,3n+1)", "M(0,3,3n+2) < M(1,3,3n+2)")[cls]
                if cls == 2 and t in (4, 5):
                    expected, clause = "=", "M(0,3,3n+2) = M(1,3,3n+2), n in {4,5}"
                elif cls == 2 and t == 1:
                    clause, recorded = "M(0,3,3n+2) vs M(1,3,3n+2), n = 1", True
            elif k == 2:
                expected = (">", "<", "<")[cls]
                clause = ("M(0,3,3n) > M(1,3,3n)", "M(0,3,3n+1) < M(1,3,3n+1)", "M(0,3,3n+2) < M(1,3,3n+2)")[cls]
            elif k == 3:
                expected = (">", "=", "=")[cls]
                clause = ("M(0,3,3n) > M(1,3,3n)", "M(0,3,3n+1) = M(1,3,3n+1)", "M(0,3,3n+2) = M(1,3,3n+2)")[cls]
            else:
                expected, clause = ">", "M(0,3,n) > M(1,3,n)"
            _record(rep, {"k": k, "modulus": 3, "clause": clause}, n, res(0, n), res(1, n), expected, recorded=recorded)
    dissection_check(rep, dorder)
    return rep


def _mod4_clauses(k: int, w: int):
    """(r1, relation, r2, clause, is_exception) comparisons at weight w >= 1."""
    if k == 1:
        if w % 2 == 0:
            n = w // 2
            return [
                (0, ">", 1, "M(0,4,2n) > M(1,4,2n), n != 1", n == 1),
                (2, ">", 1, "M(2,4,2n) > M(1,4,2n)", False),
            ]
        n = (w + 1) // 2
        return [
            (0, "<", 1, "M(0,4,2n-1) < M(1,4,2n-1), n != 2", n == 2),
            (2, "<", 1, "M(2,4,2n-1) < M(1,4,2n-1)", False),
        ]
    if k == 2:
        if w % 4 == 0:
            clause = "M(0,4,4n) > M(2,4,4n) > M(1,4,4n), n != 1"
            return [(0, ">", 2, clause, w == 4), (2, ">", 1, clause, w == 4)]
        if w % 4 == 2:
            if w < 6:
                return []
            clause = "M(2,4,4n+2) > M(0,4,4n+2) > M(1,4,4n+2)"
            return [(2, ">", 0, clause, False), (0, ">", 1, clause, False)]
        if w < 3:
            return []
        clause = "M(1,4,2n+1) > M(0,4,2n+1) = M(2,4,2n+1)"
        return [(1, ">", 0, clause, False), (0, "=", 2, clause, False)]
    if k == 3:
        if w % 2 == 0:
            clause = "M(0,4,2n) > M(1,4,2n) = M(2,4,2n)"
            return [(0, ">", 1, clause, False), (1, "=", 2, clause, False)]
        if w < 3:
            return []
        clause = "M(0,4,2n+1) = M(1,4,2n+1) > M(2,4,2n+1)"
        return [(0, "=", 1, clause, False), (1, ">", 2, clause, False)]
    clause = "M(0,4,n) > M(1,4,n) > M(2,4,n)"
    return [(0, ">", 1, clause, False), (1, ">", 2, clause, False)]


def suite_mod4(order: int, k_range) -> Report:
    rep = Report("mod4", {"order": order, "k": list(k_range)})
    for k in k_range:
        res = _residues(k, order, 4)
        for w in range(1, order + 1):
            for r1, expected, r2, clause, exc in _mod4_clauses(k, w):
                params = {"k": k, "modulus": 4, "clause": clause, "pair": [r1, r2]}
                _record(rep, params, w, res(r1, w), res(r2, w), expected, exception=exc)
    return rep


def suite_moments(order: int, j_max: int, k_range, route_order: int | None = None,
                  route_j_max: int | None = None) -> Report:
    rorder = order if route_order is None else route_order
    rjmax = j_max if route_j_max is None else route_j_max
    rep = Report("moments", {"order": order, "j_max": j_max, "k": list(k_range),
                             "route_order": rorder, "route_j_max": rjmax})
    for k in k_range:
        if k <= 3:
            table = _table(k, order)
            for j in range(j_max + 1):
                values = mu_weighted_direct(j, k, table)
                for n in range(j, order + 1):
                    signed = -values[n] if n & 1 else values[n]
                    _record(rep, {"k": k, "j": j, "clause": "(-1)^n mu_{2j,k}(-1,n) > 0"}, n, signed, 0, ">")
        table = _table(k, rorder)
        for j in range(rjmax + 1):
            direct = mu_weighted_direct(j, k, table)
            for route, gf in (("gf1", mu_weighted_gf1(j, k, rorder)), ("gf2", mu_weighted_gf2(j, k, rorder))):
                for n in range(rorder + 1):
                    _record(rep, {"k": k, "j": j, "clause": f"direct = {route}"}, n, direct[n], gf[n], "=")
    return rep


def suite_identities(order: int, k_max: int = 6, mod8_order: int | None = None,
                     lewis_order: int | None = None, budget: int = DEFAULT_RANK_BUDGET) -> Report:
    m8 = order if mod8_order is None else mod8_order
    lw = min(order, 60) if lewis_order is None else lewis_order
    rep = Report("identities", {"order": order, "k_max": k_max, "mod8_order": m8,
                                "lewis_order": lw, "budget": budget})
    for k in range(1, k_max + 1):
        pk = pk_table(k, order)
        for n, (lhs, rhs) in enumerate(dyson_second_moment_check(k, _table(k, order), pk)):
            _record(rep, {"k": k, "clause": "k sum m^2 M_k(m,n) = 2n p_k(n)"}, n, lhs, rhs, "=")
            _record(rep, {"k": k, "clause": "2n p_k(n) mod k = 0"}, n, (2 * n * pk[n]) % k, 0, "=")
    res8 = _residues(1, m8, 8)
    for w in range(1, m8 + 1, 4):
        _record(rep, {"k": 1, "modulus": 8, "clause": "M(0,8,4n+1)+M(1,8,4n+1) = M(3,8,4n+1)+M(4,8,4n+1)"},
                w, res8(0, w) + res8(1, w), res8(3, w) + res8(4, w), "=")
    for w in range(1, lw + 1):
        even, odd = rank_parity_counts(w, budget)
        if w % 2 == 0:
            _record(rep, {"clause": "N(0,2,2n) < N(1,2,2n), n != 1"}, w, even, odd, "<", exception=(w == 2))
        else:
            _record(rep, {"clause": "N(1,2,2n+1) < N(0,2,2n+1), n != 0"}, w, odd, even, "<", exception=(w == 1))
    return rep


def first_unimodal_break(row) -> int | None:
    """Index of the first rise after a fall, or None for a unimodal row."""
    fallen = False
    for i in range(1, len(row)):
        if row[i] < row[i - 1]:
            fallen = True
        elif row[i] > row[i - 1] and fallen:
            return i
    return None


def _tightest(rep, params, index, pairs, expected, exception=False):
    """One record per index: the first failing pair, else the smallest margin."""
    if not pairs:
        return
    failing = [p for p in pairs if not satisfies(relation(p[1], p[2]), expected)]
    if failing:
        m, a, b = failing[0]
    else:
        m, a, b = min(pairs, key=lambda p: (abs(p[1] - p[2]), p[0]))
    _record(rep, dict(params, m=m), index, a, b, expected, exception=exception)


def suite_unimodal(order: int, k_range, crank_order: int | None = None) -> Report:
    corder = min(order, 100) if crank_order is None else crank_order
    ks = [k for k in k_range if k >= 2]
    rep = Report("unimodal", {"order": order, "k": ks, "crank_order": corder})
    # the conjecture's own exception; rows and relations touching it inherit it
    anomaly = {(2, 1)}
    for k in ks:
        t = _table(k, order)
        for n in range(order + 1):
            brk = first_unimodal_break(t.row(n))
            params = {"k": k, "clause": "{M_k(m,n)} unimodal in m"}
            observed_ok = brk is None
            _record(rep, dict(params, m=None if brk is None else brk - n), n,
                    int(observed_ok), 1, "=", exception=(k, n) in anomaly)
        for n in range(order + 1):
            pairs = [(m, t(m, n), t(m + 1, n)) for m in range(n // 2, n + 1)]
            _tightest(rep, {"k": k, "clause": "M_k(m,n) >= M_k(m+1,n), floor(n/2) <= m <= n"},
                      n, pairs, ">=", exception=(k, n) in anomaly)
    if 2 in ks:
        t = _table(2, order)
        for n in range(order):
            pairs = [(m, t(m, n), t(m, n + 1)) for m in range(n + 1)]
            _tightest(rep, {"k": 2, "clause": "M_2(m,n) <= M_2(m,n+1), 0 <= m <= n"},
                      n, pairs, "<=", exception=(2, n + 1) in anomaly)
        for m in range(1, order):
            pairs = [(i, t(i, i + m), t(i + 1, i + m + 1)) for i in range(m) if i + m + 1 <= order]
            _tightest(rep, {"k": 2, "clause": "M_2(i,i+m) < M_2(i+1,i+m+1), 0 <= i < m", "index": "m"},
                      m, pairs, "<")
        for m in range(order // 2 + 1):
            pairs = [(i, t(m, 2 * m), t(m + i, 2 * m + i)) for i in range(order - 2 * m + 1)]
            _tightest(rep, {"k": 2, "clause": "M_2(m,2m) = M_2(m+i,2m+i), i >= 0", "index": "m"},
                      m, pairs, "=")
    crank = _table(1, corder)
    for n in range(4, corder + 1):
        p = {"k": 1, "clause": "M(n,n) = M(n-2,n) = 1, M(n-1,n) = 0"}
        _record(rep, dict(p, m=n), n, crank(n, n), 1, "=")
        _record(rep, dict(p, m=n - 2), n, crank(n - 2, n), 1, "=")
        _record(rep, dict(p, m=n - 1), n, crank(n - 1, n), 0, "=")
    return rep


def run_suite(name: str, order: int, k_max: int, j_max: int = 5) -> Report:
    if name == "mod2":
        return suite_mod2(order, range(1, k_max + 1))
    if name == "mod3":
        return suite_mod3(order, range(1, k_max + 1))
    if name == "mod4":
        return suite_mod4(order, range(1, k_max + 1))
    if name == "moments":
        return suite_moments(order, j_max, range(1, k_max + 1))
    if name == "identities":
        return suite_identities(order, k_max)
    if name == "unimodal":
        return suite_unimodal(order, range(2, k_max + 1))
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")


def _run_packed(args):
    return run_suite(*args)


def run(names, order: int, k_max: int, j_max: int = 5, jobs: int = 1) -> Report:
    """Run suites and merge them in the given order; ``jobs`` only changes speed."""
    names = list(names)
    tasks = [(name, order, k_max, j_max) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_packed, tasks))
    else:
        reports = [run_suite(*t) for t in tasks]
    if len(reports) == 1:
        return reports[0]
    return merge(reports, {"suites": names, "order": order, "k_max": k_max, "j_max": j_max})
