"""Text, CSV and JSON renderings of tables and series.

Big integers always travel as decimal strings in JSON.
"""

from __future__ import annotations

import csv
import io
import json

from .series import QSeries
from .tables import KCrankTable, ResidueTable

FORMATS = ("text", "csv", "json")


def table_text(t: KCrankTable) -> str:
    lines = [f"# M_{t.k}(m,n), " + ("m = -n..n" if t.full else "m = 0..n")]
    for n, row in enumerate(t.rows):
        lines.append(f"{n}: " + " ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def table_csv(t: KCrankTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "m", "value"])
    for n in range(t.order + 1):
        for m in range(-n, n + 1):
            w.writerow([n, m, t(m, n)])
    return buf.getvalue()


def table_json(t: KCrankTable) -> str:
    return json.dumps(
        {"k": t.k, "order": t.order, "full": t.full,
         "rows": [[str(v) for v in row] for row in t.rows]},
        indent=1,
    )


def table_from_csv(text: str, k: int) -> KCrankTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["n", "m", "value"]:
        raise ValueError(f"unexpected CSV header {header}")
    cells = {}
    for n, m, v in reader:
        cells[int(n), int(m)] = int(v)
    order = max(n for n, _ in cells)
    if k == 1:
        rows = tuple(tuple(cells[n, m] for m in range(-n, n + 1)) for n in range(order + 1))
    else:
        rows = tuple(tuple(cells[n, m] for m in range(n + 1)) for n in range(order + 1))
    return KCrankTable(k, order, rows)


def table_from_json(text: str) -> KCrankTable:
    d = json.loads(text)
    return KCrankTable(d["k"], d["order"], tuple(tuple(int(v) for v in row) for row in d["rows"]))


def residues_render(r: ResidueTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"k": r.k, "modulus": r.modulus, "order": r.order,
                           "values": [[str(v) for v in row] for row in r.values]}, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "r", "value"])
        for n, row in enumerate(r.values):
            for res, v in enumerate(row):
                w.writerow([n, res, v])
        return buf.getvalue()
    lines = [f"# M_{r.k}(r,{r.modulus},n), r = 0..{r.modulus - 1}"]
    lines += [f"{n}: " + " ".join(map(str, row)) for n, row in enumerate(r.values)]
    return "\n".join(lines) + "\n"


def series_render(s: QSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"order": s.order, "coeffs": [str(c) for c in s.coeffs]})
    if fmt == "csv":
        return "n,value\n" + "".join(f"{n},{c}\n" for n, c in enumerate(s.coeffs))
    return " ".join(map(str, s.coeffs)) + "\n"


def render_table(t: KCrankTable, fmt: str) -> str:
    return {"text": table_text, "csv": table_csv, "json": table_json}[fmt](t)
