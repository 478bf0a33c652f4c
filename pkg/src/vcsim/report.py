"""Comparison rows (cover size, messages, deflection, ratio) and their CSV/JSON/table codecs."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .algorithms import ALGORITHMS, make_program
from .graph import Graph, is_connected
from .kernel import MessageKind, SimConfig, run
from .oracle import OracleResult, approximation_report, format_ratio, min_vertex_cover

__all__ = [
    "CompareRow",
    "compare",
    "rows_to_csv",
    "rows_from_csv",
    "rows_to_json",
    "rows_from_json",
    "rows_to_table",
]

CSV_COLUMNS = ["algorithm", "cover_size", "messages", "deflection", "ratio", "valid"] + [
    f"msg_{k.name}" for k in MessageKind
]


@dataclass(frozen=True)
class CompareRow:
    algorithm: str
    cover_size: int
    messages: Union[int, str]
    deflection: int
    ratio: str
    valid: bool
    per_kind_messages: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "cover_size": self.cover_size,
            "messages": self.messages,
            "deflection": self.deflection,
            "ratio": self.ratio,
            "valid": self.valid,
            "per_kind_messages": dict(self.per_kind_messages),
        }


def compare(
    g: Graph, cfg: SimConfig = SimConfig(), method: str = "auto"
) -> tuple[list[CompareRow], OracleResult]:
    if not is_connected(g):
        raise ValueError("compare needs a connected graph")
    opt = min_vertex_cover(g, method)
    if opt.size < 1:
        raise ValueError("compare needs a graph with at least one edge")
    rows = [CompareRow("brute_force", opt.size, "N/A", 0, format_ratio(Fraction(1)), True)]
    for name in ALGORITHMS:
        res = run(g, make_program(name, cfg), cfg)
        rep = approximation_report(g, res.cover, opt.size)
        rows.append(
            CompareRow(
                name,
                len(res.cover),
                res.total_messages,
                rep.deflection,
                rep.ratio_text(),
                rep.valid,
                dict(res.message_counts),
            )
        )
    return rows, opt


def rows_to_csv(rows: list[CompareRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(
            [r.algorithm, r.cover_size, r.messages, r.deflection, r.ratio, str(r.valid).lower()]
            + [r.per_kind_messages.get(k.name, "") for k in MessageKind]
        )
    return buf.getvalue()


def _int_or_na(text: str) -> Union[int, str]:
    return text if text == "N/A" else int(text)


def rows_from_csv(text: str) -> list[CompareRow]:
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        per_kind = {k.name: int(rec[f"msg_{k.name}"]) for k in MessageKind if rec[f"msg_{k.name}"] != ""}
        rows.append(
            CompareRow(
                rec["algorithm"],
                int(rec["cover_size"]),
                _int_or_na(rec["messages"]),
                int(rec["deflection"]),
                rec["ratio"],
                rec["valid"] == "true",
                per_kind,
            )
        )
    return rows


def rows_to_json(rows: list[CompareRow], opt: Optional[OracleResult] = None) -> str:
    doc: dict = {"rows": [r.as_dict() for r in rows]}
    if opt is not None:
        doc["oracle"] = opt.as_dict()
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def rows_from_json(text: str) -> list[CompareRow]:
    return [CompareRow(**rec) for rec in json.loads(text)["rows"]]


def rows_to_table(rows: list[CompareRow]) -> str:
    header = ("Algorithm", "|VC|", "Messages", "Deflection", "Ratio", "Valid")
    body = [
        (r.algorithm, str(r.cover_size), str(r.messages), str(r.deflection), r.ratio, "yes" if r.valid else "NO")
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), "  ".join("-" * w for w in widths)]
    lines += [fmt.format(*line) for line in body]
    return "\n".join(lines) + "\n"
