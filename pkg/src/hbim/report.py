"""Delimited/JSON emission and the benchmark report container."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional, Sequence

SIG_DIGITS = 12


def fmt(value) -> str:
    """Format a cell: floats to 12 significant digits, None to an empty cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, f".{SIG_DIGITS}g")
    return str(value)


def json_value(value):
    """Round floats to the same 12 significant digits the CSV carries."""
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            return fmt(value)
        return float(format(value, f".{SIG_DIGITS}g"))
    if isinstance(value, dict):
        return {k: json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    return value


def render_csv(columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(json_value(payload), indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def render_table(columns, rows, fmt_name: str, extra: Optional[dict] = None) -> str:
    if fmt_name == "json":
        payload = {"columns": list(columns), "rows": [{c: r.get(c) for c in columns} for r in rows]}
        if extra:
            payload.update(extra)
        return render_json(payload)
    return render_csv(columns, rows)


@dataclass
class BenchRecord:
    section: str
    item: str
    quantity: str
    value: Any = None
    expected: Optional[float] = None
    tolerance: Optional[float] = None
    error: Optional[float] = None
    status: str = "info"
    note: str = ""


RECORD_COLUMNS = [f.name for f in fields(BenchRecord)]
_NUMERIC = ("value", "expected", "tolerance", "error")


def _parse_cell(text: str):
    if text == "":
        return None
    try:
        return float(text)
    except ValueError:
        return text


@dataclass
class BenchmarkReport:
    """Flat list of benchmark records plus run metadata.

    ``metadata`` always carries ``tool_version`` and ``config``; a
    ``timestamp`` is added only when requested, so the data part is
    byte-reproducible.
    """

    records: List[BenchRecord] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, *args, **kwargs) -> BenchRecord:
        rec = BenchRecord(*args, **kwargs)
        self.records.append(rec)
        return rec

    @property
    def failures(self) -> List[BenchRecord]:
        return [r for r in self.records if r.status in ("fail", "degraded")]

    def to_json(self) -> str:
        return render_json({"metadata": self.metadata, "records": [asdict(r) for r in self.records]})

    def to_csv(self) -> str:
        rows = [asdict(r) for r in self.records]
        meta_rows = [
            {"section": "meta", "item": key, "quantity": "",
             "value": json.dumps(val, sort_keys=True) if isinstance(val, (dict, list)) else val}
            for key, val in self.metadata.items()
        ]
        return render_csv(RECORD_COLUMNS, meta_rows + rows)

    def render(self, fmt_name: str) -> str:
        return self.to_json() if fmt_name == "json" else self.to_csv()

    @classmethod
    def from_json(cls, text: str) -> "BenchmarkReport":
        data = json.loads(text)
        recs = []
        for r in data["records"]:
            for key in _NUMERIC:
                if isinstance(r.get(key), str):
                    r[key] = _parse_cell(r[key])
            recs.append(BenchRecord(**r))
        return cls(recs, data.get("metadata", {}))

    @classmethod
    def from_csv(cls, text: str) -> "BenchmarkReport":
        reader = csv.DictReader(io.StringIO(text))
        report = cls()
        for row in reader:
            if row["section"] == "meta":
                raw = row["value"]
                try:
                    val = json.loads(raw)
                except json.JSONDecodeError:
                    val = raw
                report.metadata[row["item"]] = val
                continue
            kwargs = dict(row)
            for key in _NUMERIC:
                kwargs[key] = _parse_cell(kwargs[key])
            report.records.append(BenchRecord(**kwargs))
        return report
