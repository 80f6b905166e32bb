"""Batch scoring of vulnerability records under both schemes.

Records carry a CVSS vector, an RVSS vector, or both; comparison rows
carry the per-scheme score triples and the base-score delta. The built-in
corpus holds the four case studies used throughout the published
comparison, with their expected triples attached as test metadata.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Union

from . import codec, engine
from .catalog import Scheme
from .engine import ScoreTriple
from .errors import EmptyCorpus, UnreadableSource, VectorError

Source = Union[str, Path, IO[bytes], IO[str]]


@dataclass(frozen=True)
class VulnRecord:
    id: str
    description: str
    cvss_vector: str | None = None
    rvss_vector: str | None = None
    tags: tuple[str, ...] = ()


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int | None
    record_id: str | None
    code: str
    message: str


@dataclass(frozen=True)
class ComparisonRow:
    id: str
    description: str
    rvss_triple: ScoreTriple | None = None
    cvss_triple: ScoreTriple | None = None
    rvss_severities: tuple[str, str, str] | None = None
    cvss_severities: tuple[str, str, str] | None = None
    delta_base: float | None = None
    diagnostics: tuple[str, ...] = ()


# Case studies: (1) unauthenticated motion control of Robotis OP2-firmware
# robots, (2) command injection in the Vecna VGo telepresence robot,
# (3) stack overflow in the Universal Robots Modbus TCP service,
# (4) hang in the ROS 2 launch system on arm64 with Fast-RTPS (a
# middleware/library defect, which plain CVSS scores to zero).
#
# Row 4's CVSS vector is the worked zero-impact derivation; the severity
# table's own footnote vector does not reproduce its printed (0, 0, 0).
_BUILTIN = [
    {
        "id": "1",
        "description": (
            "Missing authorization mechanisms in Robotis RoboPlus protocol "
            "allow remote attackers to gain unauthorized control of the "
            "robots via network communication."
        ),
        "rvss_vector": "RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:E",
        "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H",
        "expected": {"rvss": (7.7, 7.7, 7.7), "cvss": (9.1, 9.1, 9.1)},
    },
    {
        "id": "2",
        "description": (
            "An attacker on an adjacent network could perform command "
            "injection in the Vecna VGo telepresence robot."
        ),
        "rvss_vector": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:H/I:H/A:H/H:E",
        "cvss_vector": "CVSS:3.0/AV:A/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H",
        "expected": {"rvss": (10.0, 10.0, 10.0), "cvss": (8.8, 8.8, 8.8)},
    },
    {
        "id": "3",
        "description": (
            "A stack-based buffer overflow in Universal Robots Modbus TCP "
            "service could allow remote attackers to execute arbitrary code "
            "and alter protected settings via specially crafted packets."
        ),
        "rvss_vector": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:T/S:C/C:H/I:H/A:H/H:H",
        "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:C/C:H/I:H/A:H",
        "expected": {"rvss": (10.0, 10.0, 10.0), "cvss": (10.0, 10.0, 10.0)},
    },
    {
        "id": "4",
        "description": (
            "Vulnerability in ROS 2.0 communication middleware: launching "
            "on arm64 with Fast-RTPS with fat archive from 2018-06-21 "
            "never quits."
        ),
        "rvss_vector": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:N/I:N/A:N/H:H",
        "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:N/A:N",
        "expected": {"rvss": (5.9, 5.9, 5.9), "cvss": (0.0, 0.0, 0.0)},
    },
]

# Expected triples per record id: test metadata for the self-verifying corpus.
BUILTIN_EXPECTED = {
    row["id"]: {
        scheme: ScoreTriple(*values) for scheme, values in row["expected"].items()
    }
    for row in _BUILTIN
}


def builtin_corpus() -> list[VulnRecord]:
    """The four-case comparison corpus with both vectors per record."""
    return [
        VulnRecord(
            id=row["id"],
            description=row["description"],
            cvss_vector=row["cvss_vector"],
            rvss_vector=row["rvss_vector"],
        )
        for row in _BUILTIN
    ]


def record_from_dict(raw: dict, line: int, diagnostics: list[ParseDiagnostic]):
    """Validate one raw record mapping; bad rows append a diagnostic."""
    record_id = str(raw.get("id") or "").strip()
    if not record_id:
        diagnostics.append(ParseDiagnostic(line, None, "MissingId", "record has no id"))
        return None
    cvss_vector = (raw.get("cvss_vector") or "").strip() or None
    rvss_vector = (raw.get("rvss_vector") or "").strip() or None
    if not cvss_vector and not rvss_vector:
        diagnostics.append(
            ParseDiagnostic(line, record_id, "MissingVector", "record has no vector")
        )
        return None
    for label, vector, scheme in (
        ("cvss_vector", cvss_vector, Scheme.CVSS_3_0),
        ("rvss_vector", rvss_vector, Scheme.RVSS_1_0),
    ):
        if vector is None:
            continue
        try:
            parsed = codec.parse(vector)
        except VectorError as exc:
            diagnostics.append(
                ParseDiagnostic(line, record_id, exc.code, f"{label}: {exc}")
            )
            return None
        if parsed.scheme is not scheme:
            diagnostics.append(
                ParseDiagnostic(
                    line, record_id, "WrongScheme",
                    f"{label} carries a {parsed.scheme.prefix} vector",
                )
            )
            return None
    tags = raw.get("tags") or ()
    if isinstance(tags, str):
        tags = tuple(t for t in tags.split(";") if t)
    return VulnRecord(
        id=record_id,
        description=str(raw.get("description") or ""),
        cvss_vector=cvss_vector,
        rvss_vector=rvss_vector,
        tags=tuple(tags),
    )


def load_records(
    source: Source, format: str = "jsonl"
) -> tuple[list[VulnRecord], list[ParseDiagnostic]]:
    """Load records from a JSONL or CSV source.

    Malformed rows become diagnostics (with line numbers) rather than
    failures; raises EmptyCorpus only when nothing loads at all, and
    UnreadableSource when the source cannot be read.
    """
    if format not in ("jsonl", "csv"):
        raise ValueError(f"unsupported corpus format {format!r}")
    try:
        if isinstance(source, (str, Path)):
            text = Path(source).read_text(encoding="utf-8")
        else:
            data = source.read()
            text = data.decode("utf-8") if isinstance(data, bytes) else data
    except (OSError, UnicodeDecodeError) as exc:
        raise UnreadableSource(f"cannot read corpus source: {exc}") from exc

    records: list[VulnRecord] = []
    diagnostics: list[ParseDiagnostic] = []
    if format == "jsonl":
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                diagnostics.append(
                    ParseDiagnostic(line_no, None, "BadJson", str(exc))
                )
                continue
            if not isinstance(raw, dict):
                diagnostics.append(
                    ParseDiagnostic(line_no, None, "BadJson", "row is not an object")
                )
                continue
            record = record_from_dict(raw, line_no, diagnostics)
            if record:
                records.append(record)
    else:
        reader = csv.DictReader(io.StringIO(text))
        for line_no, raw in enumerate(reader, start=2):  # header is line 1
            record = record_from_dict(raw, line_no, diagnostics)
            if record:
                records.append(record)

    if not records:
        raise EmptyCorpus("no loadable records in corpus")
    return records, diagnostics


def compare(records: Iterable[VulnRecord]) -> list[ComparisonRow]:
    """Score every record under both schemes, preserving input order.

    Scoring is a pure per-record function, so rows could be computed in
    parallel; ordering of the output always matches the input either way.
    """
    rows = []
    for record in records:
        rows.append(_compare_one(record))
    return rows


def _score_side(vector_text: str | None):
    if not vector_text:
        return None, None
    report = engine.score(codec.parse(vector_text))
    return report.scores, report.severities


def _compare_one(record: VulnRecord) -> ComparisonRow:
    diagnostics = []
    rvss_triple = cvss_triple = None
    rvss_sev = cvss_sev = None
    try:
        rvss_triple, rvss_sev = _score_side(record.rvss_vector)
    except VectorError as exc:
        diagnostics.append(f"rvss_vector: {exc.code}: {exc}")
    try:
        cvss_triple, cvss_sev = _score_side(record.cvss_vector)
    except VectorError as exc:
        diagnostics.append(f"cvss_vector: {exc.code}: {exc}")
    delta = None
    if rvss_triple and cvss_triple:
        delta = round(rvss_triple.base - cvss_triple.base, 1)
    return ComparisonRow(
        id=record.id,
        description=record.description,
        rvss_triple=rvss_triple,
        cvss_triple=cvss_triple,
        rvss_severities=rvss_sev,
        cvss_severities=cvss_sev,
        delta_base=delta,
        diagnostics=tuple(diagnostics),
    )


def _fmt_triple(triple: ScoreTriple | None) -> str:
    if triple is None:
        return "-"
    return "({:.1f}, {:.1f}, {:.1f})".format(*triple.as_tuple())


def row_json_dict(row: ComparisonRow) -> dict:
    def side(triple, severities):
        if triple is None:
            return None
        return {
            "scores": {
                "base": triple.base,
                "temporal": triple.temporal,
                "environmental": triple.environmental,
            },
            "severities": {
                "base": severities[0],
                "temporal": severities[1],
                "environmental": severities[2],
            },
        }

    doc = {
        "id": row.id,
        "description": row.description,
        "rvss": side(row.rvss_triple, row.rvss_severities),
        "cvss": side(row.cvss_triple, row.cvss_severities),
        "deltaBase": row.delta_base,
    }
    if row.diagnostics:
        doc["diagnostics"] = list(row.diagnostics)
    return doc


def emit_report(rows: list[ComparisonRow], format: str = "markdown-table") -> bytes:
    """Render comparison rows; identical input yields identical bytes.

    Formats: ``markdown-table`` (Table-1-shaped columns plus delta and
    severity), ``csv`` (RFC 4180, header row), ``json`` (array of row
    objects with one-decimal scores).
    """
    if format in ("markdown-table", "md", "markdown"):
        return _emit_markdown(rows)
    if format == "csv":
        return _emit_csv(rows)
    if format == "json":
        doc = json.dumps([row_json_dict(r) for r in rows], indent=2)
        return (doc + "\n").encode("utf-8")
    raise ValueError(f"unsupported report format {format!r}")


def _emit_markdown(rows: list[ComparisonRow]) -> bytes:
    header = (
        "| # | Vulnerability description | RVSSv1.0 | CVSSv3.0 "
        "| Delta base | RVSS severity | CVSS severity |"
    )
    lines = [header, "|---|---|---|---|---|---|---|"]
    for row in rows:
        delta = "-" if row.delta_base is None else f"{row.delta_base:+.1f}"
        rvss_sev = row.rvss_severities[0] if row.rvss_severities else "-"
        cvss_sev = row.cvss_severities[0] if row.cvss_severities else "-"
        description = row.description.replace("|", "\\|")
        lines.append(
            f"| {row.id} | {description} | {_fmt_triple(row.rvss_triple)} "
            f"| {_fmt_triple(row.cvss_triple)} | {delta} | {rvss_sev} | {cvss_sev} |"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


_CSV_FIELDS = (
    "id", "description",
    "rvss_base", "rvss_temporal", "rvss_environmental", "rvss_severity",
    "cvss_base", "cvss_temporal", "cvss_environmental", "cvss_severity",
    "delta_base",
)


def _emit_csv(rows: list[ComparisonRow]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(_CSV_FIELDS)
    for row in rows:
        def triple_cells(triple, severities):
            if triple is None:
                return ["", "", "", ""]
            return [f"{v:.1f}" for v in triple.as_tuple()] + [severities[0]]

        writer.writerow(
            [row.id, row.description]
            + triple_cells(row.rvss_triple, row.rvss_severities)
            + triple_cells(row.cvss_triple, row.cvss_severities)
            + ["" if row.delta_base is None else f"{row.delta_base:+.1f}"]
        )
    return buffer.getvalue().encode("utf-8")
