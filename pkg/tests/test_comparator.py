import io
import json

import pytest

from rvss import codec, engine
from rvss.comparator import (
    BUILTIN_EXPECTED,
    builtin_corpus,
    compare,
    emit_report,
    load_records,
    VulnRecord,
)
from rvss.errors import EmptyCorpus, UnreadableSource

EXPECTED_TRIPLES = {
    "1": {"rvss": (7.7, 7.7, 7.7), "cvss": (9.1, 9.1, 9.1)},
    "2": {"rvss": (10.0, 10.0, 10.0), "cvss": (8.8, 8.8, 8.8)},
    "3": {"rvss": (10.0, 10.0, 10.0), "cvss": (10.0, 10.0, 10.0)},
    "4": {"rvss": (5.9, 5.9, 5.9), "cvss": (0.0, 0.0, 0.0)},
}


class TestBuiltinCorpus:
    def test_four_records_with_both_vectors(self):
        corpus = builtin_corpus()
        assert len(corpus) == 4
        for record in corpus:
            assert record.cvss_vector and record.rvss_vector

    def test_embedded_expectations(self):
        assert BUILTIN_EXPECTED["1"]["rvss"].as_tuple() == (7.7, 7.7, 7.7)
        assert BUILTIN_EXPECTED["4"]["cvss"].as_tuple() == (0.0, 0.0, 0.0)
        assert BUILTIN_EXPECTED["2"]["cvss"].as_tuple() == (8.8, 8.8, 8.8)

    def test_corpus_is_self_verifying(self):
        for row in compare(builtin_corpus()):
            assert row.rvss_triple.as_tuple() == EXPECTED_TRIPLES[row.id]["rvss"]
            assert row.cvss_triple.as_tuple() == EXPECTED_TRIPLES[row.id]["cvss"]
            assert not row.diagnostics


class TestCompare:
    def test_row1_delta(self):
        rows = compare(builtin_corpus())
        assert rows[0].delta_base == pytest.approx(-1.4)

    def test_row4_delta_library_case(self):
        rows = compare(builtin_corpus())
        assert rows[3].delta_base == pytest.approx(5.9)

    def test_single_scheme_record_has_no_delta(self):
        record = VulnRecord(
            id="x", description="",
            rvss_vector="RVSS:1.0/AV:RN/AC:L/PR:N/UI:N/Y:Z/S:U/C:H/I:H/A:H/H:N",
        )
        row = compare([record])[0]
        assert row.cvss_triple is None
        assert row.delta_base is None
        assert row.rvss_triple is not None

    def test_bad_vector_becomes_row_diagnostic(self):
        record = VulnRecord(id="bad", description="", cvss_vector="CVSS:3.0/AV:N")
        row = compare([record])[0]
        assert row.cvss_triple is None
        assert any("MissingMandatory" in d for d in row.diagnostics)

    def test_order_preserved(self):
        reversed_corpus = list(reversed(builtin_corpus()))
        assert [r.id for r in compare(reversed_corpus)] == ["4", "3", "2", "1"]

    def test_engine_consistency(self):
        for record, row in zip(builtin_corpus(), compare(builtin_corpus())):
            rescored = engine.score(codec.parse(record.rvss_vector))
            assert row.rvss_triple == rescored.scores


class TestLoadRecords:
    def _jsonl(self, records):
        return "\n".join(json.dumps(r) for r in records)

    def test_jsonl_round_trip(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text(self._jsonl([
            {"id": r.id, "description": r.description,
             "cvss_vector": r.cvss_vector, "rvss_vector": r.rvss_vector}
            for r in builtin_corpus()
        ]))
        records, diagnostics = load_records(path, "jsonl")
        assert len(records) == 4
        assert not diagnostics
        assert records[0] == builtin_corpus()[0]

    def test_csv_equivalent(self, tmp_path):
        path = tmp_path / "corpus.csv"
        lines = ["id,description,cvss_vector,rvss_vector"]
        for r in builtin_corpus():
            description = '"' + r.description.replace('"', '""') + '"'
            lines.append(f"{r.id},{description},{r.cvss_vector},{r.rvss_vector}")
        path.write_text("\n".join(lines))
        records, diagnostics = load_records(path, "csv")
        assert not diagnostics
        assert records == builtin_corpus()

    def test_bad_rows_are_isolated(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text(self._jsonl([
            {"id": "good", "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H"},
            {"id": "bad", "rvss_vector": "RVSS:1.0/AV:QQ/AC:L/PR:N/UI:N/Y:Z/S:U/C:N/I:H/A:H/H:N"},
        ]) + "\nnot json at all\n")
        records, diagnostics = load_records(path, "jsonl")
        assert [r.id for r in records] == ["good"]
        codes = {d.code for d in diagnostics}
        assert "IllegalComposition" in codes or "UnknownValue" in codes
        assert "BadJson" in codes
        assert all(d.line for d in diagnostics)

    def test_wrong_prefix_in_column(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text(self._jsonl([
            {"id": "swapped",
             "cvss_vector": "RVSS:1.0/AV:RN/AC:L/PR:N/UI:N/Y:Z/S:U/C:N/I:H/A:H/H:N"},
        ]) + "\n" + self._jsonl([
            {"id": "ok", "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H"},
        ]))
        records, diagnostics = load_records(path, "jsonl")
        assert [r.id for r in records] == ["ok"]
        assert diagnostics[0].code == "WrongScheme"

    def test_all_bad_rows_is_empty_corpus(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        path.write_text('{"id": "x"}\n{"nope": 1}\n')
        with pytest.raises(EmptyCorpus):
            load_records(path, "jsonl")

    def test_missing_file_is_unreadable(self, tmp_path):
        with pytest.raises(UnreadableSource):
            load_records(tmp_path / "nope.jsonl", "jsonl")

    def test_stream_source(self):
        data = self._jsonl([
            {"id": "s", "cvss_vector": "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H"},
        ]).encode()
        records, _ = load_records(io.BytesIO(data), "jsonl")
        assert records[0].id == "s"


class TestEmitReport:
    def test_markdown_shape(self):
        payload = emit_report(compare(builtin_corpus()), "markdown-table")
        text = payload.decode()
        lines = text.strip().splitlines()
        assert lines[0].startswith(
            "| # | Vulnerability description | RVSSv1.0 | CVSSv3.0 |")
        assert len(lines) == 2 + 4
        assert "| (7.7, 7.7, 7.7) | (9.1, 9.1, 9.1) | -1.4 | High | Critical |" in lines[2]
        assert "+5.9" in lines[5]

    def test_markdown_deterministic(self):
        first = emit_report(compare(builtin_corpus()), "md")
        second = emit_report(compare(builtin_corpus()), "md")
        assert first == second

    def test_csv_header_only_for_empty_rows(self):
        payload = emit_report([], "csv")
        assert payload.decode().strip() == (
            "id,description,"
            "rvss_base,rvss_temporal,rvss_environmental,rvss_severity,"
            "cvss_base,cvss_temporal,cvss_environmental,cvss_severity,"
            "delta_base"
        )

    def test_csv_values(self):
        payload = emit_report(compare(builtin_corpus()), "csv")
        lines = payload.decode().splitlines()
        assert len(lines) == 5
        assert lines[4].endswith("5.9,5.9,5.9,Medium,0.0,0.0,0.0,None,+5.9")

    def test_json_report(self):
        payload = emit_report(compare(builtin_corpus()), "json")
        rows = json.loads(payload)
        assert len(rows) == 4
        assert rows[0]["rvss"]["scores"] == \
            {"base": 7.7, "temporal": 7.7, "environmental": 7.7}
        assert rows[0]["deltaBase"] == pytest.approx(-1.4)
        assert rows[3]["cvss"]["severities"]["base"] == "None"

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            emit_report([], "xml")
