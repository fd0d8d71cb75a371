import json

import pytest

from algraphs.core.exceptions import InputError
from algraphs.payloads.documents import AlgebraDocument, dump_algebra, load_algebra, parse_document
from algraphs.payloads.reports import InstanceRecord, ReportSummary, VerificationReport

VOLKOV_DOCUMENT = {
    "name": "Volkov",
    "size": 3,
    "elements": ["a", "b", "e"],
    "operations": [{"name": "mul", "arity": 2, "table": [2, 1, 2, 1, 2, 1, 2, 1, 2]}],
}


# ==============================================================================
# Algebra Document
# ==============================================================================

def test_dump_algebra_writes_the_flat_tables(volkov):
    data = json.loads(dump_algebra(volkov))
    assert data == VOLKOV_DOCUMENT


def test_load_algebra(tmp_path):
    path = tmp_path / "volkov.json"
    path.write_text(json.dumps(VOLKOV_DOCUMENT), encoding="utf-8")
    algebra = load_algebra(path)
    assert algebra.size == 3
    assert algebra.label(int(algebra.operation("mul").table[0, 1])) == "b"


def test_default_element_names():
    document = AlgebraDocument(name="Z2", size=2, operations=[{"name": "mul", "arity": 2, "table": [0, 1, 1, 0]}])
    assert document.to_algebra().element_names == ("0", "1")


@pytest.mark.parametrize(
    "change, path",
    [
        ({"elements": ["a", "b"]}, "elements"),
        ({"elements": ["a", "a", "e"]}, "elements"),
        ({"operations": [{"name": "mul", "arity": 2, "table": [0, 1, 2]}]}, "operations.0.table"),
        ({"operations": [{"name": "mul", "arity": 2, "table": [0] * 8 + [3]}]}, "operations.0.table.8"),
        (
            {"operations": [{"name": "f", "arity": 1, "table": [0, 1, 2]}, {"name": "f", "arity": 1, "table": [0, 0, 0]}]},
            "operations.1.name",
        ),
    ],
)
def test_algebra_document_errors_carry_a_path(change, path):
    document = AlgebraDocument.model_validate({**VOLKOV_DOCUMENT, **change})
    with pytest.raises(InputError) as info:
        document.to_algebra()
    assert info.value.path == path


def test_schema_errors_become_input_errors():
    with pytest.raises(InputError) as info:
        parse_document(AlgebraDocument, json.dumps({**VOLKOV_DOCUMENT, "size": 0}))
    assert info.value.path == "size"
    with pytest.raises(InputError):
        parse_document(AlgebraDocument, "{not json")
    with pytest.raises(InputError):
        parse_document(AlgebraDocument, json.dumps({**VOLKOV_DOCUMENT, "colour": "red"}))


# ==============================================================================
# Verification Report
# ==============================================================================

def test_report_orders_instances_and_counts_outcomes():
    records = [
        InstanceRecord(algebra="C6", claim="b", outcome="pass"),
        InstanceRecord(algebra="C2", claim="z", outcome="fail", witness={"edge": ["0", "1"]}),
        InstanceRecord(algebra="C2", claim="a", outcome="error", witness={"limit": "max_graph_order"}),
    ]
    report = VerificationReport.assemble("spanning", "groups", 6, records)
    assert [(r.algebra, r.claim) for r in report.instances] == [("C2", "a"), ("C2", "z"), ("C6", "b")]
    assert report.summary == ReportSummary(total=3, passed=1, failed=1, errors=1)
    assert not report.all_passed
    assert len(report.failures()) == 2


def test_failed_records_need_a_witness():
    with pytest.raises(ValueError):
        InstanceRecord(algebra="C2", claim="a", outcome="fail")


def test_inconsistent_summary_is_rejected():
    with pytest.raises(ValueError):
        VerificationReport(
            suite="spanning",
            family="groups",
            max_order=2,
            instances=[InstanceRecord(algebra="C2", claim="a", outcome="pass")],
            summary=ReportSummary(total=5, passed=5),
        )
