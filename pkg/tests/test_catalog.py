import pytest

from rvss.catalog import (
    Scheme,
    catalog_export,
    default_assignment,
    list_metrics,
    lookup_weight,
)
from rvss.errors import UnknownMetric, UnknownValue

CVSS = Scheme.CVSS_3_0
RVSS = Scheme.RVSS_1_0


def test_metric_counts_and_mandatory_sets():
    cvss = list_metrics(CVSS)
    rvss = list_metrics(RVSS)
    assert len(cvss) == 22
    assert len(rvss) == 27
    assert [m.key for m in cvss if m.mandatory] == \
        ["AV", "AC", "PR", "UI", "S", "C", "I", "A"]
    assert [m.key for m in rvss if m.mandatory] == \
        ["AV", "AC", "PR", "UI", "Y", "S", "C", "I", "A", "H"]


def test_canonical_order_mandatory_first():
    for scheme in (CVSS, RVSS):
        metrics = list_metrics(scheme)
        flags = [m.mandatory for m in metrics]
        assert flags == sorted(flags, reverse=True)
    assert [m.key for m in list_metrics(RVSS)] == [
        "AV", "AC", "PR", "UI", "Y", "S", "C", "I", "A", "H",
        "E", "RL", "RC", "CR", "IR", "AR", "HR",
        "MAV", "MAC", "MPR", "MUI", "MY", "MS", "MC", "MI", "MA", "MH",
    ]


def test_cvss_has_no_rvss_only_metrics():
    keys = {m.key for m in list_metrics(CVSS)}
    assert not keys & {"Y", "H", "HR", "MY", "MH"}


def test_rvss_av_token_weights():
    expected = {"RN": 0.85, "AN": 0.62, "IN": 0.4, "L": 0.55,
                "PP": 0.62, "PR": 0.4, "PI": 0.2}
    av = next(m for m in list_metrics(RVSS) if m.key == "AV")
    assert {v.code: v.weight for v in av.values} == expected


def test_rvss_age_weights():
    age = next(m for m in list_metrics(RVSS) if m.key == "Y")
    assert [(v.code, v.weight) for v in age.values] == [
        ("Z", 1.0), ("O", 1.1), ("T", 1.2), ("M", 1.5), ("U", 1.0)]


def test_rvss_safety_and_modified_safety_weights():
    assert lookup_weight(RVSS, "H", "U") == 0.0
    assert lookup_weight(RVSS, "H", "N") == 0.0
    assert lookup_weight(RVSS, "H", "E") == 0.15
    assert lookup_weight(RVSS, "H", "H") == 0.35
    mh = next(m for m in list_metrics(RVSS) if m.key == "MH")
    assert {v.code: v.weight for v in mh.values} == \
        {"X": 1.0, "U": 0.0, "N": 0.0, "E": 0.56, "HU": 0.8}


def test_rvss_hr_requirement_values():
    hr = next(m for m in list_metrics(RVSS) if m.key == "HR")
    assert {v.code: v.weight for v in hr.values} == \
        {"X": 1.0, "L": 0.5, "M": 1.0, "H": 1.5}


def test_lookup_weight_scope_variants():
    assert lookup_weight(CVSS, "PR", "L", scope_changed=True) == 0.68
    assert lookup_weight(CVSS, "PR", "L", scope_changed=False) == 0.62
    assert lookup_weight(CVSS, "PR", "H", scope_changed=True) == 0.50
    assert lookup_weight(RVSS, "MPR", "H", scope_changed=True) == 0.50
    # scope flag is a no-op everywhere else
    assert lookup_weight(CVSS, "AV", "N", scope_changed=True) == 0.85


def test_lookup_weight_examples():
    assert lookup_weight(RVSS, "C", "N") == 0.0
    assert lookup_weight(RVSS, "H", "HU") == 0.35


def test_lookup_weight_errors_name_the_token():
    with pytest.raises(UnknownMetric) as exc_info:
        lookup_weight(CVSS, "QQ", "N")
    assert "QQ" in str(exc_info.value)
    with pytest.raises(UnknownValue) as exc_info:
        lookup_weight(CVSS, "AV", "ZZ")
    assert "ZZ" in str(exc_info.value)


def test_default_assignments():
    assert default_assignment(CVSS, "RC") == "X"
    assert default_assignment(RVSS, "MH") == "X"
    with pytest.raises(ValueError):
        default_assignment(RVSS, "AV")


def test_weight_totality():
    for scheme in (CVSS, RVSS):
        for metric in list_metrics(scheme):
            for value in metric.values:
                for code in (value.code, *value.aliases):
                    for scope_changed in (False, True):
                        lookup_weight(scheme, metric.key, code, scope_changed)


def test_alias_coherence():
    for scheme in (CVSS, RVSS):
        for metric in list_metrics(scheme):
            for value in metric.values:
                for alias in value.aliases:
                    for sc in (False, True):
                        assert lookup_weight(scheme, metric.key, alias, sc) == \
                            lookup_weight(scheme, metric.key, value.code, sc)


def test_cvss_weights_are_subset_of_rvss():
    # attack vectors differ by design; every other shared (key, code)
    # carries the identical weight in both schemes
    rvss_keys = {m.key: m for m in list_metrics(RVSS)}
    for metric in list_metrics(CVSS):
        if metric.key in ("AV", "MAV"):
            continue
        twin = rvss_keys.get(metric.key)
        assert twin is not None
        twin_codes = {v.code: v for v in twin.values}
        for value in metric.values:
            if value.code in twin_codes:
                assert value.weight == twin_codes[value.code].weight
                assert value.weight_scope_changed == \
                    twin_codes[value.code].weight_scope_changed


def test_not_defined_weight_is_neutral():
    for scheme in (CVSS, RVSS):
        for metric in list_metrics(scheme):
            if metric.mandatory:
                continue
            assert lookup_weight(scheme, metric.key, "X") == 1.0


def test_scope_changed_weight_exactly_on_pr_low_high():
    for scheme in (CVSS, RVSS):
        for metric in list_metrics(scheme):
            for value in metric.values:
                expected = metric.key in ("PR", "MPR") and value.code in ("L", "H")
                assert (value.weight_scope_changed is not None) == expected, \
                    (scheme, metric.key, value.code)


def test_mandatory_metrics_are_base_group():
    for scheme in (CVSS, RVSS):
        for metric in list_metrics(scheme):
            if metric.mandatory:
                assert metric.group == "Base"


def test_export_document_shape():
    doc = catalog_export(RVSS)
    assert doc["scheme"] == "RVSS:1.0"
    assert len(doc["metrics"]) == 27
    by_key = {m["key"]: m for m in doc["metrics"]}
    assert by_key["AV"]["mandatory"] is True
    assert by_key["AV"]["composable"] is True
    assert by_key["H"]["subgroup"] == "Impact"
    pr_low = next(v for v in by_key["PR"]["values"] if v["code"] == "L")
    assert pr_low["weightScopeChanged"] == 0.68
    safety_h = next(v for v in by_key["H"]["values"] if v["code"] == "H")
    assert safety_h["aliases"] == ["HU"]

    compositions = {c["code"]: c for c in by_key["AV"]["compositions"]}
    assert len(compositions) == 9
    assert compositions["ANPI"]["weight"] == pytest.approx(0.124)
    assert compositions["ANPR"]["weight"] == pytest.approx(0.248)
    assert compositions["ANPI"]["tokens"] == ["AN", "PI"]


def test_export_cvss_has_no_compositions():
    doc = catalog_export(CVSS)
    assert len(doc["metrics"]) == 22
    for metric in doc["metrics"]:
        assert metric["composable"] is False
        assert "compositions" not in metric
