"""Vulnerability severity scoring under CVSS v3.0 and RVSS v1.0.

Library surface::

    from rvss import parse, score, serialize, Scheme

    report = score(parse("RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:E"))
    report.scores.base        # 7.7
    report.severities[0]      # "High"

The same engine backs the ``rvss`` CLI and the HTTP service
(``rvss serve``), which also hosts the interactive calculator UI.
"""

from .catalog import (
    MetricDefinition,
    Scheme,
    ValueDefinition,
    catalog_export,
    default_assignment,
    list_metrics,
    lookup_weight,
)
from .codec import CompositeAV, ParsedVector, parse, serialize, tokenize_av
from .comparator import (
    ComparisonRow,
    VulnRecord,
    builtin_corpus,
    compare,
    emit_report,
    load_records,
)
from .engine import (
    ScoreReport,
    ScoreTriple,
    SubScores,
    base_score,
    environmental_score,
    exploitability_subscore,
    impact_subscore,
    roundup,
    score,
    severity_rating,
    temporal_score,
)
from .errors import (
    BadPrefix,
    BadSegment,
    DuplicateMetric,
    EmptyCorpus,
    IllegalComposition,
    MissingMandatory,
    UnknownMetric,
    UnknownValue,
    UnreadableSource,
    VectorError,
)

__version__ = "0.1.0"

__all__ = [
    "Scheme",
    "MetricDefinition",
    "ValueDefinition",
    "list_metrics",
    "lookup_weight",
    "default_assignment",
    "catalog_export",
    "CompositeAV",
    "ParsedVector",
    "parse",
    "serialize",
    "tokenize_av",
    "ScoreReport",
    "ScoreTriple",
    "SubScores",
    "roundup",
    "score",
    "base_score",
    "temporal_score",
    "environmental_score",
    "exploitability_subscore",
    "impact_subscore",
    "severity_rating",
    "VulnRecord",
    "ComparisonRow",
    "builtin_corpus",
    "compare",
    "load_records",
    "emit_report",
    "VectorError",
    "BadPrefix",
    "BadSegment",
    "UnknownMetric",
    "UnknownValue",
    "DuplicateMetric",
    "MissingMandatory",
    "IllegalComposition",
    "UnreadableSource",
    "EmptyCorpus",
]
