"""Base, Temporal and Environmental scoring for CVSS v3.0 and RVSS v1.0.

All sub-score arithmetic runs in double-precision floats; only roundup
quantises. The functions are pure and stateless.

Two behaviours deserve a note because the published material is ambiguous
and the worked examples pin them down:

* Modified Age participates in the modified exploitability product
  (MY not-defined inherits Y), symmetric with every other modified
  metric; otherwise the metric would be a no-op.
* Modified Safety not-defined defers to the *base* Safety weight and
  contributes only the additive ``1.2 * H * HR`` term, which is exactly
  the base formula's safety contribution. An explicitly set MH uses its
  own weight table and additionally multiplies ``(1 - MH*HR)`` into the
  impact complement product. Substituting the base weight into that
  product as well does not reproduce the published scores; multiplying
  by the nominal X weight of 1.0 would zero the complement entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import Scheme, lookup_weight
from .codec import CompositeAV, ParsedVector, serialize

SEVERITY_LABELS = ("None", "Low", "Medium", "High", "Critical")


@dataclass(frozen=True)
class SubScores:
    exploitability: float
    isc_base: float
    impact: float
    m_exploitability: float | None = None
    isc_modified: float | None = None
    m_impact: float | None = None


@dataclass(frozen=True)
class ScoreTriple:
    base: float
    temporal: float
    environmental: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.base, self.temporal, self.environmental)


@dataclass(frozen=True)
class ScoreReport:
    """Full scoring result; the shared CLI/service wire object."""

    scheme: Scheme
    vector: str
    canonical_vector: str
    scores: ScoreTriple
    severities: tuple[str, str, str]  # per base/temporal/environmental
    subscores: SubScores

    def to_json_dict(self, include_subscores: bool = True) -> dict:
        doc = {
            "scheme": self.scheme.prefix,
            "vector": self.vector,
            "canonicalVector": self.canonical_vector,
            "scores": {
                "base": self.scores.base,
                "temporal": self.scores.temporal,
                "environmental": self.scores.environmental,
            },
            "severities": {
                "base": self.severities[0],
                "temporal": self.severities[1],
                "environmental": self.severities[2],
            },
        }
        if include_subscores:
            s = self.subscores
            doc["subscores"] = {
                "exploitability": round(s.exploitability, 6),
                "iscBase": round(s.isc_base, 6),
                "impact": round(s.impact, 6),
                "mExploitability": round(s.m_exploitability, 6),
                "iscModified": round(s.isc_modified, 6),
                "mImpact": round(s.m_impact, 6),
            }
        return doc


def roundup(x: float) -> float:
    """Smallest one-decimal value >= x.

    Computed over integer ten-thousandths so that float residue from prior
    arithmetic (e.g. 8.6000000001 standing for an exact 8.6) cannot bump
    the result into the next decile.
    """
    i = math.floor(x * 10000 + 0.5)
    if i % 1000 == 0:
        return i / 10000.0
    return (i // 1000 + 1) / 10.0


def severity_rating(score: float) -> str:
    """Qualitative severity band of a one-decimal score."""
    deciles = round(score * 10)
    if deciles <= 0:
        return "None"
    if deciles <= 39:
        return "Low"
    if deciles <= 69:
        return "Medium"
    if deciles <= 89:
        return "High"
    return "Critical"


def _is_rvss(vector: ParsedVector) -> bool:
    return vector.scheme is Scheme.RVSS_1_0


def _scope_changed(vector: ParsedVector) -> bool:
    return vector.get("S") == "C"


def _weight(vector: ParsedVector, key: str, scope_changed: bool = False) -> float:
    value = vector.get(key)
    if isinstance(value, CompositeAV):
        return value.weight
    return lookup_weight(vector.scheme, key, value, scope_changed)


def exploitability_subscore(vector: ParsedVector) -> float:
    """8.22 * AV * AC * PR * UI, with the Age factor for RVSS."""
    sc = _scope_changed(vector)
    product = (
        8.22
        * _weight(vector, "AV")
        * _weight(vector, "AC")
        * _weight(vector, "PR", scope_changed=sc)
        * _weight(vector, "UI")
    )
    if _is_rvss(vector):
        product *= _weight(vector, "Y")
    return product


def _impact_from_isc(isc: float, scope_changed: bool) -> float:
    if not scope_changed:
        return 6.42 * isc
    # Above an ISC of 1 (reachable only through the RVSS safety term) the
    # exponent argument is pinned at 0.96 so the power term stays bounded.
    tail = 0.96 if isc > 1.0 else isc - 0.02
    return 7.52 * (isc - 0.029) - 3.25 * tail**15


def impact_subscore(vector: ParsedVector) -> tuple[float, float]:
    """(ISC, impact): the impact complement product plus the safety term."""
    isc = 1.0 - (
        (1.0 - _weight(vector, "C"))
        * (1.0 - _weight(vector, "I"))
        * (1.0 - _weight(vector, "A"))
    )
    if _is_rvss(vector):
        isc += 1.2 * _weight(vector, "H")
    return isc, _impact_from_isc(isc, _scope_changed(vector))


def base_score(vector: ParsedVector) -> float:
    _, impact = impact_subscore(vector)
    if impact <= 0:
        return 0.0
    total = impact + exploitability_subscore(vector)
    if _scope_changed(vector):
        total *= 1.08
    return roundup(min(total, 10.0))


def _temporal_multiplier(vector: ParsedVector) -> float:
    product = 1.0
    for key in ("E", "RL", "RC"):
        code = vector.get(key)
        if code is not None:
            product *= lookup_weight(vector.scheme, key, code)
    return product


def temporal_score(vector: ParsedVector) -> float:
    """roundup(base * E * RL * RC); absent temporal metrics count as X."""
    return roundup(base_score(vector) * _temporal_multiplier(vector))


def _modified_code(vector: ParsedVector, modified_key: str, base_key: str):
    """Modified metric value with not-defined inheriting the base value."""
    value = vector.get(modified_key)
    if value is None or value == "X":
        return vector.get(base_key)
    return value


def _modified_scope_changed(vector: ParsedVector) -> bool:
    return _modified_code(vector, "MS", "S") == "C"


def _modified_weight(vector, modified_key, base_key, scope_changed=False) -> float:
    value = _modified_code(vector, modified_key, base_key)
    if isinstance(value, CompositeAV):
        return value.weight
    return lookup_weight(vector.scheme, modified_key, value, scope_changed)


def _environmental_parts(vector: ParsedVector) -> tuple[float, float, float]:
    """(M.Exploitability, ISC modified, M.Impact)."""
    rvss = _is_rvss(vector)
    msc = _modified_scope_changed(vector)

    m_exploitability = (
        8.22
        * _modified_weight(vector, "MAV", "AV")
        * _modified_weight(vector, "MAC", "AC")
        * _modified_weight(vector, "MPR", "PR", scope_changed=msc)
        * _modified_weight(vector, "MUI", "UI")
    )
    if rvss:
        m_exploitability *= _modified_weight(vector, "MY", "Y")

    def requirement(key: str) -> float:
        code = vector.get(key)
        return lookup_weight(vector.scheme, key, code) if code else 1.0

    complement = (
        (1.0 - _modified_weight(vector, "MC", "C") * requirement("CR"))
        * (1.0 - _modified_weight(vector, "MI", "I") * requirement("IR"))
        * (1.0 - _modified_weight(vector, "MA", "A") * requirement("AR"))
    )
    if rvss:
        hr = requirement("HR")
        mh_code = vector.get("MH")
        if mh_code is None or mh_code == "X":
            # Defer to base Safety: same contribution shape as the base ISC.
            mh = _weight(vector, "H")
        else:
            mh = lookup_weight(vector.scheme, "MH", mh_code)
            complement *= 1.0 - mh * hr
        isc_modified = min(1.0 - complement, 0.915) + 1.2 * mh * hr
    else:
        isc_modified = min(1.0 - complement, 0.915)

    return m_exploitability, isc_modified, _impact_from_isc(isc_modified, msc)


def environmental_score(vector: ParsedVector) -> float:
    m_exploitability, _, m_impact = _environmental_parts(vector)
    if m_impact <= 0:
        return 0.0
    total = m_impact + m_exploitability
    if _modified_scope_changed(vector):
        total *= 1.08
    return roundup(roundup(min(total, 10.0)) * _temporal_multiplier(vector))


def score(vector: ParsedVector) -> ScoreReport:
    """Full triple, sub-scores and severity bands for a parsed vector."""
    isc_base, impact = impact_subscore(vector)
    m_exploitability, isc_modified, m_impact = _environmental_parts(vector)
    triple = ScoreTriple(
        base=base_score(vector),
        temporal=temporal_score(vector),
        environmental=environmental_score(vector),
    )
    return ScoreReport(
        scheme=vector.scheme,
        vector=vector.source_text or serialize(vector),
        canonical_vector=serialize(vector),
        scores=triple,
        severities=tuple(severity_rating(s) for s in triple.as_tuple()),
        subscores=SubScores(
            exploitability=exploitability_subscore(vector),
            isc_base=isc_base,
            impact=impact,
            m_exploitability=m_exploitability,
            isc_modified=isc_modified,
            m_impact=m_impact,
        ),
    )
