"""Metric catalogs for CVSS v3.0 and RVSS v1.0.

The catalog is the single source of truth for metric keys, legal value
codes, numeric weights, defaults and ordering. It is static data compiled
into the package; everything else (codec, engine, CLI, service, UI) reads
it through the lookup functions below and hardcodes nothing.

Weight-table notes, kept here because they are easy to lose:

* PR/MPR Low and High have a second weight that applies when the
  (modified) scope is changed: L 0.62 -> 0.68, H 0.27 -> 0.50. RVSS keeps
  this behaviour; its MPR table lists the changed-scope figures directly.
* RVSS Age value T ("less than 3 years") is weighted 1.2. Published
  sources also show 1.3 and 1.1 for the same code; 1.2 is the only weight
  consistent with the published worked scores, so it is the one shipped
  (the golden tests pin it).
* Safety accepts HU as an alias of H (Human); H is the canonical spelling.
  Modified Safety canonically uses HU and accepts H as an alias.
* MH's X weight of 1.0 is a not-defined sentinel: the engine substitutes
  the base Safety weight instead of multiplying by it (see engine module).
* Scope values (S/MS) carry no arithmetic weight; they select formula
  branches. They are exported with weight 1.0 as a neutral placeholder.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import UnknownMetric, UnknownValue


class Scheme(enum.Enum):
    """Scoring scheme identifier; the value is the vector-string prefix."""

    CVSS_3_0 = "CVSS:3.0"
    RVSS_1_0 = "RVSS:1.0"

    @property
    def prefix(self) -> str:
        return self.value


# RVSS attack-vector token classes; a composite is one network token
# followed by one physical token, L stands alone.
NETWORK_AV_TOKENS = ("RN", "AN", "IN")
PHYSICAL_AV_TOKENS = ("PP", "PR", "PI")
LOCAL_AV_TOKEN = "L"


@dataclass(frozen=True)
class ValueDefinition:
    code: str
    label: str
    weight: float
    weight_scope_changed: float | None = None
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class MetricDefinition:
    key: str
    name: str
    group: str  # Base | Temporal | Environmental
    subgroup: str | None  # Exploitability | Impact | None
    mandatory: bool
    values: tuple[ValueDefinition, ...]
    composable: bool = False  # RVSS AV/MAV accept network+physical composites

    def value(self, code: str) -> ValueDefinition:
        for v in self.values:
            if v.code == code or code in v.aliases:
                return v
        raise UnknownValue(self.key, code)


def _v(code, label, weight, sc=None, aliases=()):
    return ValueDefinition(code, label, weight, sc, tuple(aliases))


_AC_VALUES = (_v("L", "Low", 0.77), _v("H", "High", 0.44))
_PR_VALUES = (
    _v("N", "None", 0.85),
    _v("L", "Low", 0.62, sc=0.68),
    _v("H", "High", 0.27, sc=0.50),
)
_UI_VALUES = (_v("N", "None", 0.85), _v("R", "Required", 0.62))
_SCOPE_VALUES = (_v("U", "Unchanged", 1.0), _v("C", "Changed", 1.0))
_CIA_VALUES = (_v("H", "High", 0.56), _v("L", "Low", 0.22), _v("N", "None", 0.0))
_E_VALUES = (
    _v("X", "Not Defined", 1.0),
    _v("H", "High", 1.0),
    _v("F", "Functional", 0.97),
    _v("P", "Proof of Concept", 0.94),
    _v("U", "Unproven", 0.91),
)
_RL_VALUES = (
    _v("X", "Not Defined", 1.0),
    _v("U", "Unavailable", 1.0),
    _v("W", "Workaround", 0.97),
    _v("T", "Temporary Fix", 0.96),
    _v("O", "Official Fix", 0.95),
)
_RC_VALUES = (
    _v("X", "Not Defined", 1.0),
    _v("C", "Confirmed", 1.0),
    _v("R", "Reasonable", 0.96),
    _v("U", "Unknown", 0.92),
)
_REQ_VALUES = (
    _v("X", "Not Defined", 1.0),
    _v("L", "Low", 0.5),
    _v("M", "Medium", 1.0),
    _v("H", "High", 1.5),
)
_ND = _v("X", "Not Defined", 1.0)

_CVSS_AV_VALUES = (
    _v("N", "Network", 0.85),
    _v("A", "Adjacent Network", 0.62),
    _v("L", "Local", 0.55),
    _v("P", "Physical", 0.2),
)
_RVSS_AV_VALUES = (
    _v("RN", "Remote Network", 0.85),
    _v("AN", "Adjacent Network", 0.62),
    _v("IN", "Internal Network", 0.4),
    _v("L", "Local", 0.55),
    _v("PP", "Physical Public", 0.62),
    _v("PR", "Physical Restricted", 0.4),
    _v("PI", "Physical Isolated", 0.2),
)
_AGE_VALUES = (
    _v("Z", "Zero Day", 1.0),
    _v("O", "1 year or less", 1.1),
    _v("T", "Less than 3 years", 1.2),
    _v("M", "More than 3 years", 1.5),
    _v("U", "Unknown", 1.0),
)
_SAFETY_VALUES = (
    _v("U", "Unknown", 0.0),
    _v("N", "None", 0.0),
    _v("E", "Environmental", 0.15),
    _v("H", "Human", 0.35, aliases=("HU",)),
)
_MOD_SAFETY_VALUES = (
    _v("X", "Not Defined", 1.0),
    _v("U", "Unknown", 0.0),
    _v("N", "None", 0.0),
    _v("E", "Environmental", 0.56),
    _v("HU", "Human", 0.8, aliases=("H",)),
)
_MOD_SCOPE_VALUES = (_ND,) + _SCOPE_VALUES
_MOD_CIA_VALUES = (_ND,) + _CIA_VALUES


def _m(key, name, group, subgroup, mandatory, values, composable=False):
    return MetricDefinition(key, name, group, subgroup, mandatory, values, composable)


_CVSS_METRICS = (
    _m("AV", "Attack Vector", "Base", "Exploitability", True, _CVSS_AV_VALUES),
    _m("AC", "Attack Complexity", "Base", "Exploitability", True, _AC_VALUES),
    _m("PR", "Privileges Required", "Base", "Exploitability", True, _PR_VALUES),
    _m("UI", "User Interaction", "Base", "Exploitability", True, _UI_VALUES),
    _m("S", "Scope", "Base", "Exploitability", True, _SCOPE_VALUES),
    _m("C", "Confidentiality", "Base", "Impact", True, _CIA_VALUES),
    _m("I", "Integrity", "Base", "Impact", True, _CIA_VALUES),
    _m("A", "Availability", "Base", "Impact", True, _CIA_VALUES),
    _m("E", "Exploit Code Maturity", "Temporal", None, False, _E_VALUES),
    _m("RL", "Remediation Level", "Temporal", None, False, _RL_VALUES),
    _m("RC", "Report Confidence", "Temporal", None, False, _RC_VALUES),
    _m("CR", "Confidentiality Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("IR", "Integrity Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("AR", "Availability Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("MAV", "Modified Attack Vector", "Environmental", "Exploitability", False,
       (_ND,) + _CVSS_AV_VALUES),
    _m("MAC", "Modified Attack Complexity", "Environmental", "Exploitability", False,
       (_ND,) + _AC_VALUES),
    _m("MPR", "Modified Privileges Required", "Environmental", "Exploitability", False,
       (_ND,
        _v("N", "None", 0.85),
        _v("L", "Low", 0.62, sc=0.68),
        _v("H", "High", 0.27, sc=0.50))),
    _m("MUI", "Modified User Interaction", "Environmental", "Exploitability", False,
       (_ND,) + _UI_VALUES),
    _m("MS", "Modified Scope", "Environmental", "Impact", False, _MOD_SCOPE_VALUES),
    _m("MC", "Modified Confidentiality", "Environmental", "Impact", False, _MOD_CIA_VALUES),
    _m("MI", "Modified Integrity", "Environmental", "Impact", False, _MOD_CIA_VALUES),
    _m("MA", "Modified Availability", "Environmental", "Impact", False, _MOD_CIA_VALUES),
)

_RVSS_METRICS = (
    _m("AV", "Attack Vector", "Base", "Exploitability", True, _RVSS_AV_VALUES,
       composable=True),
    _m("AC", "Attack Complexity", "Base", "Exploitability", True, _AC_VALUES),
    _m("PR", "Privileges Required", "Base", "Exploitability", True, _PR_VALUES),
    _m("UI", "User Interaction", "Base", "Exploitability", True, _UI_VALUES),
    _m("Y", "Age", "Base", "Exploitability", True, _AGE_VALUES),
    _m("S", "Scope", "Base", "Exploitability", True, _SCOPE_VALUES),
    _m("C", "Confidentiality", "Base", "Impact", True, _CIA_VALUES),
    _m("I", "Integrity", "Base", "Impact", True, _CIA_VALUES),
    _m("A", "Availability", "Base", "Impact", True, _CIA_VALUES),
    _m("H", "Safety", "Base", "Impact", True, _SAFETY_VALUES),
    _m("E", "Exploit Code Maturity", "Temporal", None, False, _E_VALUES),
    _m("RL", "Remediation Level", "Temporal", None, False, _RL_VALUES),
    _m("RC", "Report Confidence", "Temporal", None, False, _RC_VALUES),
    _m("CR", "Confidentiality Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("IR", "Integrity Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("AR", "Availability Requirement", "Environmental", None, False, _REQ_VALUES),
    _m("HR", "Safety Requirement", "Environmental", None, False, _REQ_VALUES),
    # MAV accepts the full RVSS attack-vector token set, composites included,
    # so any base attack vector can be re-rated for a concrete deployment.
    _m("MAV", "Modified Attack Vector", "Environmental", "Exploitability", False,
       (_ND,) + _RVSS_AV_VALUES, composable=True),
    _m("MAC", "Modified Attack Complexity", "Environmental", "Exploitability", False,
       (_ND,) + _AC_VALUES),
    _m("MPR", "Modified Privileges Required", "Environmental", "Exploitability", False,
       (_ND,
        _v("N", "None", 0.85),
        _v("L", "Low", 0.62, sc=0.68),
        _v("H", "High", 0.27, sc=0.50))),
    _m("MUI", "Modified User Interaction", "Environmental", "Exploitability", False,
       (_ND,) + _UI_VALUES),
    _m("MY", "Modified Age", "Environmental", "Exploitability", False,
       (_ND,) + _AGE_VALUES),
    _m("MS", "Modified Scope", "Environmental", "Impact", False, _MOD_SCOPE_VALUES),
    _m("MC", "Modified Confidentiality", "Environmental", "Impact", False, _MOD_CIA_VALUES),
    _m("MI", "Modified Integrity", "Environmental", "Impact", False, _MOD_CIA_VALUES),
    _m("MA", "Modified Availability", "Environmental", "Impact", False, _MOD_CIA_VALUES),
    _m("MH", "Modified Safety", "Environmental", "Impact", False, _MOD_SAFETY_VALUES),
)


@dataclass(frozen=True)
class MetricCatalog:
    """Immutable per-scheme catalog with fast key lookup."""

    scheme: Scheme
    metrics: tuple[MetricDefinition, ...]
    _by_key: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_key", {m.key: m for m in self.metrics})

    def metric(self, key: str) -> MetricDefinition:
        try:
            return self._by_key[key]
        except KeyError:
            raise UnknownMetric(key) from None

    def __contains__(self, key: str) -> bool:
        return key in self._by_key

    @property
    def mandatory_keys(self) -> tuple[str, ...]:
        return tuple(m.key for m in self.metrics if m.mandatory)

    def order_index(self, key: str) -> int:
        return self.metrics.index(self.metric(key))


CATALOGS = {
    Scheme.CVSS_3_0: MetricCatalog(Scheme.CVSS_3_0, _CVSS_METRICS),
    Scheme.RVSS_1_0: MetricCatalog(Scheme.RVSS_1_0, _RVSS_METRICS),
}


def list_metrics(scheme: Scheme) -> tuple[MetricDefinition, ...]:
    """All metric definitions for a scheme, in canonical vector order."""
    return CATALOGS[scheme].metrics


def get_metric(scheme: Scheme, key: str) -> MetricDefinition:
    return CATALOGS[scheme].metric(key)


def lookup_weight(scheme: Scheme, key: str, code: str, scope_changed: bool = False) -> float:
    """Effective numeric weight of (scheme, metric, value).

    ``scope_changed`` only matters for PR/MPR Low and High, which carry a
    second weight under changed (modified) scope. Alias codes resolve to
    the same weight as their canonical spelling.
    """
    value = CATALOGS[scheme].metric(key).value(code)
    if scope_changed and value.weight_scope_changed is not None:
        return value.weight_scope_changed
    return value.weight


def canonical_code(scheme: Scheme, key: str, code: str) -> str:
    """Canonical spelling of a value code (resolves aliases, e.g. HU -> H)."""
    return CATALOGS[scheme].metric(key).value(code).code


def default_assignment(scheme: Scheme, key: str) -> str:
    """Pre-fill value for a metric: X for optional metrics.

    Mandatory metrics have no default; the caller must supply a value, so
    asking for one is an error.
    """
    metric = CATALOGS[scheme].metric(key)
    if metric.mandatory:
        raise ValueError(f"no default for mandatory metric {key!r}")
    return "X"


def catalog_export(scheme: Scheme) -> dict:
    """Machine-readable catalog document (drives the calculator UI)."""
    metrics = []
    for m in CATALOGS[scheme].metrics:
        values = []
        for v in m.values:
            entry = {"code": v.code, "label": v.label, "weight": v.weight}
            if v.weight_scope_changed is not None:
                entry["weightScopeChanged"] = v.weight_scope_changed
            if v.aliases:
                entry["aliases"] = list(v.aliases)
            values.append(entry)
        entry = {
            "key": m.key,
            "name": m.name,
            "group": m.group,
            "subgroup": m.subgroup,
            "mandatory": m.mandatory,
            "composable": m.composable,
            "values": values,
        }
        if m.composable:
            entry["compositions"] = _compositions(m)
        metrics.append(entry)
    return {"scheme": scheme.prefix, "metrics": metrics}


def _compositions(metric: MetricDefinition) -> list[dict]:
    """Legal network+physical attack-vector composites with product weights."""
    weights = {v.code: v.weight for v in metric.values}
    combos = []
    for net in NETWORK_AV_TOKENS:
        for phys in PHYSICAL_AV_TOKENS:
            combos.append(
                {
                    "code": net + phys,
                    "tokens": [net, phys],
                    "weight": round(weights[net] * weights[phys], 6),
                }
            )
    return combos
