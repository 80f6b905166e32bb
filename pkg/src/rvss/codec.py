"""Bidirectional codec between vector strings and structured vectors.

Grammar (authoritative): ``<PREFIX> ("/" KEY ":" VALUE)+`` with PREFIX one
of ``CVSS:3.0`` / ``RVSS:1.0``. Keys and values are uppercase-only and are
rejected, not folded, when they are not. Segments may arrive in any order;
parsing normalises to canonical catalog order and canonical value codes,
so two vectors are equal iff their assignments are.

RVSS attack vectors (AV/MAV) may compose one network token with one
physical token, network first; ``L`` stands alone. The effective weight of
a composite is the product of its token weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .catalog import (
    CATALOGS,
    LOCAL_AV_TOKEN,
    NETWORK_AV_TOKENS,
    PHYSICAL_AV_TOKENS,
    Scheme,
    lookup_weight,
)
from .errors import (
    BadPrefix,
    BadSegment,
    DuplicateMetric,
    IllegalComposition,
    MissingMandatory,
    UnknownMetric,
    UnknownValue,
)

_PREFIXES = {s.prefix: s for s in Scheme}


@dataclass(frozen=True)
class CompositeAV:
    """An RVSS attack-vector value: network and/or physical token, or local."""

    network: str | None = None
    physical: str | None = None
    local: bool = False

    def __post_init__(self):
        if self.local:
            if self.network or self.physical:
                raise IllegalComposition(self.text, "L cannot combine with other tokens")
        elif not (self.network or self.physical):
            raise IllegalComposition("", "empty attack-vector value")
        if self.network is not None and self.network not in NETWORK_AV_TOKENS:
            raise IllegalComposition(self.network, "not a network token")
        if self.physical is not None and self.physical not in PHYSICAL_AV_TOKENS:
            raise IllegalComposition(self.physical, "not a physical token")

    @property
    def tokens(self) -> tuple[str, ...]:
        if self.local:
            return (LOCAL_AV_TOKEN,)
        return tuple(t for t in (self.network, self.physical) if t)

    @property
    def text(self) -> str:
        return "".join(self.tokens)

    @property
    def weight(self) -> float:
        w = 1.0
        for token in self.tokens:
            w *= lookup_weight(Scheme.RVSS_1_0, "AV", token)
        return w


MetricValue = Union[str, CompositeAV]


@dataclass(frozen=True)
class ParsedVector:
    """A validated, canonically ordered set of metric assignments.

    ``source_text`` keeps the original input for reporting and is excluded
    from equality: permutations of the same assignments compare equal.
    """

    scheme: Scheme
    assignments: tuple[tuple[str, MetricValue], ...]
    source_text: str = field(compare=False, default="")

    def get(self, key: str) -> MetricValue | None:
        for k, v in self.assignments:
            if k == key:
                return v
        return None

    def code(self, key: str) -> str | None:
        """Assigned value as text (composites collapsed to token string)."""
        v = self.get(key)
        if isinstance(v, CompositeAV):
            return v.text
        return v

    @property
    def keys(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.assignments)


def tokenize_av(value_text: str) -> CompositeAV:
    """Split an RVSS attack-vector value into its composite form.

    Greedy left-to-right match over the token set; the only accepted
    shapes are a single token, or exactly one network token followed by
    exactly one physical token.
    """
    tokens: list[str] = []
    i = 0
    while i < len(value_text):
        pair = value_text[i : i + 2]
        if pair in NETWORK_AV_TOKENS or pair in PHYSICAL_AV_TOKENS:
            tokens.append(pair)
            i += 2
        elif value_text[i] == LOCAL_AV_TOKEN:
            tokens.append(LOCAL_AV_TOKEN)
            i += 1
        else:
            error = IllegalComposition(
                value_text, f"unrecognised token at position {i}"
            )
            error.position = i
            raise error

    if not tokens:
        raise IllegalComposition(value_text, "empty attack-vector value")
    if len(tokens) == 1:
        t = tokens[0]
        if t == LOCAL_AV_TOKEN:
            return CompositeAV(local=True)
        if t in NETWORK_AV_TOKENS:
            return CompositeAV(network=t)
        return CompositeAV(physical=t)
    if len(tokens) == 2:
        first, second = tokens
        if first in NETWORK_AV_TOKENS and second in PHYSICAL_AV_TOKENS:
            return CompositeAV(network=first, physical=second)
        if LOCAL_AV_TOKEN in tokens:
            raise IllegalComposition(value_text, "L cannot combine with other tokens")
        if first in PHYSICAL_AV_TOKENS and second in NETWORK_AV_TOKENS:
            raise IllegalComposition(value_text, "network token must come first")
        raise IllegalComposition(value_text, "tokens of the same class cannot combine")
    raise IllegalComposition(value_text, "at most two tokens may combine")


def parse(text: str | bytes) -> ParsedVector:
    """Parse a vector string under the scheme named by its prefix.

    Total over arbitrary input: anything that is not a valid vector raises
    exactly one of the codec errors, never anything else. Input segment
    order is free; the result is canonically ordered.
    """
    if isinstance(text, bytes):
        # latin-1 is total over bytes, so byte garbage becomes string
        # garbage and falls through the normal error paths.
        text = text.decode("latin-1")
    if not isinstance(text, str):
        raise BadPrefix(repr(text))

    segments = text.split("/")
    prefix = segments[0]
    scheme = _PREFIXES.get(prefix)
    if scheme is None:
        raise BadPrefix(prefix)
    catalog = CATALOGS[scheme]

    seen: dict[str, MetricValue] = {}
    for index, segment in enumerate(segments[1:], start=1):
        key, colon, value = segment.partition(":")
        if not colon or not key or not value:
            raise BadSegment(index, segment)
        metric = catalog.metric(key)  # UnknownMetric on bad keys
        if key in seen:
            raise DuplicateMetric(key)
        if metric.composable and value != "X":
            try:
                seen[key] = tokenize_av(value)
            except IllegalComposition as exc:
                # nothing recognisable at the start: the value itself is
                # unknown rather than a bad combination of known tokens
                if getattr(exc, "position", None) == 0:
                    raise UnknownValue(key, value) from None
                raise
        else:
            # canonicalises aliases (HU -> H for Safety); UnknownValue otherwise
            seen[key] = metric.value(value).code

    missing = [k for k in catalog.mandatory_keys if k not in seen]
    if missing:
        raise MissingMandatory(missing)

    assignments = tuple(
        (m.key, seen[m.key]) for m in catalog.metrics if m.key in seen
    )
    return ParsedVector(scheme=scheme, assignments=assignments, source_text=text)


def serialize(vector: ParsedVector) -> str:
    """Canonical vector string: catalog order, canonical codes.

    Metrics explicitly assigned X are kept (X and absence mean the same to
    the engine but are distinct to the codec); absent optionals stay absent.
    """
    parts = [vector.scheme.prefix]
    for key, value in vector.assignments:
        text = value.text if isinstance(value, CompositeAV) else value
        parts.append(f"{key}:{text}")
    return "/".join(parts)
