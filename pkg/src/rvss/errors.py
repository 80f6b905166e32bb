"""Error types shared by the codec, catalog, comparator, CLI and service.

Every domain error carries a stable machine-readable ``code`` (its class
name) and, where meaningful, the offending token, so the CLI and the HTTP
API can surface the same structured information.
"""

from __future__ import annotations


class VectorError(ValueError):
    """Base class for vector/catalog domain errors."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token

    @property
    def code(self) -> str:
        return type(self).__name__


class BadPrefix(VectorError):
    def __init__(self, prefix: str):
        super().__init__(
            f"vector must start with 'CVSS:3.0' or 'RVSS:1.0', got {prefix!r}",
            token=prefix,
        )


class BadSegment(VectorError):
    def __init__(self, index: int, segment: str):
        super().__init__(
            f"segment {index} is not of the form KEY:VALUE: {segment!r}",
            token=segment,
        )
        self.index = index


class UnknownMetric(VectorError):
    def __init__(self, key: str):
        super().__init__(f"unknown metric {key!r}", token=key)
        self.key = key


class UnknownValue(VectorError):
    def __init__(self, key: str, value: str):
        super().__init__(f"unknown value {value!r} for metric {key!r}", token=value)
        self.key = key
        self.value = value


class DuplicateMetric(VectorError):
    def __init__(self, key: str):
        super().__init__(f"metric {key!r} assigned more than once", token=key)
        self.key = key


class MissingMandatory(VectorError):
    def __init__(self, keys: list[str]):
        joined = ", ".join(keys)
        super().__init__(f"missing mandatory metric(s): {joined}", token=joined)
        self.keys = tuple(keys)


class IllegalComposition(VectorError):
    def __init__(self, text: str, reason: str):
        super().__init__(f"illegal attack-vector composition {text!r}: {reason}", token=text)


class UnreadableSource(OSError):
    """Corpus source could not be opened or read."""


class EmptyCorpus(ValueError):
    """Corpus contained no loadable records."""
