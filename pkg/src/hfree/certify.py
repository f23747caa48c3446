"""Self-describing verification results.

A Certificate records a claim, the parameters it was checked at, the
boolean outcome, and, for failures, a witness small enough to re-check by
hand or with an independent scan.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class Certificate:
    claim: str
    parameters: dict[str, Any] = field(default_factory=dict)
    result: bool = False
    witness: Any = None

    def to_jsonable(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "parameters": jsonable(self.parameters),
            "result": self.result,
            "witness": jsonable(self.witness),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"


def jsonable(value: Any) -> Any:
    """Recursively coerce toolkit values into JSON-encodable ones."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        seq = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in seq]
    if hasattr(value, "to_jsonable"):
        return value.to_jsonable()
    return str(value)
