"""Machine-readable verdict records and canonical JSON serialization.

Certificates must be byte-stable: identical inputs produce identical JSON
regardless of run, thread count, or kernel backend.  Canonical form means
sorted keys, compact separators, and string dictionary keys.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, is_dataclass, asdict
from typing import Any


def jsonable(obj: Any) -> Any:
    """Recursively convert to JSON-safe structures with string dict keys."""
    if is_dataclass(obj) and not isinstance(obj, type):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def canonical_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(obj: Any) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


@dataclass
class Certificate:
    """Verdict of one property check: what was checked, on what, and the outcome.

    ``details`` carries the witness or refutation plus search statistics; its
    exact shape depends on ``check``.
    """

    check: str
    params: dict = field(default_factory=dict)
    passed: bool = False
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": jsonable(self.params),
            "passed": self.passed,
            "details": jsonable(self.details),
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.check}: {verdict}"
