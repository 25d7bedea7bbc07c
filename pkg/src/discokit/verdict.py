from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: truthy when ok, otherwise names what failed and why."""

    ok: bool
    condition: str | None = None
    witness: Any = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, condition: str, witness: Any = None, message: str = "") -> "Verdict":
        return cls(False, condition, witness, message or condition)
