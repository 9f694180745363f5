"""Three-valued results for criteria and theorem checks.

A Verdict either holds, fails, or is undetermined (some input the
criterion needs was unavailable, typically blocked by a capacity cap).
Failing verdicts carry enough detail to point at the offending class or
prime, and witnesses are JSON-safe for the CLI report.
"""

from __future__ import annotations

from typing import Optional


class Verdict:
    __slots__ = ("holds", "detail", "witnesses")

    def __init__(self, holds: Optional[bool], detail: str, witnesses: Optional[dict] = None):
        self.holds = holds
        self.detail = detail
        self.witnesses = witnesses or {}

    @classmethod
    def yes(cls, detail: str, **witnesses) -> "Verdict":
        return cls(True, detail, witnesses)

    @classmethod
    def no(cls, detail: str, **witnesses) -> "Verdict":
        return cls(False, detail, witnesses)

    @classmethod
    def undetermined(cls, detail: str, **witnesses) -> "Verdict":
        return cls(None, detail, witnesses)

    @property
    def is_undetermined(self) -> bool:
        return self.holds is None

    def to_json(self) -> dict:
        word = "undetermined" if self.holds is None else ("holds" if self.holds else "fails")
        out = {"verdict": word, "detail": self.detail}
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out

    def __repr__(self) -> str:
        word = "undetermined" if self.holds is None else ("holds" if self.holds else "fails")
        return "Verdict(%s: %s)" % (word, self.detail)


def agreement(lhs: Verdict, rhs: Verdict) -> Optional[bool]:
    """Whether two sides of a biconditional agree; None if either is open."""
    if lhs.holds is None or rhs.holds is None:
        return None
    return lhs.holds == rhs.holds
