from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    check: str
    subject: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "subject": self.subject, "pass": self.passed, "detail": self.detail}

    @classmethod
    def from_json(cls, obj: dict) -> Check:
        return cls(obj["check"], obj["subject"], bool(obj["pass"]), obj.get("detail", ""))


@dataclass
class Report:
    """An ordered list of checks. Failures are entries, never exceptions."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: str, subject: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(check, subject, bool(passed), detail))
        return bool(passed)

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def by_check(self, name: str) -> list[Check]:
        return [c for c in self.checks if c.check == name]

    def to_json(self) -> dict:
        return {"title": self.title, "verdict": self.verdict, "checks": [c.to_json() for c in self.checks]}

    @classmethod
    def from_json(cls, obj: dict) -> Report:
        return cls(obj["title"], [Check.from_json(c) for c in obj["checks"]])

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.verdict} ({len(self.checks) - len(self.failures())}/{len(self.checks)} checks pass)"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            tail = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"  {mark}  {c.check:<24} {c.subject}{tail}")
        return "\n".join(lines)
