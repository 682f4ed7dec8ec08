"""Tiny check-report containers used by the validators."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        lines = []
        for c in self.checks:
            mark = "ok" if c.ok else "FAIL"
            lines.append(f"{c.name}: {mark}" + (f" ({c.detail})" if c.detail else ""))
        return "\n".join(lines)
