"""Small result containers returned by validators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named law check.

    ``witness`` holds the first counterexample found, as a tuple of values
    already formatted for display, or ``None`` when the check passed.
    """

    name: str
    passed: bool
    witness: tuple[str, ...] | None = None

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: ok"
        w = ", ".join(self.witness) if self.witness else ""
        return f"{self.name}: FAIL ({w})"


@dataclass
class ValidationReport:
    """Ordered list of check results for one object."""

    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def describe(self) -> str:
        head = f"{self.subject}: {'pass' if self.passed else 'FAIL'}"
        body = [f"  {c.describe()}" for c in self.checks]
        return "\n".join([head, *body])
