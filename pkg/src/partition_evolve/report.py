"""Structured pass/fail results for the cross-check suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check over a stated range."""

    name: str
    scope: str
    passed: bool
    counterexample: str | None = None

    def __post_init__(self) -> None:
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing check cannot carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing check must carry a counterexample")

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name} [{self.scope}]"
        if self.counterexample is not None:
            line += f"  counterexample: {self.counterexample}"
        return line


@dataclass(frozen=True)
class VerificationReport:
    """A fixed-order collection of check results."""

    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def format_text(self) -> str:
        lines = [check.format_line() for check in self.checks]
        verdict = "PASS" if self.overall else "FAIL"
        failed = sum(1 for check in self.checks if not check.passed)
        summary = f"OVERALL {verdict} ({len(self.checks)} checks"
        summary += f", {failed} failed)" if failed else ")"
        lines.append(summary)
        return "\n".join(lines)
