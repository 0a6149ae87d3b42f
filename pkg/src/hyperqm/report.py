"""Structured outcome of a property sweep: law, samples, counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class PropertyReport:
    """Result of checking one algebraic law on sampled inputs.

    ``failures`` holds one dict per counterexample with stringified inputs
    and both evaluated sides; the verdict is "pass" iff it is empty.
    ``skipped`` counts inputs excluded by a precondition (for example the
    sign condition of the para-Cauchy-Schwarz inequality).
    """

    law: str
    samples: int
    failures: list[dict] = field(default_factory=list)
    skipped: int = 0
    notes: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def add_failure(self, inputs: dict, lhs: str, rhs: str) -> None:
        self.failures.append({"inputs": inputs, "lhs": lhs, "rhs": rhs})

    def to_dict(self) -> dict:
        out = {
            "law": self.law,
            "samples": self.samples,
            "skipped": self.skipped,
            "failures": self.failures,
            "verdict": self.verdict,
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def summary(self) -> str:
        extra = f", skipped {self.skipped}" if self.skipped else ""
        return f"{self.law}: {self.verdict} ({self.samples} samples{extra}, {len(self.failures)} failures)"
