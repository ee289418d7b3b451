from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class AxiomReport:
    """Itemized axiom checks; ``ok`` iff nothing failed."""

    subject: str
    items: list[tuple[str, bool, str]] = field(default_factory=list)

    def check(self, axiom: str, passed: bool, detail: str = "") -> bool:
        self.items.append((axiom, bool(passed), detail))
        return passed

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(a, d) for a, p, d in self.items if not p]

    @property
    def ok(self) -> bool:
        return not self.failures

    def extend(self, other: AxiomReport) -> None:
        self.items.extend((f"{other.subject}: {a}", p, d) for a, p, d in other.items)

    def lines(self) -> list[str]:
        out = []
        for axiom, passed, detail in self.items:
            mark = "PASS" if passed else "FAIL"
            out.append(f"[{mark}] {self.subject}: {axiom}" + (f" ({detail})" if detail and not passed else ""))
        return out

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "items": [{"axiom": a, "passed": p, "detail": d} for a, p, d in self.items],
        }


class ConsistencyError(RuntimeError):
    """An identity that must hold for valid input failed; indicates invalid data or a bug."""
