from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification run, renderable as plain text."""

    title: str
    params: dict = field(default_factory=dict)
    passed: bool = True
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def note(self, line: str):
        self.lines.append(line)

    def fail(self, line: str):
        self.passed = False
        self.lines.append("FAIL: " + line)

    def render(self) -> str:
        head = self.title
        if self.params:
            head += " [" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + "]"
        out = [head]
        out += ["  " + s for s in self.lines]
        out.append("  result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(out) + "\n"

    def __bool__(self):
        return self.passed
