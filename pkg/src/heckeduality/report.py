"""Report records shared by the checkers and the command line."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

REPORT_VERSION = "1"


@dataclass(frozen=True)
class Outcome:
    """Result of one check on one case."""

    case: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Entry:
    system: str
    parabolic: str
    suite: str
    check: str
    case: str
    status: str
    detail: str = ""


@dataclass
class Report:
    seed: int
    roster: list[str]
    entries: list[Entry] = field(default_factory=list)
    findings: dict[str, dict] = field(default_factory=dict)

    def extend(self, system: str, parabolic: str, suite: str, check: str, outcomes):
        for o in outcomes:
            self.entries.append(
                Entry(system, parabolic, suite, check, o.case, "pass" if o.ok else "fail", o.detail)
            )

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status != "pass"]

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for e in self.entries:
            row = out.setdefault(f"{e.suite}/{e.check}", {"pass": 0, "fail": 0})
            row[e.status] += 1
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        doc = {
            "header": {"version": REPORT_VERSION, "seed": self.seed, "roster": self.roster},
            "summary": {"entries": len(self.entries), "failures": len(self.failures)},
            "entries": [asdict(e) for e in self.entries],
            "findings": self.findings,
        }
        return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        lines = [
            "# Verification report",
            "",
            f"- version: {REPORT_VERSION}",
            f"- seed: {self.seed}",
            f"- roster: {', '.join(self.roster)}",
            f"- entries: {len(self.entries)}, failures: {len(self.failures)}",
            "",
            "## Counts",
            "",
            "| suite/check | pass | fail |",
            "|---|---|---|",
        ]
        for key, row in self.counts().items():
            lines.append(f"| {key} | {row['pass']} | {row['fail']} |")
        lines += ["", "## Failures", ""]
        if self.failures:
            for e in self.failures:
                lines.append(
                    f"- {e.system} {e.parabolic} {e.suite}/{e.check} case {e.case}: {e.detail}"
                )
        else:
            lines.append("none")
        for title, body in self.findings.items():
            lines += ["", f"## Findings: {title}", ""]
            for system, data in body.items():
                lines.append(f"### {system}")
                lines.append("")
                for k, v in data.items():
                    if isinstance(v, list):
                        lines.append(f"- {k} ({len(v)}):")
                        lines.extend(f"  - {item}" for item in v)
                    else:
                        lines.append(f"- {k}: {v}")
                lines.append("")
        return "\n".join(lines).rstrip() + "\n"
