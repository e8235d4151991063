"""Collects one verdict per acceptance criterion and prints them after the run."""

ACCEPTANCE: dict[str, tuple[str, str]] = {}


def record(criterion: str, ok: bool, note: str = "") -> None:
    ACCEPTANCE[criterion] = ("PASS" if ok else "FAIL", note)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE, key=lambda c: int(c.split(".")[0])):
        verdict, note = ACCEPTANCE[criterion]
        terminalreporter.write_line(f"{verdict}  {criterion}" + (f"  ({note})" if note else ""))
