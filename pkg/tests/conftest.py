import re

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = CRITERION.search(getattr(rep, "nodeid", ""))
            if m and rep.when in ("call", "setup"):
                num = int(m.group(1))
                ok = outcome == "passed" and lines.get(num, (True,))[0]
                lines[num] = (ok, m.group(2))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(lines):
        ok, name = lines[num]
        terminalreporter.write_line(f"criterion {num} {'PASS' if ok else 'FAIL'}: {name.replace('_', ' ')}")
