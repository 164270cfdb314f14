"""Shared pytest wiring.

The acceptance tests are numbered; after the run we emit one verdict line
per criterion so the suite's outcome can be read off the tail of the log.
"""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for status, reports in terminalreporter.stats.items():
        if status not in ("passed", "failed", "error"):
            continue
        for rep in reports:
            if getattr(rep, "when", "call") != "call" and status != "error":
                continue
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if not m:
                continue
            k = int(m.group(1))
            ok = status == "passed"
            verdicts[k] = verdicts.get(k, True) and ok
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for k in sorted(verdicts):
        terminalreporter.write_line(
            "CRITERION %d: %s" % (k, "PASS" if verdicts[k] else "FAIL")
        )
