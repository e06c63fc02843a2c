"""Collect acceptance-criterion outcomes and print one line per criterion."""

from __future__ import annotations

import pytest

_RESULTS: dict[int, list[tuple[str, str]]] = {}

CRITERIA = {
    1: "worked example: IC and fibre polynomials at n=4",
    2: "Q_4 Hasse diagram and orbit dimensions",
    3: "Lusztig-Shoji self-consistency, n <= 5",
    4: "brute-force orbit counts vs theta(q)",
    5: "fibre counts vs Pi(q)",
    6: "type-A specializations, n <= 5",
    7: "W_n character theory",
    8: "Omega cross-check against the matrix-sum formula",
    9: "Hall polynomials vs subspace counts",
    10: "closure order vs rational witnesses",
}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _RESULTS.setdefault(num, []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(CRITERIA):
        runs = _RESULTS.get(num)
        if not runs:
            status = "NOT RUN"
        elif all(o == "passed" for _, o in runs):
            status = "PASS"
        elif any(o == "failed" for _, o in runs):
            status = "FAIL"
        else:
            status = "SKIP"
        tr.write_line(f"criterion {num:2d} [{status}] {CRITERIA[num]} ({len(runs or [])} tests)")
