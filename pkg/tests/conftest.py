from pathlib import Path

import pytest

from chromroots.io import read_graph6_file

DATA = Path(__file__).parent / "data"


def bundled(n: int):
    """Connected graphs of order ``n`` (1..6) from the bundled corpus."""
    return read_graph6_file(DATA / f"connected{n}.g6")


@pytest.fixture(scope="session")
def small_connected():
    """All connected graphs of order 1..6."""
    return [g for n in range(1, 7) for g in bundled(n)]


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion that ran."""
    from . import test_acceptance

    reports = [
        r
        for key in ("passed", "failed", "error")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance" in r.nodeid
    ]
    if not reports and not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS):
        ok, detail = test_acceptance.RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key} -- {detail}")
    recorded = {k.split()[0] for k in test_acceptance.RESULTS}
    for r in reports:
        crit = r.nodeid.split("test_criterion_")[-1].split("_")[0]
        if crit not in recorded and r.failed:
            terminalreporter.write_line(f"FAIL  {crit} -- raised before recording ({r.nodeid})")
