from itertools import combinations

import pytest

import acceptance_log

from multithreshold import representation, theorems

# Every valid pK3 representation built anywhere in the run is fed through the
# rainbow check; one failure fails the session.
RAINBOW_AUDIT = {"checked": 0, "failures": []}

_orig_init = representation.Representation.__init__


def _is_disjoint_triangles(g):
    comps = g.components()
    return bool(comps) and all(
        len(c) == 3 and all(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in comps)


def _audited_init(self, graph, thresholds, ranks, *, check=True):
    _orig_init(self, graph, thresholds, ranks, check=check)
    if check and _is_disjoint_triangles(graph):
        RAINBOW_AUDIT["checked"] += 1
        if not theorems.rainbow_check(self):
            RAINBOW_AUDIT["failures"].append(self.to_json())


representation.Representation.__init__ = _audited_init


@pytest.fixture
def rainbow_audit():
    return RAINBOW_AUDIT


def pytest_sessionfinish(session, exitstatus):
    if RAINBOW_AUDIT["failures"]:
        print(f"\nRAINBOW AUDIT FAILED on {len(RAINBOW_AUDIT['failures'])} representation(s)")
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES):
            terminalreporter.write_line(line)
    terminalreporter.write_line(
        f"rainbow audit: {RAINBOW_AUDIT['checked']} pK3 representations checked, "
        f"{len(RAINBOW_AUDIT['failures'])} failures")
