import math

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def enumerate_shortest(n, edges, s):
    """Shortest distances by trying every simple path from s (tiny graphs only)."""
    adj = [[] for _ in range(n)]
    for u, v, w in edges:
        adj[u].append((v, w))
    best = [math.inf] * n
    best[s] = 0.0
    seen = [False] * n

    def walk(v, length):
        seen[v] = True
        for u, w in adj[v]:
            if not seen[u]:
                if length + w < best[u]:
                    best[u] = length + w
                walk(u, length + w)
        seen[v] = False

    walk(s, 0.0)
    return best


@pytest.fixture
def three_node_edges():
    return [(0, 1, 1.5), (1, 2, 2.25), (0, 2, 4.0)]
