import pytest

from evalcover import Profile, graph_from_edge_list


def prof(*sets, alternatives=None):
    """Profile with voters v1, v2, ... evaluating the given strings of one-letter alternatives."""
    return Profile.from_mapping({f"v{k}": list(s) for k, s in enumerate(sets, start=1)}, alternatives)


def edges(spec):
    """Graph from a string like "ab bc ca"."""
    return graph_from_edge_list([tuple(e) for e in spec.split()])


@pytest.fixture
def bowtie():
    return edges("ab bc ca cd de ec")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
