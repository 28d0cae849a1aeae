import numpy as np
import pytest

from hyperwalk import build_hyperwalk, example_hypergraph


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def example_h():
    return example_hypergraph()


@pytest.fixture
def grover_example(example_h):
    """Grover hyperwalk on the four-vertex example, two schedule repetitions."""
    return build_hyperwalk(example_h, schedule=[("grover", "grover"), ("grover", "grover")])


_LINES = pytest.StashKey[list]()


@pytest.fixture
def report_line(request):
    """Record a line for the acceptance summary printed at the end of the run."""
    lines = request.config.stash.setdefault(_LINES, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
