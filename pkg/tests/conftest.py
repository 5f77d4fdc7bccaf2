import random

import pytest

from folforge import GenerationConfig, load_vocabulary, sample_nested, sample_standard

ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collector for per-criterion result lines, echoed after the run."""
    def record(line: str):
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance checklist")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def vocab():
    return load_vocabulary()


@pytest.fixture(scope="session")
def formula_pool():
    """Mixed sweep pool: both grammars, structural depths 1 through 10."""
    rng = random.Random(818)
    cfg = GenerationConfig(min_depth=1, max_depth=10)
    pool = []
    for _ in range(500):
        pool.append(sample_standard(cfg, rng))
        pool.append(sample_nested(cfg, rng))
    return pool
