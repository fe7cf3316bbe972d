import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from billiard.field import QQ  # noqa: E402
from billiard.fixtures import diagonal_example, krawtchouk  # noqa: E402
from billiard.leonard import verify_leonard_system  # noqa: E402
from billiard.polycba import build_poly_cba  # noqa: E402

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture
def diag_cba():
    eig, v = diagonal_example()
    return build_poly_cba(eig, v)


@pytest.fixture
def kraw2():
    return verify_leonard_system(*krawtchouk(2))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def q(*xs):
    return [QQ(x) for x in xs]


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    ran = any("test_acceptance" in str(r.nodeid) for rs in terminalreporter.stats.values() for r in rs if hasattr(r, "nodeid"))
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, acceptance_log.CRITERIA + 1):
        terminalreporter.write_line(acceptance_log.LINES.get(n, f"FAIL criterion {n}: did not complete"))
