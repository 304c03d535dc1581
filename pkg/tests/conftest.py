import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ccfrieze import CCContext, Diagonal, LaurentRing, original_cc_context  # noqa: E402
from ccfrieze.polygon import random_triangulation  # noqa: E402
from golden import WORKED_R, WORKED_T, diag  # noqa: E402


def worked_epsilon():
    ring = LaurentRing(["u", "v", "z"])
    u, v, z = ring.gens()
    return {
        Diagonal(1, 7): u,
        Diagonal(2, 4): v,
        Diagonal(5, 7): z,
        Diagonal(2, 5): ring.one(),
        Diagonal(2, 7): ring.one(),
    }


@pytest.fixture(scope="session")
def worked():
    return CCContext(8, diag(WORKED_R), diag(WORKED_T), worked_epsilon())


@pytest.fixture(scope="session")
def classical():
    names = dict(zip(diag(WORKED_T), ["u", "v", "x", "y", "z"]))
    return original_cc_context(8, diag(WORKED_T), names)


def random_config(m, rng):
    """A triangulation T of the m-gon and a nonempty subset R of it."""
    T = sorted(random_triangulation(m, rng))
    R = sorted(rng.sample(T, rng.randint(1, len(T))))
    return R, T


@pytest.fixture
def rng():
    return random.Random(20260131)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
