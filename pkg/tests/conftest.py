import itertools

import numpy as np
import pytest

from golaysds import kernels
from golaysds.fixtures import load_bundled

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fixtures():
    return load_bundled()


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.get_backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number, name, ok, detail=""):
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_paf(a):
    """Direct double loop, independent of the kernels."""
    a = [int(x) for x in a]
    v = len(a)
    return [sum(a[i] * a[(i + s) % v] for i in range(v)) for s in range(v)]


def brute_counts(v, blocks):
    counts = [0] * v
    for block in blocks:
        for a, b in itertools.product(block, repeat=2):
            counts[(a - b) % v] += 1
    return counts[1:]


def random_sequence(rng, v):
    return rng.choice(np.array([-1, 1], dtype=np.int8), size=v)
