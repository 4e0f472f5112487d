import cmath
import sys

import pytest

from modpjl.scalars import field_ctx

# (p, f) pairs exercised throughout; q = 2, 3, 4, 5, 7, 9
SUPPORTED = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]
SMALL = [(2, 1), (3, 1), (2, 2), (5, 1)]


def to_complex(x):
    """Numerical image of a CycInt under zeta -> exp(2 pi i / n)."""
    n = x.ring.n
    return sum(c * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(x.coeffs))


@pytest.fixture(params=SUPPORTED, ids=lambda pf: f"q={pf[0] ** pf[1]}")
def ctx(request):
    return field_ctx(*request.param)


@pytest.fixture(params=SMALL, ids=lambda pf: f"q={pf[0] ** pf[1]}")
def small_ctx(request):
    return field_ctx(*request.param)


@pytest.fixture
def ctx3():
    return field_ctx(3, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
