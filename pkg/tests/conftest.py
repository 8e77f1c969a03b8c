import sys

import pytest

from filmbie.geometry import builtin_profile
from filmbie.solver import ProblemParams

H0 = 0.03
L = 1.0


@pytest.fixture(scope="session")
def params():
    """Film/air dielectric constants with f = cos(pi x)."""
    return ProblemParams.cosine(eps1=8.0, eps2=1.0, L=L, A=1.0)


@pytest.fixture(scope="session")
def profiles():
    return {kind: builtin_profile(kind, H0, L) for kind in ("flat", "sine", "cosine")}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        ok, detail = results[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
