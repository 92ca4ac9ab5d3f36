import pytest

from frslab.frs import FrsCode

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def small_code():
    return FrsCode(13, 3, 3, 4)


@pytest.fixture(scope="session")
def recovery_code():
    return FrsCode(13, 5, 2, 6)


@pytest.fixture(scope="session")
def wide_code():
    # k > s, so single-coordinate slices can keep positive dimension
    return FrsCode(17, 4, 2, 8)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}")
