from pathlib import Path

import pytest

from hullforge.gf import GF, FieldError, prime_power

DATA = Path(__file__).parent / "data"

# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def small_prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except FieldError:
            continue
        out.append(q)
    return out


_FIELDS: dict = {}


def field(q: int) -> GF:
    if q not in _FIELDS:
        _FIELDS[q] = GF(*prime_power(q))
    return _FIELDS[q]


@pytest.fixture
def acceptance():
    def record(line: str):
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _default_budget(monkeypatch):
    monkeypatch.delenv("HULLFORGE_BUDGET", raising=False)
    yield
