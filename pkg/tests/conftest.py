import contextlib

import pytest

from fuzzing import COUNTEREXAMPLE, RUNNING_EXAMPLE, PADDING_EXAMPLE, digits, matrix

_CRITERIA: list[str] = []


@pytest.fixture
def running_example():
    return matrix(*RUNNING_EXAMPLE)


@pytest.fixture
def counterexample():
    return digits(*COUNTEREXAMPLE, alphabet="01")


@pytest.fixture
def padding_example():
    return digits(*PADDING_EXAMPLE, alphabet="012")


@pytest.fixture
def criterion():
    """``with criterion(3, "text"):`` records one PASS/FAIL line for the summary."""

    @contextlib.contextmanager
    def record(number, text):
        try:
            yield
        except BaseException:
            line = f"FAIL  criterion {number}: {text}"
            _CRITERIA.append(line)
            print(line)
            raise
        line = f"PASS  criterion {number}: {text}"
        _CRITERIA.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
