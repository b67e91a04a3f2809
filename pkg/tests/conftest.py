import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def k3():
    return {"a": ["b", "c"], "b": ["a", "c"], "c": ["a", "b"]}


@pytest.fixture
def p3():
    return {"a": ["b"], "b": ["a", "c"], "c": ["b"]}


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.SUMMARY:
            terminalreporter.write_line(line)
