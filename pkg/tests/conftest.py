import pytest

from jamesian.registry import get_model

NINTHS = [i / 10 for i in range(1, 10)]
TWENTIETHS = [i / 20 for i in range(1, 20)]
GENERATOR_IDS = ["logit", "rational", "cot", "probit", "power:1.5", "power:2"]
ALL_IDS = ["james", "piecewise"] + GENERATOR_IDS


@pytest.fixture(params=ALL_IDS)
def any_model(request):
    return get_model(request.param)


@pytest.fixture(params=GENERATOR_IDS)
def generator_model(request):
    return get_model(request.param)


_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: s.split(":")[0].split()[-1].zfill(2)):
            terminalreporter.write_line(line)
