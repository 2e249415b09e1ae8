import sys
import pytest
from hypothesis import settings

from quasiper.morphism import Morphism
from quasiper.words import Alphabet

settings.register_profile("default", max_examples=150, deadline=None, derandomize=True)
settings.load_profile("default")

AB = Alphabet.latin(2)


@pytest.fixture
def ab():
    return AB


def W(text, alphabet=AB):
    return alphabet.word(text)


def M(text):
    return Morphism.parse(text)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_summary_lines():
        terminalreporter.write_line(line)
