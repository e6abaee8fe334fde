from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from liftmod.words import Word, twist_letters

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def twist_words(draw, g: int | None = None, max_len: int = 20, gs=(1, 2, 3, 4)):
    if g is None:
        g = draw(st.sampled_from(gs))
    alphabet = twist_letters(g)
    n = draw(st.integers(0, max_len))
    letters = tuple((alphabet[draw(st.integers(0, len(alphabet) - 1))], draw(st.sampled_from((1, -1))))
                    for _ in range(n))
    return Word(g, letters)


# lines recorded by test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
