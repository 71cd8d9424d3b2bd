from hypothesis import strategies as st

N_TEST = 20
MODULI = range(2, 7)


@st.composite
def part_lists(draw, max_part=12, max_len=14):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return tuple(sorted(parts, reverse=True))


def brute_partitions(n, largest=None):
    """Naive recursive generator used as an oracle; order is irrelevant."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, largest) + 1):
        for rest in brute_partitions(n - first, first):
            yield (first,) + rest


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
