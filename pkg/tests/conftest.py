from functools import lru_cache
from itertools import product

import pytest

from shufflemzv.words import X0, X1

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def reference_shuffle(a: tuple, b: tuple) -> dict:
    """First-letter recursion a III b = a1 (a' III b) + b1 (a III b'); independent of the engines."""
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for head, rest in ((a[0], reference_shuffle(a[1:], b)), (b[0], reference_shuffle(a, b[1:]))):
        for w, c in rest.items():
            out[(head,) + w] = out.get((head,) + w, 0) + c
    return out


def words_up_to(length: int, start: int = 0):
    for n in range(start, length + 1):
        yield from product((X0, X1), repeat=n)


@pytest.fixture
def ref_shuffle():
    return reference_shuffle


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
