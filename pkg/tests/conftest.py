from itertools import combinations_with_replacement

import pytest


def canonical_vectors(max_total, max_distinct):
    """All canonical multiplicity vectors with total <= max_total and at most
    max_distinct parts (distinct letters), including the empty vector."""
    out = [()]

    def rec(prefix, left, cap):
        for p in range(min(left, cap), 0, -1):
            vec = prefix + (p,)
            out.append(vec)
            if len(vec) < max_distinct:
                rec(vec, left - p, p)

    rec((), max_total, max_total)
    return out


@pytest.fixture(scope="session")
def small_grid():
    return canonical_vectors(8, 4)


_criteria: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion.

    Usage: ``criterion("3a", "description")`` at the start of the test; the
    verdict follows the test outcome and is printed in the terminal summary.
    """
    marks = {}

    def register(number, text):
        marks["n"] = number
        _criteria[number] = f"FAIL  [{number}] {text}"
        marks["text"] = text

    yield register
    rep = getattr(request.node, "rep_call", None)
    if "n" in marks and rep is not None and rep.passed:
        _criteria[marks["n"]] = f"PASS  [{marks['n']}] {marks['text']}"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_criteria):
            terminalreporter.write_line(_criteria[n])
