"""Shared strategies and helpers.

The helpers here re-derive basic facts (componentwise order, antichain
pruning, prefix-threshold predicates) independently of the package so
tests can cross-check against them.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hiergames import MultisetGame

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def prune_minimal(rows):
    rows = set(rows)
    return {r for r in rows if not any(q != r and leq(q, r) for q in rows)}


def box(sizes):
    return itertools.product(*(range(s + 1) for s in sizes))


def brute_winning(min_winning):
    """Plain superset test against a minimal family."""

    def wins(c):
        return any(leq(w, c) for w in min_winning)

    return wins


def disjunctive_predicate(k):
    def wins(c):
        total = 0
        for x, threshold in zip(c, k):
            total += x
            if total >= threshold:
                return True
        return False

    return wins


def conjunctive_predicate(k):
    def wins(c):
        total = 0
        for x, threshold in zip(c, k):
            total += x
            if total < threshold:
                return False
        return True

    return wins


def brute_minimal(sizes, wins):
    """Minimal satisfying vectors of a monotone predicate, by brute force."""
    found = []
    for c in box(sizes):
        if wins(c) and all(
            not wins(tuple(x - 1 if i == j else x for j, x in enumerate(c)))
            for i in range(len(c))
            if c[i] > 0
        ):
            found.append(c)
    return set(found)


def brute_maximal_losing(sizes, wins):
    found = []
    for c in box(sizes):
        if not wins(c) and all(
            wins(tuple(x + 1 if i == j else x for j, x in enumerate(c)))
            for i in range(len(c))
            if c[i] < sizes[i]
        ):
            found.append(c)
    return set(found)


@st.composite
def multiset_games(draw, max_levels=3, max_size=3):
    m = draw(st.integers(1, max_levels))
    sizes = tuple(
        draw(st.integers(1, max_size)) for _ in range(m)
    )
    rows = draw(
        st.sets(
            st.tuples(*(st.integers(0, s) for s in sizes)),
            min_size=1,
            max_size=6,
        )
    )
    return MultisetGame(sizes, frozenset(prune_minimal(rows)))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion and assert it."""

    def record(number: int, description: str, passed: bool, detail: str = ""):
        status = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        line = f"acceptance criterion {number}, {description}: {status}{suffix}"
        ACCEPTANCE_LINES.append(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
