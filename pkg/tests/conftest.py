import random
from fractions import Fraction
from itertools import product

import pytest

from checkerboard import exactla

ACCEPTANCE_RESULTS = []


def random_unimodular(n, rng, steps=None):
    """Random unimodular matrix from elementary moves, with either sign of det."""
    U = exactla.identity(n)
    for _ in range(steps if steps is not None else 2 * n):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-1, 1])
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    U = [U[i] for i in perm]
    if rng.random() < 0.5:
        U[0] = [-a for a in U[0]]
    return U


def brute_form(k, m, x, y):
    """(x|y) straight from the defining formula, in Fractions."""
    dot = sum(Fraction(a) * b for a, b in zip(x, y))
    return dot + Fraction(sum(x) * sum(y) * (k - m), m * m)


def brute_vectors(k, m, n, norm, box=3):
    """All lattice vectors with entries in [-box, box] of the given norm.

    Walks coordinates one at a time for every admissible latitude; no shape
    bookkeeping, so it is independent of the shell enumeration.
    """
    out = set()
    for lat in range(-n * box, n * box + 1):
        if lat % m:
            continue
        target = norm - Fraction(lat * lat * (k - m), m * m)
        if target < 0 or target.denominator != 1:
            continue
        target = int(target)

        def rec(prefix, rem_sum, rem_sq):
            left = n - len(prefix)
            if left == 0:
                if rem_sum == 0 and rem_sq == 0:
                    out.add(tuple(prefix))
                return
            if abs(rem_sum) > rem_sq or abs(rem_sum) > left * box:
                return
            for a in range(-box, box + 1):
                if a * a <= rem_sq:
                    rec(prefix + [a], rem_sum - a, rem_sq - a * a)

        rec([], lat, target)
    for v in out:
        assert brute_form(k, m, v, v) == norm
    return out


@pytest.fixture
def rng():
    return random.Random(20240315)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
