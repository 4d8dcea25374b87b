import random

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from brauer import FiniteField, Place, Poly, RatFunc, valuation


@pytest.fixture
def rng():
    return random.Random(20260826)


def random_poly(rng, F, max_deg=4, nonzero=True):
    while True:
        f = Poly(F, [rng.randrange(F.order)
                     for _ in range(rng.randrange(1, max_deg + 2))])
        if not nonzero or not f.is_zero():
            return f


def random_ratfunc(rng, F, max_deg=4):
    return RatFunc(random_poly(rng, F, max_deg), random_poly(rng, F, max_deg))


def random_place(rng, F, max_deg=2):
    while True:
        f = random_poly(rng, F, max_deg).monic()
        if f.degree >= 1 and f.is_irreducible():
            return Place(F, f)


def random_unit_at(rng, F, P, max_deg=4):
    while True:
        u = random_ratfunc(rng, F, max_deg)
        if not u.is_zero() and valuation(u, P) == 0:
            return u
