"""End-to-end acceptance checks, one per verified identity.

Each test prints a single pass/fail line (collected in the terminal
summary) and enforces its own wall-clock budget.
"""

import random
import time

from brauer import (
    Cochain,
    ConicBundle,
    ConicModelError,
    FiniteAbelianGroup,
    FiniteField,
    Place,
    Poly,
    RatFunc,
    SymbolClass,
    coboundary,
    cocycles_cohomologous,
    cohomology_rank,
    component_torsor,
    count_fiber_points,
    cup_product_boxtimes,
    extension_factor_set,
    identity_character,
    lhs_edge_map,
    ramification_divisor,
    reciprocity_sum,
    residue_cocycle_route,
    tame_residue,
    verify_coboundary_identity,
)
from brauer.conic import degenerate_places

import conftest
from conftest import random_ratfunc, random_unit_at


def _report(name, ok, elapsed, budget):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"[{status}] {name} ({elapsed:.2f}s < {budget:.0f}s)"
    conftest.ACCEPTANCE_LINES.append(line)
    assert ok, name
    assert elapsed < budget, f"{name}: {elapsed:.2f}s exceeds {budget:.0f}s"


def test_route_agreement():
    rng = random.Random(1)
    start = time.perf_counter()
    ok = True
    for q in (5, 13):
        F = FiniteField(q)
        P = Place(F, Poly.gen(F))
        pi = RatFunc.gen(F)
        for n in (2, 4):
            for j in range(n):
                for _ in range(50):
                    u = random_unit_at(rng, F, P)
                    alpha = SymbolClass.symbol(pi ** j, u, n=n)
                    ok &= (residue_cocycle_route(j, u, P, n)
                           == tame_residue(alpha, P))
    _report("residue route agreement (tame symbol vs cocycle)",
            ok, time.perf_counter() - start, 10)


def test_edge_map_identity():
    rng = random.Random(2)
    start = time.perf_counter()
    ok = True
    for n in (2, 3, 5):
        box = cup_product_boxtimes(n)
        target = identity_character(n)
        ok &= lhs_edge_map(box) == target
        for _ in range(20):
            shift = coboundary(Cochain.random(box.group, 1, n, rng))
            ok &= lhs_edge_map(box + shift) == target
    _report("edge map sends 1 boxtimes 1 to the identity character",
            ok, time.perf_counter() - start, 60)


def test_epsilon_coboundary_identity():
    start = time.perf_counter()
    ok = all(verify_coboundary_identity(n) for n in range(2, 13))
    _report("epsilon coboundary identity for n = 2..12",
            ok, time.perf_counter() - start, 1)


def test_gamma_factor_set():
    start = time.perf_counter()
    ok = True
    for n, q in ((2, 5), (3, 7)):
        s = extension_factor_set(n, q)
        box = cup_product_boxtimes(n)
        zero = Cochain(box.group, 2, n)
        ok &= cocycles_cohomologous(s, -box)
        ok &= not cocycles_cohomologous(s, zero)
    _report("Gamma extension factor set is cohomologous to -(1 boxtimes 1)",
            ok, time.perf_counter() - start, 30)


def test_reciprocity():
    rng = random.Random(5)
    start = time.perf_counter()
    ok = True
    for _ in range(200):
        q = rng.choice((5, 13))
        F = FiniteField(q)
        n = rng.choice([m for m in (2, 4) if (q - 1) % m == 0])
        alpha = SymbolClass(n, [])
        for _ in range(rng.randrange(1, 4)):
            alpha = alpha + SymbolClass.symbol(
                random_ratfunc(rng, F), random_ratfunc(rng, F), n=n)
        ok &= reciprocity_sum(alpha).value == 0
    _report("reciprocity: corestricted residues sum to zero",
            ok, time.perf_counter() - start, 30)


def test_conic_geometric_residues():
    rng = random.Random(6)
    start = time.perf_counter()
    ok = True
    checked = 0
    while checked < 100:
        q = rng.choice((5, 13))
        F = FiniteField(q)
        try:
            C = ConicBundle(random_ratfunc(rng, F), random_ratfunc(rng, F))
        except ConicModelError:
            continue
        checked += 1
        alpha = C.symbol()
        for P in degenerate_places(C):
            res = tame_residue(alpha, P)
            ok &= component_torsor(C, P) == res
            kappa = P.residue_field()
            expected = 1 if res.value else 2 * kappa.order + 1
            ok &= count_fiber_points(C, P) == expected
    _report("conic bundles: component torsor matches residue and point counts",
            ok, time.perf_counter() - start, 60)


def test_cohomology_ranks():
    start = time.perf_counter()
    ok = cohomology_rank(FiniteAbelianGroup((2, 2)), 2, 2) == [2, 2, 2]
    for n in (2, 3, 4, 6):
        ok &= cohomology_rank(FiniteAbelianGroup((n,)), n, 1) == [n]
    _report("cohomology ranks: H^2((Z/2)^2, Z/2) and H^1(Z/n, Z/n)",
            ok, time.perf_counter() - start, 10)


def test_symbol_relations():
    rng = random.Random(8)
    start = time.perf_counter()
    ok = True
    F = FiniteField(13)
    P0 = Place(F, Poly.gen(F))
    for i in range(500):
        f = random_ratfunc(rng, F, 2)
        g = random_ratfunc(rng, F, 2)
        if i % 2 == 0:
            # Steinberg: (f, 1-f) is everywhere unramified
            if f == 1:
                continue
            alpha = SymbolClass.symbol(f, 1 - f, n=4)
            ok &= not ramification_divisor(alpha).places()
        else:
            h = random_ratfunc(rng, F, 2)
            lhs = tame_residue(SymbolClass.symbol(f * g, h, n=4), P0)
            rhs = (tame_residue(SymbolClass.symbol(f, h, n=4), P0)
                   + tame_residue(SymbolClass.symbol(g, h, n=4), P0))
            ok &= lhs == rhs
    _report("symbol relations: Steinberg and bilinearity",
            ok, time.perf_counter() - start, 10)
