import json
from collections import Counter
from math import comb, factorial

import pytest

from checkerboard import core, roots
from checkerboard.core import LatticeParams, LatticeVector
from checkerboard.roots import ShapeSignature

from conftest import brute_vectors


def rows_of(table):
    return [(r.latitude, str(r.shape), r.count) for r in table.rows]


# tables as printed for E6, E7, E8 (shape written with negative parts first)
E6_ROWS = [(6, "1^6", 1), (3, "1^3", 20), (0, "(-1)^1 1^1", 30),
           (-3, "(-1)^3", 20), (-6, "(-1)^6", 1)]
E7_ROWS = [(6, "1^6", 7), (3, "1^3", 35), (0, "(-1)^1 1^1", 42),
           (-3, "(-1)^3", 35), (-6, "(-1)^6", 7)]
E8_ROWS = [(9, "1^7 2^1", 8), (6, "1^6", 28), (3, "1^3", 56), (0, "(-1)^1 1^1", 56),
           (-3, "(-1)^3", 56), (-6, "(-1)^6", 28), (-9, "(-2)^1 (-1)^7", 8)]


def test_e_tables_row_for_row():
    assert rows_of(roots.root_table(LatticeParams(2, 3, 6))) == E6_ROWS
    assert rows_of(roots.root_table(LatticeParams(2, 3, 7))) == E7_ROWS
    assert rows_of(roots.root_table(LatticeParams(2, 3, 8))) == E8_ROWS
    assert roots.root_table(LatticeParams(2, 3, 8)).total == 240


@pytest.mark.parametrize("n", range(2, 13))
def test_a_and_d_tables(n):
    a = roots.root_table(LatticeParams(2, 1, n))
    assert rows_of(a) == [(1, "1^1", n), (0, "(-1)^1 1^1", n * (n - 1)), (-1, "(-1)^1", n)]
    d = roots.root_table(LatticeParams(2, 2, n))
    assert rows_of(d) == [(2, "1^2", comb(n, 2)), (0, "(-1)^1 1^1", n * (n - 1)),
                          (-2, "(-1)^2", comb(n, 2))]


SMALL = [LatticeParams(k, m, n) for n in range(1, 8) for m in range(1, n + 1)
         for k in range(1, 7) if core.det_lattice(LatticeParams(k, m, n)) > 0]


@pytest.mark.parametrize("p", SMALL, ids=str)
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_shell_matches_brute_force(p, N):
    got = {tuple(v) for row in roots.shell_table(p, N).rows for v in row.shape.vectors()}
    assert got == brute_vectors(p.k, p.m, p.n, N, box=4)
    assert roots.shell_table(p, N).total == len(got)


def test_shell_matches_brute_force_e8_norm4():
    p = LatticeParams(2, 3, 8)
    table = roots.shell_table(p, 4)
    assert table.total == 2160
    got = {tuple(v) for row in table.rows for v in row.shape.vectors()}
    assert got == brute_vectors(2, 3, 8, 4, box=3)


def test_rank_24_root_totals():
    # root systems A24 (24*25) and D24 (2*24*23) of the two Niemeier lattices
    assert roots.root_table(LatticeParams(4, 5, 24)).total == 600
    assert roots.root_table(LatticeParams(6, 11, 24)).total == 1104
    assert roots.root_table(LatticeParams(4, 19, 24)).total == 600


def test_shape_signature():
    s = ShapeSignature.of([0, -1, 1, 1, 2])
    assert str(s) == "(-1)^1 1^2 2^1"
    assert s.latitude == 3 and s.square_sum == 7 and s.zeros == 1
    assert s.multiplicity() == factorial(5) // (factorial(1) * factorial(2))
    assert s.multiplicity() == len(set(map(tuple, s.vectors())))
    assert all(ShapeSignature.of(v) == s for v in s.vectors())
    assert s.as_dict() == {"-1": 1, "1": 2, "2": 1}
    with pytest.raises(ValueError):
        ShapeSignature(((1, 4),), 3)


def test_indefinite_needs_bound():
    p = LatticeParams(2, 3, 10)
    with pytest.raises(roots.IndefiniteWithoutBound):
        roots.root_table(p)
    table = roots.root_table(p, latitude_bound=9)
    assert all(abs(r.latitude) <= 9 for r in table.rows)
    got = {tuple(v) for r in table.rows for v in r.shape.vectors()}
    brute = {v for v in brute_vectors(2, 3, 10, 2, box=3) if abs(sum(v)) <= 9}
    assert got == brute


def test_enumerate_roots_rank_guard():
    with pytest.raises(roots.RankTooLarge):
        roots.enumerate_roots(LatticeParams(2, 1, 17))
    assert len(roots.enumerate_roots(LatticeParams(2, 1, 17), max_rank=17)) == 17 * 18


def test_reflect_example():
    p = LatticeParams(2, 3, 6)
    z = roots.z_root_vector(p)
    assert z == LatticeVector([1, 1, 1, 1, 1, 4])
    w = roots.reflect(p, LatticeVector.indicator(6, [1, 2, 6]), z)
    assert w == LatticeVector([-2, -2, 1, 1, 1, 1])
    with pytest.raises(roots.NotARoot):
        roots.reflect(p, [1, 0, 0, 0, 0, 0], z)


def test_reflections_preserve_form(rng):
    p = LatticeParams(2, 3, 7)
    rs = roots.enumerate_roots(p)
    for _ in range(200):
        a, x, y = rng.choice(rs), rng.choice(rs), rng.choice(rs)
        assert core.inner(p, roots.reflect(p, a, x), roots.reflect(p, a, y)) == \
            core.inner(p, x, y)


def orbit_shapes(p):
    orb = roots.orbit(p, roots.z_root_vector(p))
    return Counter(str(ShapeSignature.of(v)) for v in orb)


def test_e6_e7_orbit_shapes():
    assert orbit_shapes(LatticeParams(2, 3, 6)) == Counter(
        {"1^5 4^1": 6, "(-2)^2 1^4": 15, "(-2)^5 1^1": 6})
    assert orbit_shapes(LatticeParams(2, 3, 7)) == Counter(
        {"1^6 3^1": 7, "(-1)^2 1^5": 21, "(-1)^5 1^2": 21, "(-3)^1 (-1)^6": 7})


def test_orbit_is_invariant():
    p = LatticeParams(2, 3, 6)
    rs = roots.enumerate_roots(p)
    orb = set(map(tuple, roots.orbit(p, roots.z_root_vector(p), rs)))
    for r in rs:
        assert {tuple(roots.reflect(p, r, v)) for v in orb} == orb


def test_e_chain():
    chain = roots.weyl_chain(LatticeParams(2, 3, 8))
    assert [c for _, c in chain] == [240, 56, 27, 16, 10, 12]
    assert roots.weyl_order(LatticeParams(2, 3, 6)) == 51840


@pytest.mark.parametrize("n", range(1, 9))
def test_a_weyl_by_recursion(n):
    chain = roots.weyl_chain(LatticeParams(2, 1, n))
    assert [c for _, c in chain] == list(range(n + 1, 1, -1))
    assert roots.weyl_order(LatticeParams(2, 1, n)) == factorial(n + 1)


@pytest.mark.parametrize("n", range(4, 9))
def test_d_weyl_by_recursion(n):
    chain = roots.weyl_chain(LatticeParams(2, 2, n))
    assert [c for _, c in chain[:-1]] == [2 * j for j in range(n, 2, -1)]
    assert roots.weyl_order(LatticeParams(2, 2, n)) == 2 ** (n - 1) * factorial(n)


def test_weyl_mixed_and_errors():
    # A3 + A1: 4! * 2
    assert roots.weyl_order(LatticeParams(2, 4, 4)) == 48
    with pytest.raises(roots.NotARootLattice):
        roots.weyl_order(LatticeParams(4, 5, 24))
    with pytest.raises(roots.NotARootLattice):
        roots.weyl_orbit_size(LatticeParams(3, 1, 3))


@pytest.mark.parametrize("params", [(2, 1, 5), (2, 2, 5), (2, 3, 6), (2, 3, 7),
                                    (2, 3, 8), (2, 4, 4)])
def test_roots_span_root_lattices(params):
    assert roots.roots_span_lattice(LatticeParams(*params))


def test_roots_do_not_span():
    # the roots of D+12 span only D12, of index 2
    assert not roots.roots_span_lattice(LatticeParams(3, 5, 12))
    assert not roots.roots_span_lattice(LatticeParams(1, 1, 3))


def test_table_formats():
    t = roots.root_table(LatticeParams(2, 1, 3))
    assert t.to_markdown().splitlines()[0] == "| latitude | shape | number |"
    assert t.to_csv().splitlines()[1] == "1,1^1,3"
    doc = json.loads(t.to_json())
    assert doc["total"] == 12 and doc["params"] == [2, 1, 3]
    assert t.to_json() == roots.root_table(LatticeParams(2, 1, 3)).to_json()
