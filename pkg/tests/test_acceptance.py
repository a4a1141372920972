"""Acceptance criteria, one test per criterion.

The terminal summary prints a PASS/FAIL line for each of these.
"""

import random
import subprocess
import sys
from fractions import Fraction
from math import factorial

from checkerboard import classify, core, designs, duality, exactla, recognition, roots
from checkerboard.core import LatticeParams, LatticeVector

from conftest import brute_form, random_unimodular


def shell_rows(p):
    return [(r.latitude, str(r.shape), r.count) for r in roots.root_table(p).rows]


def test_criterion_01_root_tables():
    assert shell_rows(LatticeParams(2, 3, 6)) == [
        (6, "1^6", 1), (3, "1^3", 20), (0, "(-1)^1 1^1", 30), (-3, "(-1)^3", 20),
        (-6, "(-1)^6", 1)]
    assert shell_rows(LatticeParams(2, 3, 7)) == [
        (6, "1^6", 7), (3, "1^3", 35), (0, "(-1)^1 1^1", 42), (-3, "(-1)^3", 35),
        (-6, "(-1)^6", 7)]
    assert shell_rows(LatticeParams(2, 3, 8)) == [
        (9, "1^7 2^1", 8), (6, "1^6", 28), (3, "1^3", 56), (0, "(-1)^1 1^1", 56),
        (-3, "(-1)^3", 56), (-6, "(-1)^6", 28), (-9, "(-2)^1 (-1)^7", 8)]
    totals = [roots.root_table(LatticeParams(2, 3, n)).total for n in (6, 7, 8)]
    assert totals == [72, 126, 240]
    for n in range(2, 13):
        assert roots.root_table(LatticeParams(2, 1, n)).total == n * (n + 1)
        assert roots.root_table(LatticeParams(2, 2, n)).total == 2 * n * (n - 1)


def test_criterion_02_weyl_orders():
    for n, order in [(6, 51840), (7, 2903040), (8, 696729600)]:
        p = LatticeParams(2, 3, n)
        assert roots.weyl_order(p) == order
    assert roots.weyl_orbit_size(LatticeParams(2, 3, 6)) == 27
    assert roots.weyl_orbit_size(LatticeParams(2, 3, 7)) == 56
    assert roots.weyl_orbit_size(LatticeParams(2, 3, 8)) == 240
    for n in range(1, 9):
        chain = roots.weyl_chain(LatticeParams(2, 1, n))
        assert all(q.k == 2 and q.m == 1 for q, _ in chain)
        assert roots.weyl_order(LatticeParams(2, 1, n)) == factorial(n + 1)
    for n in range(4, 9):
        chain = roots.weyl_chain(LatticeParams(2, 2, n))
        # the recursion runs through the rank-3, 4, ... members of the series
        assert [q.n for q, _ in chain] == list(range(n, 1, -1))
        assert roots.weyl_order(LatticeParams(2, 2, n)) == 2 ** (n - 1) * factorial(n)


def brute_even_unimodular(n):
    found = set()
    for m in range(1, n):
        for k in range(-n, n * n):
            p = LatticeParams(k, m, n)
            G = core.gram_matrix(p)
            if exactla.det_bareiss(G) == 1 and all(G[i][i] % 2 == 0 for i in range(n)) \
                    and exactla.inertia(G) == (n, 0, 0):
                found.add((k, m))
    return found


def test_criterion_03_unimodular_classification():
    got24 = classify.enumerate_unimodular(24, even_only=True)
    assert {(p.k, p.m) for p in got24} == {(4, 5), (4, 19), (6, 11), (6, 13)}
    for p in got24:
        G = core.gram_matrix(p)
        assert core.det_lattice(p) == 1 == exactla.det_bareiss(G)
        assert all(G[i][i] % 2 == 0 for i in range(24))
    got8 = {(p.k, p.m) for p in classify.enumerate_unimodular(8, even_only=True)}
    assert got8 == brute_even_unimodular(8) == {(2, 3), (2, 5)}
    got16 = {(p.k, p.m) for p in classify.enumerate_unimodular(16, even_only=True)}
    assert got16 == brute_even_unimodular(16) == {(4, 7), (4, 9)}


def test_criterion_04_det_equation_oracle():
    mismatches = 0
    n_max = 40
    for d in range(-10, 11):
        for k in range(-20, 21):
            got = {(m, n) for m, n, _ in classify.solve_det_equation(d, k, n_max)}
            brute = set()
            for n in range(1, n_max + 1):
                rhs = d - k * n
                for m in range(-3 * n_max, 3 * n_max + 1):
                    if m and m * (m - n) == rhs:
                        brute.add((m, n))
            mismatches += len(got ^ brute)
    assert mismatches == 0


def test_criterion_05_opposite_isometry():
    rng = random.Random(5)
    pairs = 0
    while pairs < 10_000:
        n = rng.randint(2, 8)
        m = rng.choice([x for x in range(-8, 9) if x and x != n])
        k = rng.randint(-6, 6)
        p = LatticeParams(k, m, n)
        q = duality.opposite_params(p)
        vecs = []
        for _ in range(2):
            x = [rng.randint(-5, 5) for _ in range(n - 1)]
            x.append(rng.randint(-3, 3) * m - sum(x))
            vecs.append(x)
        x, y = vecs
        tx, ty = duality.theta(p, x), duality.theta(p, y)
        assert core.inner(q, tx, ty) == core.inner(p, x, y) == brute_form(k, m, x, y)
        assert duality.theta(q, tx) == tuple(Fraction(a) for a in x)
        pairs += 1


def test_criterion_06_duality():
    grid = [LatticeParams(k, m, n) for n in range(1, 10) for m in range(-6, 10) if m
            for k in range(-6, 7) if core.det_lattice(LatticeParams(k, m, n))]
    for p in grid:
        B = core.form_matrix(p)
        assert exactla.matmul(duality.dual_gram(p), B) == exactla.identity(p.n)
    rng = random.Random(6)
    for _ in range(1000):
        p = rng.choice(grid)
        e0 = duality.dual_generators(p)[0]
        x = [rng.randint(-6, 6) for _ in range(p.n)]
        assert brute_form(p.k, p.m, x, e0) == Fraction(sum(x), p.m)
    for p in grid:
        factors = exactla.smith_normal_form(core.gram_matrix(p)).invariant_factors
        order = 1
        for f in factors:
            order *= f
        assert order == abs(core.det_lattice(p))


def cli_verify(params, norm, vectors, tmp_path, name):
    path = tmp_path / name
    path.write_text("".join(" ".join(map(str, v)) + "\n" for v in vectors))
    argv = [sys.executable, "-m", "checkerboard", "verify-frame", *map(str, params),
            str(path), "--norm", str(norm)]
    res = subprocess.run(argv, capture_output=True, text=True)
    return res.returncode


def test_criterion_07_frames(tmp_path):
    frames = [designs.frame_from_design(designs.fano())]
    frames += [designs.frame_from_design(designs.design_from_hadamard(
        designs.sylvester_hadamard(t))) for t in (3, 4, 5)]
    frames += [designs.dplus_frame(k) for k in range(1, 5)]
    frames += [designs.dn_frame(n) for n in range(2, 13, 2)]
    frames.append(designs.e8_frame())
    assert frames[0].params == LatticeParams(2, 3, 7)
    for f in frames:
        assert designs.verify_frame(f)
        n = f.params.n
        assert f.gram() == [[f.norm * int(i == j) for j in range(n)] for i in range(n)]
    # negative controls through the command line
    for i, f in enumerate(frames[:4] + frames[-1:]):
        assert cli_verify(list(f.params), f.norm, f.vectors, tmp_path, f"ok{i}.txt") == 0
        bad = list(f.vectors)
        bad[0] = bad[0] + LatticeVector.basis(f.params.n, 1) - LatticeVector.basis(f.params.n, 2)
        assert cli_verify(list(f.params), f.norm, bad, tmp_path, f"bad{i}.txt") == 4


def test_criterion_08_recognition_round_trip():
    rng = random.Random(8)
    trials = 0
    for n in range(1, 11):
        S0 = recognition.natural_embedding(n)
        for m in range(1, n + 1):
            for k in range(-6, 7):
                want = core.normalize_params(LatticeParams(k, m, n))
                G0 = recognition.target_gram(k, m, n)
                for _ in range(100):
                    G, S = recognition.rebase(G0, S0, random_unimodular(n, rng))
                    L = recognition.AbstractLattice(G)
                    E = recognition.SublatticeEmbedding(S, n=n)
                    r = recognition.recognize(L, E)
                    assert core.normalize_params(r.params) == want
                    assert recognition.certify(L, E, r)
                    assert core.det_lattice(r.params) == exactla.det_bareiss(G)
                    trials += 1
    assert trials == 100 * 13 * 55
    for n in range(2, 11):
        for c in range(-6, 7):
            G = recognition.cartan_a(n - 1)
            for row in G:
                row.append(0)
            G.append([0] * (n - 1) + [c])
            E = recognition.SublatticeEmbedding(recognition.natural_embedding(n), n=n)
            r = recognition.recognize(recognition.AbstractLattice(G), E)
            assert (r.k, r.m) == (c, n)


def test_criterion_09_degenerate_and_hyperbolic():
    for k in range(1, 6):
        p = LatticeParams(k, k + 1, (k + 1) ** 2)
        assert core.det_lattice(p) == 0
        assert core.signature(p) == (p.n - 1, 0, 1)
        q = LatticeParams(k, k + 1, k * k + 2 * k + 2)
        assert core.det_lattice(q) == -1 == exactla.det_bareiss(core.gram_matrix(q))
        assert core.signature(q) == (q.n - 1, 1, 0)


def test_criterion_10_no_roots_rank_24():
    for params in [(4, 5, 24), (6, 11, 24)]:
        p = LatticeParams(*params)
        found = roots.enumerate_roots(p, max_rank=24)
        assert found == [], f"{p} has {len(found)} roots, expected none"
