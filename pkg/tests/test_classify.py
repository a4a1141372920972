import pytest

from checkerboard import classify, core
from checkerboard.core import LatticeParams


def brute_det_solutions(d, k, n_max, m_span):
    return {(m, n) for n in range(1, n_max + 1) for m in range(-m_span, m_span + 1)
            if m and m * m - m * n + k * n == d}


@pytest.mark.parametrize("d,k", [(1, 2), (0, 3), (-1, 1), (4, 2), (7, -3), (0, 0)])
def test_solver_matches_brute_force(d, k):
    got = classify.solve_det_equation(d, k, 25)
    assert {(m, n) for m, n, _ in got} == brute_det_solutions(d, k, 25, 100)
    for m, n, w in got:
        assert k * k - d == w.p * w.q
        assert m == k + w.p and n == 2 * k + w.p + w.q
    assert got == sorted(got, key=lambda t: (t[0], t[1]))


def test_solver_rejects_bad_range():
    with pytest.raises(ValueError):
        classify.solve_det_equation(1, 1, 0)


def test_k_upper_bound():
    # no positive-definite lattice of rank n and det d has k above n/4 + d/n
    for n in range(1, 13):
        for m in range(1, n + 1):
            for k in range(-3, 12):
                d = core.det_lattice(LatticeParams(k, m, n))
                if d > 0:
                    assert k <= classify.k_upper_bound(n, d)


def test_root_lattice_labels():
    cases = {
        (2, 1, 5): "A5", (2, 2, 6): "D6", (2, 3, 8): "E8", (2, 3, 6): "E6",
        (2, 5, 8): "E8", (2, 4, 4): "A3+A1", (2, 3, 9): "none", (3, 1, 4): "none",
        (0, -1, 5): "A5",
    }
    for params, name in cases.items():
        assert classify.classify_root_lattice(LatticeParams(*params)).name == name
    assert classify.classify_root_lattice(LatticeParams(2, 3, 5)).note == "E5 = D5"
    assert classify.classify_root_lattice(LatticeParams(2, 2, 3)).note == "D3 = A3"
    assert not classify.classify_root_lattice(LatticeParams(4, 5, 24))


def brute_unimodular(n):
    return {(k, m) for m in range(1, n) for k in range(-2 * n * n, 2 * n * n)
            if core.det_lattice(LatticeParams(k, m, n)) == 1}


@pytest.mark.parametrize("n", range(2, 17))
def test_enumerate_unimodular_brute(n):
    got = classify.enumerate_unimodular(n)
    assert {(p.k, p.m) for p in got} == brute_unimodular(n)
    for p in got:
        w = classify.unimodular_witness(p)
        assert w is not None and w.p >= 0 and w.q >= 0
        assert core.signature(p) == (n, 0, 0)


def test_unimodular_witness_domain():
    with pytest.raises(ValueError):
        classify.unimodular_witness(LatticeParams(2, 8, 8))
    assert classify.unimodular_witness(LatticeParams(2, 2, 8)) is None


def test_known_names():
    assert "E8" in classify.known_names(LatticeParams(2, 3, 8))
    assert "D+8" in classify.known_names(LatticeParams(2, 3, 8))
    assert "Z^5" in classify.known_names(LatticeParams(1, 1, 5))
    assert "Niemeier N(A24)" in classify.known_names(LatticeParams(4, 19, 24))
    assert "D+16" in classify.known_names(LatticeParams(4, 9, 16))
    assert "unimodular, contains A8" in classify.known_names(LatticeParams(2, 3, 8))


def test_det_sign_name():
    assert classify.det_sign_name(LatticeParams(2, 3, 8)) == "positive-definite"
    assert classify.det_sign_name(LatticeParams(1, 2, 4)) == "degenerate"
    assert classify.det_sign_name(LatticeParams(1, 2, 10)) == "hyperbolic"
