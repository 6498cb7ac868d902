import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypergraph3.hypergraph import Hypergraph, enumerate_all, parse_hypergraph
from hypergraph3.linalg import (
    NumericError, jacobi_eigen_sym, jacobi_eigh, reduced_density_one,
    reduced_density_pair, sqrt_psd,
)
from hypergraph3.states import build_state_gates

PAIRS = [("A", "B"), ("A", "C"), ("B", "C")]
POS = {"A": 0, "B": 1, "C": 2}


def amp(s, bits):
    return s[4 * bits[0] + 2 * bits[1] + bits[2]]


def brute_rho_one(s, q):
    k = POS[q]
    rho = np.zeros((2, 2))
    for i, j in itertools.product(range(2), repeat=2):
        for rest in itertools.product(range(2), repeat=2):
            bi, bj = list(rest), list(rest)
            bi.insert(k, i)
            bj.insert(k, j)
            rho[i, j] += amp(s, bi) * amp(s, bj)
    return rho


def brute_rho_pair(s, pair):
    p, q = sorted(POS[v] for v in pair)
    (r,) = {0, 1, 2} - {p, q}
    rho = np.zeros((4, 4))
    for row, col, t in itertools.product(range(4), range(4), range(2)):
        bi, bj = [0] * 3, [0] * 3
        bi[p], bi[q], bi[r] = row >> 1, row & 1, t
        bj[p], bj[q], bj[r] = col >> 1, col & 1, t
        rho[row, col] += amp(s, bi) * amp(s, bj)
    return rho


def charpoly(M):
    """Faddeev-LeVerrier coefficients, highest degree first."""
    n = M.shape[0]
    coeffs = [1.0]
    Mk = np.zeros_like(M)
    c = 1.0
    for k in range(1, n + 1):
        Mk = M @ Mk + c * np.eye(n)
        c = -np.trace(M @ Mk) / k
        coeffs.append(c)
    return np.array(coeffs)


def charpoly_roots(M):
    coeffs = charpoly(M)
    roots = np.sort(np.roots(coeffs).real)[::-1]
    dp = np.polyder(coeffs)
    for _ in range(3):
        d = np.polyval(dp, roots)
        step = np.where(np.abs(d) > 1e-300, np.polyval(coeffs, roots) / np.where(d == 0, 1, d), 0)
        roots = roots - step
    return np.sort(roots)[::-1]


def random_states(n, seed):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        v = rng.normal(size=8)
        yield v / np.linalg.norm(v)


@pytest.mark.parametrize("text, q, expected", [
    ("", "A", [[0.5, 0.5], [0.5, 0.5]]),
    ("ABC", "A", [[0.5, 0.25], [0.25, 0.5]]),
    ("AC", "A", [[0.5, 0.0], [0.0, 0.5]]),
])
def test_reduced_density_one_examples(text, q, expected):
    rho = reduced_density_one(build_state_gates(parse_hypergraph(text)), q)
    assert np.allclose(rho, expected, atol=1e-12)


def test_reduced_density_vs_brute_force():
    states = [build_state_gates(g) for g in enumerate_all()]
    states += list(random_states(50, 0))
    for s in states:
        for q in "ABC":
            assert np.allclose(reduced_density_one(s, q), brute_rho_one(s, q), atol=1e-14)
        for pair in PAIRS:
            assert np.allclose(reduced_density_pair(s, pair), brute_rho_pair(s, pair), atol=1e-14)
            assert np.array_equal(reduced_density_pair(s, pair),
                                  reduced_density_pair(s, pair[::-1]))


def test_pair_of_product_state():
    rho = reduced_density_pair(build_state_gates(Hypergraph()), ("A", "B"))
    assert np.allclose(rho, np.full((4, 4), 0.25), atol=1e-12)


def test_partial_trace_consistency():
    for s in itertools.chain((build_state_gates(g) for g in enumerate_all()), random_states(50, 1)):
        for (x, y) in PAIRS:
            rho = reduced_density_pair(s, (x, y)).reshape(2, 2, 2, 2)
            assert np.allclose(np.einsum("ikjk->ij", rho), reduced_density_one(s, x), atol=1e-14)
            assert np.allclose(np.einsum("kikj->ij", rho), reduced_density_one(s, y), atol=1e-14)


def test_marginals_are_density_matrices():
    for g in enumerate_all():
        s = build_state_gates(g)
        for q in "ABC":
            rho = reduced_density_one(s, q)
            assert abs(rho[0, 0] - 0.5) < 1e-12 and abs(rho[1, 1] - 0.5) < 1e-12
            ev = jacobi_eigen_sym(rho)
            assert abs(sum(ev) - 1) < 1e-12
            a = abs(rho[0, 1])
            assert ev == pytest.approx([0.5 + a, 0.5 - a], abs=1e-12)
        for pair in PAIRS:
            rho = reduced_density_pair(s, pair)
            assert np.array_equal(rho, rho.T)
            assert abs(np.trace(rho) - 1) < 1e-12
            ev = jacobi_eigen_sym(rho)
            assert min(ev) >= -1e-12 and max(ev) <= 1 + 1e-12


def test_jacobi_examples():
    assert jacobi_eigen_sym(np.eye(4)) == [1.0] * 4
    assert jacobi_eigen_sym(np.eye(2)) == [1.0, 1.0]
    assert jacobi_eigen_sym([[0.5, 0.25], [0.25, 0.5]]) == pytest.approx([0.75, 0.25], abs=1e-15)


@given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10))
def test_jacobi_2x2_closed_form(a, b, d):
    mean, rad = (a + d) / 2, np.hypot((a - d) / 2, b)
    ev = jacobi_eigen_sym([[a, b], [b, d]])
    assert ev == pytest.approx([mean + rad, mean - rad], abs=1e-12)


def test_jacobi_vs_charpoly_random():
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(1000):
        X = rng.uniform(-1, 1, (4, 4))
        M = (X + X.T) / 2
        worst = max(worst, np.max(np.abs(np.array(jacobi_eigen_sym(M)) - charpoly_roots(M))))
    assert worst < 1e-10


@settings(max_examples=200)
@given(st.lists(st.floats(-5, 5), min_size=10, max_size=10))
def test_jacobi_decomposition(entries):
    M = np.zeros((4, 4))
    M[np.triu_indices(4)] = entries
    M = M + np.triu(M, 1).T
    w, V = jacobi_eigh(M)
    assert list(w) == sorted(w, reverse=True)
    assert np.allclose(V.T @ V, np.eye(4), atol=1e-12)
    assert np.allclose(V @ np.diag(w) @ V.T, M, atol=1e-10)


def test_jacobi_degenerate_and_diagonal():
    M = np.diag([3.0, -1.0, 3.0, 0.0])
    assert jacobi_eigen_sym(M) == [3.0, 3.0, 0.0, -1.0]
    assert jacobi_eigen_sym(np.zeros((4, 4))) == [0.0] * 4
    # tiny off-diagonal next to a large diagonal gap
    M = np.diag([1e10, -1e10, 0.0, 1.0])
    M[0, 1] = M[1, 0] = 1e-12
    assert jacobi_eigen_sym(M) == pytest.approx([1e10, 1.0, 0.0, -1e10])


def test_jacobi_rejects_asymmetric():
    with pytest.raises(NumericError):
        jacobi_eigen_sym([[1.0, 1e-9], [0.0, 1.0]])
    # within tolerance is accepted
    jacobi_eigen_sym([[1.0, 1e-11], [0.0, 1.0]])


def test_sqrt_psd_examples():
    assert np.allclose(sqrt_psd(np.eye(4) / 4), np.eye(4) / 2, atol=1e-15)
    assert np.array_equal(sqrt_psd(np.zeros((4, 4))), np.zeros((4, 4)))


def test_sqrt_psd_random():
    rng = np.random.default_rng(7)
    for rank in (1, 2, 3, 4):
        for _ in range(200):
            X = rng.normal(size=(4, rank))
            M = X @ X.T
            R = sqrt_psd(M)
            assert np.allclose(R @ R, M, atol=1e-10)
            assert np.allclose(R, R.T, atol=1e-15)
            assert min(jacobi_eigen_sym(R)) >= -1e-10
            assert np.allclose(R @ M, M @ R, atol=1e-10)


def test_sqrt_psd_clamps_tiny_negatives():
    M = np.diag([1.0, 0.25, 0.0, -1e-11])
    assert np.allclose(sqrt_psd(M), np.diag([1.0, 0.5, 0.0, 0.0]))


def test_sqrt_psd_rejects_negative():
    with pytest.raises(NumericError):
        sqrt_psd(np.diag([1.0, 1.0, 1.0, -1e-6]))
