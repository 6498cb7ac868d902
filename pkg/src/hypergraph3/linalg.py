"""Small fixed-size real linear algebra.

Partial traces of three-qubit pure states, a cyclic Jacobi eigensolver
for symmetric matrices, and the PSD square root built on it.
"""

from __future__ import annotations

import math

import numpy as np

from .hypergraph import vertex_index

SYM_TOL = 1e-10
PSD_TOL = 1e-10
OFF_TOL = 1e-14
MAX_SWEEPS = 50


class NumericError(ArithmeticError):
    """Numeric precondition violated (asymmetry, negative spectrum)."""


def _tensor(s) -> np.ndarray:
    psi = np.asarray(s, dtype=float)
    if psi.shape != (8,):
        raise ValueError(f"expected 8 amplitudes, got shape {psi.shape}")
    return psi.reshape(2, 2, 2)


def reduced_density_one(s, q: str) -> np.ndarray:
    """2x2 marginal of qubit ``q``, tracing out the other two."""
    k = vertex_index(q)
    m = np.moveaxis(_tensor(s), k, 0).reshape(2, 4)
    return m @ m.T


def reduced_density_pair(s, pair) -> np.ndarray:
    """4x4 marginal of two qubits, index ``2*x_first + x_second`` (A<B<C)."""
    i, j = sorted(vertex_index(q) for q in pair)
    if i == j:
        raise ValueError("pair must name two distinct vertices")
    (rest,) = {0, 1, 2} - {i, j}
    m = np.transpose(_tensor(s), (i, j, rest)).reshape(4, 2)
    return m @ m.T


def _check_symmetric(M) -> np.ndarray:
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    asym = np.max(np.abs(A - A.T)) if A.size else 0.0
    if asym > SYM_TOL:
        raise NumericError(f"matrix not symmetric (max asymmetry {asym:.3g})")
    return 0.5 * (A + A.T)


def _off_norm(A: list[list[float]]) -> float:
    n = len(A)
    return math.sqrt(sum(A[i][j] * A[i][j] for i in range(n) for j in range(n) if i != j))


def jacobi_eigh(M) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a small symmetric matrix by cyclic Jacobi.

    Returns ``(values, vectors)`` with values descending and the matching
    eigenvectors as columns.  Sweeps stop once the off-diagonal Frobenius
    norm drops below 1e-14, or after 50 sweeps.
    """
    # plain floats: numpy call overhead dominates at n <= 4
    A = _check_symmetric(M).tolist()
    n = len(A)
    V = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for _ in range(MAX_SWEEPS):
        if _off_norm(A) < OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p][q]
                if apq == 0.0:
                    continue
                h = A[q][q] - A[p][p]
                if abs(apq) < 1e-18 * abs(h):
                    # theta would overflow; first-order tangent
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                sn = t * c
                # A <- J^T A J and V <- V J for the (p, q) plane rotation
                for row in A:
                    x, y = row[p], row[q]
                    row[p] = c * x - sn * y
                    row[q] = sn * x + c * y
                Ap, Aq = A[p], A[q]
                for k in range(n):
                    x, y = Ap[k], Aq[k]
                    Ap[k] = c * x - sn * y
                    Aq[k] = sn * x + c * y
                Ap[q] = Aq[p] = 0.0
                for row in V:
                    x, y = row[p], row[q]
                    row[p] = c * x - sn * y
                    row[q] = sn * x + c * y
    values = np.array([A[i][i] for i in range(n)])
    order = np.argsort(values, kind="stable")[::-1]
    return values[order], np.array(V).reshape(n, n)[:, order]


def jacobi_eigen_sym(M) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending."""
    values, _ = jacobi_eigh(M)
    return [float(v) for v in values]


def sqrt_psd(M) -> np.ndarray:
    """Symmetric PSD square root.

    Eigenvalues in [-1e-10, 0) are treated as zero; anything more negative
    raises :class:`NumericError`.
    """
    values, V = jacobi_eigh(M)
    if values.size and values.min() < -PSD_TOL:
        raise NumericError(f"matrix not PSD (eigenvalue {values.min():.3g})")
    root = (V * np.sqrt(np.clip(values, 0.0, None))) @ V.T
    return 0.5 * (root + root.T)
