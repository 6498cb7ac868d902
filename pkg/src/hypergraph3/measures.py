"""Entanglement measures for three-qubit (real) pure states.

Conventions: an input ``s`` is an 8-vector of amplitudes indexed by
``4*x_A + 2*x_B + x_C``.  Measures taking a hypergraph build the state
with the gate construction.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields

import numpy as np

from .hypergraph import VERTICES, Hypergraph, LUClass, lu_class_of
from .linalg import NumericError, jacobi_eigen_sym, reduced_density_one, reduced_density_pair, sqrt_psd
from .states import build_state_gates

# sigma_y (x) sigma_y; real because the two factors of i cancel
SPIN_FLIP = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
])

EPSILON = np.array([[0.0, 1.0], [-1.0, 0.0]])

LAMBDA_CLAMP = 1e-12

PAIRS = (("A", "B"), ("A", "C"), ("B", "C"))


@dataclass(frozen=True)
class Fingerprint:
    """One row of measure values: (E2_A, E2_B, E2_C, tau, C_AB, C_AC, C_BC)."""

    e2_a: float
    e2_b: float
    e2_c: float
    tau: float
    c_ab: float
    c_ac: float
    c_bc: float

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.field_names(), self.as_tuple()))

    def e2(self, q: str) -> float:
        return getattr(self, f"e2_{q.lower()}")

    def concurrence(self, x: str, y: str) -> float:
        a, b = sorted((x, y))
        return getattr(self, f"c_{a.lower()}{b.lower()}")

    def one_rest_concurrence(self, q: str) -> float:
        e = self.e2(q)
        return 2.0 * math.sqrt(max(e * (1.0 - e), 0.0))

    def monogamy_residuals(self) -> dict[str, float]:
        """tau - (C_{X(rest)}^2 - sum of squared pairwise C at X), per pivot X."""
        out = {}
        for x in VERTICES:
            y, z = (v for v in VERTICES if v != x)
            rhs = (self.one_rest_concurrence(x) ** 2
                   - self.concurrence(x, y) ** 2 - self.concurrence(x, z) ** 2)
            out[x] = self.tau - rhs
        return out


def entropic_measure(s, q: str) -> float:
    """Smallest eigenvalue of the single-qubit marginal of ``q``, in [0, 1/2]."""
    lo = jacobi_eigen_sym(reduced_density_one(s, q))[-1]
    return min(max(lo, 0.0), 0.5)


def spin_flip(rho) -> np.ndarray:
    """Spin-flipped two-qubit matrix; conjugation is a no-op for real input."""
    rho = np.asarray(rho, dtype=float)
    return SPIN_FLIP @ rho.conj() @ SPIN_FLIP


def concurrence_from_rho(rho) -> float:
    """Wootters concurrence of a real two-qubit density matrix.

    The square roots of the eigenvalues of rho * rho_tilde are taken from
    the symmetric matrix sqrt(rho) rho_tilde sqrt(rho), which has the same
    spectrum.
    """
    r = sqrt_psd(rho)
    lam = jacobi_eigen_sym(r @ spin_flip(rho) @ r)
    if lam[-1] < -LAMBDA_CLAMP:
        raise NumericError(f"negative spin-flip eigenvalue {lam[-1]:.3g}")
    # sqrt(rho) of a rank-deficient marginal leaves ~1e-17 noise of either
    # sign in the exact zeros; its square root would be ~1e-8
    lam = [0.0 if v < LAMBDA_CLAMP else v for v in lam]
    roots = [math.sqrt(v) for v in lam]
    return min(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]), 1.0)


def concurrence_pair(s, pair) -> float:
    return concurrence_from_rho(reduced_density_pair(s, pair))


def concurrence_one_rest(s, q: str) -> float:
    """Concurrence between ``q`` and the other two qubits, 2 sqrt(E2 (1 - E2))."""
    e = entropic_measure(s, q)
    return 2.0 * math.sqrt(e * (1.0 - e))


def hyperdeterminant(s) -> float:
    """Cayley hyperdeterminant of the 2x2x2 amplitude array."""
    a = np.asarray(s, dtype=float).reshape(2, 2, 2)
    a000, a001, a010, a011 = a[0, 0, 0], a[0, 0, 1], a[0, 1, 0], a[0, 1, 1]
    a100, a101, a110, a111 = a[1, 0, 0], a[1, 0, 1], a[1, 1, 0], a[1, 1, 1]
    d1 = (a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110
          + a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011)
    d2 = (a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010
          + a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010
          + a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001)
    d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100
    return float(d1 - 2.0 * d2 + 4.0 * d3)


def three_tangle(s) -> float:
    """Residual tangle tau = 4 |Det(a)|, in [0, 1]."""
    return min(4.0 * abs(hyperdeterminant(s)), 1.0)


def schmidt_measure(g: Hypergraph) -> int:
    """log2 of the minimal product-term count; 0 on G0, 1 otherwise.

    No hypergraph state is W-type, so the only values that occur are those
    of the fully separable class (0) and of the biseparable/GHZ classes (1).
    """
    return 0 if lu_class_of(g) is LUClass.G0 else 1


def fingerprint_of_state(s) -> Fingerprint:
    return Fingerprint(
        e2_a=entropic_measure(s, "A"),
        e2_b=entropic_measure(s, "B"),
        e2_c=entropic_measure(s, "C"),
        tau=three_tangle(s),
        c_ab=concurrence_pair(s, ("A", "B")),
        c_ac=concurrence_pair(s, ("A", "C")),
        c_bc=concurrence_pair(s, ("B", "C")),
    )


def fingerprint(g: Hypergraph) -> Fingerprint:
    return fingerprint_of_state(build_state_gates(g))
