"""Hypergraph state construction.

Basis index convention: ``x = 4*x_A + 2*x_B + x_C`` (qubit A most
significant).  All states here are real, so amplitudes are float64 arrays
of length 8.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .hypergraph import EdgeLike, Hypergraph, edge_mask

AMPLITUDE = 1.0 / (2.0 * np.sqrt(2.0))
TOL = 1e-12

BASIS = np.arange(8)


def boolean_function_of(g: Hypergraph) -> np.ndarray:
    """Truth table of u(g) as an int8 array indexed by basis index.

    Each edge e contributes the monomial prod_{k in e} x_k, and the empty
    edge contributes the constant 1; contributions are added mod 2.
    """
    table = np.zeros(8, dtype=np.int8)
    for e in g.edges:
        # monomial is 1 exactly where every bit of e is set in x
        table ^= ((BASIS & e) == e).astype(np.int8)
    return table


def plus_state() -> np.ndarray:
    """|+>|+>|+>."""
    return np.full(8, AMPLITUDE)


def apply_hyperedge_gate(s: np.ndarray, e: EdgeLike) -> np.ndarray:
    """Apply the multi-controlled Z on the qubits of ``e``.

    Negates amplitudes whose index has all bits of ``e`` set.  For the
    empty edge that is every amplitude (a global sign).
    """
    m = edge_mask(e)
    out = np.array(s, dtype=float, copy=True)
    hit = (BASIS & m) == m
    out[hit] = -out[hit]
    return out


def build_state_gates(g: Hypergraph, order: Iterable[int] | None = None) -> np.ndarray:
    """|g> as a product of hyperedge gates acting on |+>^3.

    ``order`` optionally fixes the gate sequence; it must be a permutation
    of ``g.edges``.  The gates are diagonal so the result does not depend
    on it.
    """
    edges = g.sorted_edges() if order is None else list(order)
    if order is not None and (len(edges) != len(g.edges) or set(edges) != g.edges):
        raise ValueError("order must be a permutation of the hypergraph's edges")
    s = plus_state()
    for e in edges:
        s = apply_hyperedge_gate(s, e)
    return s


def build_state_boolean(g: Hypergraph) -> np.ndarray:
    """|g> as the real equally weighted state with signs (-1)^u(g)(x)."""
    u = boolean_function_of(g)
    return np.where(u == 1, -AMPLITUDE, AMPLITUDE)


def equal_up_to_global_sign(s1, s2, tol: float = TOL) -> bool:
    s1 = np.asarray(s1, dtype=float)
    s2 = np.asarray(s2, dtype=float)
    return bool(np.allclose(s1, s2, rtol=0, atol=tol)
                or np.allclose(s1, -s2, rtol=0, atol=tol))


def permute_qubits(s, perm) -> np.ndarray:
    """Relabel qubits: new qubit ``i`` is old qubit ``perm[i]``."""
    psi = np.asarray(s).reshape(2, 2, 2)
    return np.transpose(psi, perm).reshape(8).copy()
