"""SLOCC classes, entangled graphs and the exhaustive audit."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .hypergraph import (
    LUClass, Hypergraph, enumerate_all, format_hypergraph, is_graph, lu_class_of,
)
from .measures import PAIRS, Fingerprint, concurrence_pair, fingerprint_of_state, schmidt_measure
from . import states

ZERO_TOL = 1e-9
ROW_TOL = 1e-9

EXPECTED_SIZES = {
    LUClass.G0: 16, LUClass.G1: 16, LUClass.G2: 16,
    LUClass.G3: 16, LUClass.G4: 64, LUClass.G5: 128,
}

_H, _Q = 0.5, 0.25
CLASS_ROWS = {
    LUClass.G0: Fingerprint(0, 0, 0, 0, 0, 0, 0),
    LUClass.G1: Fingerprint(0, _H, _H, 0, 0, 0, 1),
    LUClass.G2: Fingerprint(_H, 0, _H, 0, 0, 1, 0),
    LUClass.G3: Fingerprint(_H, _H, 0, 0, 1, 0, 0),
    LUClass.G4: Fingerprint(_H, _H, _H, 1, 0, 0, 0),
    LUClass.G5: Fingerprint(_Q, _Q, _Q, _Q, _H, _H, _H),
}


class SLOCCClass(str, enum.Enum):
    ABC = "A-B-C"
    A_BC = "A-BC"
    B_AC = "B-AC"
    C_AB = "C-AB"
    GHZ = "GHZ"
    W = "W"

    def __str__(self) -> str:
        return self.value


_STRUCTURAL = {
    LUClass.G0: SLOCCClass.ABC,
    LUClass.G1: SLOCCClass.A_BC,
    LUClass.G2: SLOCCClass.B_AC,
    LUClass.G3: SLOCCClass.C_AB,
    LUClass.G4: SLOCCClass.GHZ,
    LUClass.G5: SLOCCClass.GHZ,
}

_BISEPARABLE = {"A": SLOCCClass.A_BC, "B": SLOCCClass.B_AC, "C": SLOCCClass.C_AB}


def slocc_class_structural(g: Hypergraph) -> SLOCCClass:
    return _STRUCTURAL[lu_class_of(g)]


def slocc_class_from_measures(f: Fingerprint, tol: float = ZERO_TOL) -> SLOCCClass:
    """Decide the SLOCC class of a pure state from E2 values and tau.

    A vanishing E2 at qubit X means X factors off.  Two vanishing E2 with
    a third nonzero cannot come from a pure state and raises ValueError.
    """
    zero = [q for q in "ABC" if f.e2(q) <= tol]
    if len(zero) == 3:
        return SLOCCClass.ABC
    if len(zero) == 2:
        raise ValueError(f"inconsistent fingerprint, two vanishing E2 values: {f}")
    if len(zero) == 1:
        return _BISEPARABLE[zero[0]]
    return SLOCCClass.GHZ if f.tau > tol else SLOCCClass.W


def entangled_graph_of_state(s, tol: float = ZERO_TOL) -> tuple[str, ...]:
    return tuple(x + y for x, y in PAIRS if concurrence_pair(s, (x, y)) > tol)


def entangled_graph_of(g: Hypergraph, tol: float = ZERO_TOL) -> tuple[str, ...]:
    """Pairs XY (from AB, AC, BC) with nonzero concurrence."""
    return entangled_graph_of_state(states.build_state_gates(g), tol)


def entangled_graph_from_fingerprint(f: Fingerprint, tol: float = ZERO_TOL) -> tuple[str, ...]:
    return tuple(x + y for x, y in PAIRS if f.concurrence(x, y) > tol)


@dataclass
class Mismatch:
    hypergraph: str
    field: str
    expected: float | str
    got: float | str


@dataclass
class AuditReport:
    class_sizes: dict[str, int]
    table1_mismatches: list[Mismatch] = field(default_factory=list)
    w_type_count: int = 0
    partition_ok: bool = True
    monogamy_max_error: float = 0.0
    schmidt_ok: bool = True
    slocc_agreement_ok: bool = True
    entangled_graph_ok: bool = True
    graph_edge_counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (not self.table1_mismatches and self.w_type_count == 0
                and self.partition_ok and self.monogamy_max_error < ROW_TOL
                and self.schmidt_ok and self.slocc_agreement_ok
                and self.entangled_graph_ok)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "class_sizes": dict(self.class_sizes),
            "table1_mismatches": [vars(m) for m in self.table1_mismatches],
            "w_type_count": self.w_type_count,
            "partition_ok": self.partition_ok,
            "monogamy_max_error": self.monogamy_max_error,
            "schmidt_ok": self.schmidt_ok,
            "slocc_agreement_ok": self.slocc_agreement_ok,
            "entangled_graph_ok": self.entangled_graph_ok,
            "graph_edge_counts": dict(self.graph_edge_counts),
        }


_EXPECTED_GRAPH = {
    LUClass.G0: (), LUClass.G4: (),
    LUClass.G1: ("BC",), LUClass.G2: ("AC",), LUClass.G3: ("AB",),
    LUClass.G5: ("AB", "AC", "BC"),
}


def audit_all(builder: Callable[[Hypergraph], np.ndarray] | None = None) -> AuditReport:
    """Check every hypergraph against the class structure and the expected class rows.

    ``builder`` maps a hypergraph to its state vector (default: gate
    construction); it exists so a broken construction can be audited.
    Failures are collected, never raised.
    """
    build = builder or states.build_state_gates
    labels = [lu_class_of(g) for g in enumerate_all()]
    sizes = {c.value: labels.count(c) for c in LUClass}
    report = AuditReport(class_sizes=sizes)
    report.partition_ok = (
        len(labels) == 256
        and len(set(g.mask for g in enumerate_all())) == 256
        and {LUClass(k): v for k, v in sizes.items()} == EXPECTED_SIZES
    )
    edge_counts = {str(k): 0 for k in range(4)}
    for g, label in zip(enumerate_all(), labels):
        name = format_hypergraph(g)
        f = fingerprint_of_state(build(g))
        expected = CLASS_ROWS[label]
        for key, want, got in zip(Fingerprint.field_names(), expected.as_tuple(), f.as_tuple()):
            if not abs(want - got) <= ROW_TOL:
                report.table1_mismatches.append(Mismatch(name, key, want, got))
        err = max(abs(r) for r in f.monogamy_residuals().values())
        report.monogamy_max_error = max(report.monogamy_max_error, err)

        try:
            measured = slocc_class_from_measures(f)
        except ValueError:
            measured = None
            report.slocc_agreement_ok = False
        if measured is SLOCCClass.W:
            report.w_type_count += 1
        if measured is not slocc_class_structural(g):
            report.slocc_agreement_ok = False

        es = schmidt_measure(g)
        product = all(f.e2(q) < ZERO_TOL for q in "ABC")
        if es not in (0, 1) or (es == 0) != (label is LUClass.G0) or (es == 0) != product:
            report.schmidt_ok = False

        graph = entangled_graph_from_fingerprint(f)
        edge_counts[str(len(graph))] += 1
        if graph != _EXPECTED_GRAPH[label] or (is_graph(g) and len(graph) > 1):
            report.entangled_graph_ok = False
    report.graph_edge_counts = edge_counts
    return report
