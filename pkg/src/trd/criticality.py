"""Per-edge gamma_tR deltas, graph classification, and critical completion.

The delta of a non-edge uv is gamma_tR(G) - gamma_tR(G+uv), which always
lies in {0, 1, 2}.  A graph with a nonempty complement is classified by
its delta multiset: supercritical (all 2), edge-critical (all >= 1),
stable (all 0), or mixed; complete graphs get their own class since
criticality is only defined when the complement has edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertexError, NotANonEdgeError, ValueTooSmallError
from .graphs import Graph, add_edge
from .solver import gamma_t_value, gamma_tr_value

COMPLETE = "complete"
SUPERCRITICAL = "supercritical"
EDGE_CRITICAL = "edge-critical"
STABLE = "stable"
MIXED = "mixed"

CLASSIFICATIONS = (COMPLETE, SUPERCRITICAL, EDGE_CRITICAL, STABLE, MIXED)


@dataclass(frozen=True)
class EdgeProfile:
    """Base value, per-non-edge deltas, and the derived classification.

    ``deltas`` maps each complement edge (u, v), u < v, to its delta; the
    insertion order is the canonical sorted-pair order.
    """

    base_value: int
    deltas: dict[tuple[int, int], int]
    classification: str

    @property
    def is_edge_critical(self) -> bool:
        """Every non-edge is critical (supercritical graphs qualify too)."""
        return bool(self.deltas) and all(d >= 1 for d in self.deltas.values())

    @property
    def is_supercritical(self) -> bool:
        return bool(self.deltas) and all(d == 2 for d in self.deltas.values())

    @property
    def is_stable(self) -> bool:
        return bool(self.deltas) and all(d == 0 for d in self.deltas.values())


def classify_deltas(deltas: dict[tuple[int, int], int]) -> str:
    """Classification label for a complete non-edge delta map."""
    if not deltas:
        return COMPLETE
    values = deltas.values()
    if all(d == 2 for d in values):
        return SUPERCRITICAL
    if all(d >= 1 for d in values):
        return EDGE_CRITICAL
    if all(d == 0 for d in values):
        return STABLE
    return MIXED


def edge_delta(g: Graph, u: int, v: int) -> int:
    """gamma_tR(G) - gamma_tR(G+uv) for the non-edge uv."""
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or g.has_edge(u, v):
        raise NotANonEdgeError(f"({u}, {v}) is not a non-edge")
    if g.has_isolated_vertices():
        raise IsolatedVertexError("edge deltas need a graph without isolated vertices")
    return gamma_tr_value(g) - gamma_tr_value(add_edge(g, u, v))


def edge_profile(g: Graph) -> EdgeProfile:
    """Deltas for every non-edge plus the classification."""
    if g.has_isolated_vertices():
        raise IsolatedVertexError("edge profiles need a graph without isolated vertices")
    base = gamma_tr_value(g)
    deltas = {
        (u, v): base - gamma_tr_value(add_edge(g, u, v))
        for u, v in g.non_edges()
    }
    return EdgeProfile(base, deltas, classify_deltas(deltas))


def complete_to_critical(g: Graph) -> Graph:
    """Grow G into an edge-critical supergraph with the same gamma_tR.

    Repeatedly scans the non-edges in lexicographic order and adds the
    first one whose delta is 0, until every remaining non-edge is
    critical.  Requires gamma_tR(G) >= 4: below that the value would
    collapse to 3 before criticality is reached.
    """
    if g.has_isolated_vertices():
        raise IsolatedVertexError("completion needs a graph without isolated vertices")
    base = gamma_tr_value(g)
    if base < 4:
        raise ValueTooSmallError(f"completion requires gamma_tR >= 4, got {base}")
    current = g
    while True:
        for u, v in current.non_edges():
            if gamma_tr_value(add_edge(current, u, v)) == base:
                current = add_edge(current, u, v)
                break
        else:
            return current


def gamma_t_edge_delta(g: Graph, u: int, v: int) -> int:
    """gamma_t(G) - gamma_t(G+uv), the total-domination analogue."""
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or g.has_edge(u, v):
        raise NotANonEdgeError(f"({u}, {v}) is not a non-edge")
    return gamma_t_value(g) - gamma_t_value(add_edge(g, u, v))


def is_k_gamma_t_edge_critical(g: Graph, k: int) -> bool:
    """gamma_t(G) = k and every non-edge strictly lowers gamma_t."""
    if g.has_isolated_vertices():
        raise IsolatedVertexError("gamma_t criticality needs no isolated vertices")
    non_edges = g.non_edges()
    if not non_edges or gamma_t_value(g) != k:
        return False
    return all(gamma_t_value(add_edge(g, u, v)) < k for u, v in non_edges)
