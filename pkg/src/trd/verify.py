"""Theorem registry, instance universes, and counterexample hunts.

Every claim the workbench can machine-check is a registry entry: an
identifier, a default instance universe, a hypothesis filter, and a
per-instance check returning a violation detail or None.  Reports are
deterministic: the same universe and theorem always produce the same
bytes.  A passing report over a bounded universe is evidence, not proof;
a failing one carries graph6 certificates.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Union

from . import families as fam
from .criticality import (
    complete_to_critical,
    edge_profile,
    is_k_gamma_t_edge_critical,
)
from .errors import (
    IncompatibleUniverseError,
    UniverseTooLargeError,
    UnknownQuestionError,
    UnknownTheoremError,
)
from .graphs import (
    Graph,
    add_edge,
    complement,
    component_masks,
    from_edge_mask,
    graph6_decode,
    graph6_encode,
    is_connected,
    iter_bits,
    metrics,
    pair_table,
)
from .solver import (
    ENUMERATION_MAX_N,
    dead_vertices,
    enumerate_min_trd,
    gamma_r_value,
    gamma_t_value,
    gamma_tr_equals_order,
    gamma_tr_value,
    gamma_value,
    has_trd_weight_at_most,
)

ALL_LABELED_CEILING = 7


@dataclass(frozen=True)
class AllLabeled:
    """Every labelled graph on 1..max_n vertices, optionally filtered."""

    max_n: int
    connected_only: bool = False
    no_isolated: bool = True


@dataclass(frozen=True)
class Families:
    """A fixed list of family descriptors."""

    specs: tuple[fam.FamilySpec, ...]


@dataclass(frozen=True)
class RandomGnp:
    """``count`` seeded G(n, p) samples; fully determined by the seed."""

    count: int
    n: int
    p: float
    seed: int


InstanceUniverse = Union[AllLabeled, Families, RandomGnp]


def universe_to_json(universe: InstanceUniverse) -> dict:
    if isinstance(universe, AllLabeled):
        return {
            "source": "all_labeled",
            "max_n": universe.max_n,
            "connected_only": universe.connected_only,
            "no_isolated": universe.no_isolated,
        }
    if isinstance(universe, Families):
        return {
            "source": "families",
            "specs": [fam.family_to_text(s) for s in universe.specs],
        }
    if isinstance(universe, RandomGnp):
        return {
            "source": "random_gnp",
            "count": universe.count,
            "n": universe.n,
            "p": universe.p,
            "seed": universe.seed,
        }
    raise TypeError(f"not a universe: {universe!r}")


def enumerate_instances(
    universe: InstanceUniverse,
) -> Iterator[tuple[fam.FamilySpec | None, Graph]]:
    """Stream (descriptor, graph) pairs; the descriptor is None unless the
    universe is family-based.  Deterministic order throughout."""
    if isinstance(universe, AllLabeled):
        if not 1 <= universe.max_n <= ALL_LABELED_CEILING:
            raise UniverseTooLargeError(
                f"all-labelled enumeration is capped at n <= {ALL_LABELED_CEILING}"
            )
        for n in range(1, universe.max_n + 1):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = from_edge_mask(n, mask)
                if universe.no_isolated and g.has_isolated_vertices():
                    continue
                if universe.connected_only and not is_connected(g):
                    continue
                yield None, g
        return
    if isinstance(universe, Families):
        for spec in universe.specs:
            yield spec, fam.generate(spec)
        return
    if isinstance(universe, RandomGnp):
        rng = random.Random(universe.seed)
        pairs = pair_table(universe.n)
        for _ in range(universe.count):
            mask = 0
            for k in range(len(pairs)):
                if rng.random() < universe.p:
                    mask |= 1 << k
            yield None, from_edge_mask(universe.n, mask)
        return
    raise TypeError(f"not a universe: {universe!r}")


def enumerate_graphs(universe: InstanceUniverse) -> Iterator[Graph]:
    for _, g in enumerate_instances(universe):
        yield g


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    universe: InstanceUniverse
    instances_checked: int
    outcome: str  # "pass" or "fail"
    counterexamples: tuple[Counterexample, ...]

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "universe": universe_to_json(self.universe),
            "instances_checked": self.instances_checked,
            "outcome": self.outcome,
            "counterexamples": [
                {"graph6": c.graph6, "detail": c.detail}
                for c in self.counterexamples
            ],
        }


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json())


MAX_COUNTEREXAMPLES = 20


# ---------------------------------------------------------------------------
# helper predicates shared by several checks


def _edge_is_critical(g: Graph, base: int, u: int, v: int) -> bool:
    h = add_edge(g, u, v)
    if h.n <= 6:
        return gamma_tr_value(h) < base
    return has_trd_weight_at_most(h, base - 1)


def _measured_edge_critical(g: Graph) -> bool:
    non_edges = g.non_edges()
    if not non_edges:
        return False
    base = gamma_tr_value(g)
    return all(_edge_is_critical(g, base, u, v) for u, v in non_edges)


def _measured_stable(g: Graph) -> bool:
    non_edges = g.non_edges()
    if not non_edges:
        return False
    base = gamma_tr_value(g)
    return not any(_edge_is_critical(g, base, u, v) for u, v in non_edges)


def _measured_supercritical(g: Graph) -> bool:
    non_edges = g.non_edges()
    if not non_edges:
        return False
    base = gamma_tr_value(g)
    return all(
        gamma_tr_value(add_edge(g, u, v)) == base - 2 for u, v in non_edges
    )


def _has_universal_vertex(g: Graph) -> bool:
    return any(d == g.n - 1 for d in g.degrees)


def _is_union_of_k2(g: Graph) -> bool:
    return all(d == 1 for d in g.degrees)


def _is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def _endpath_leaves(g: Graph) -> list[tuple[int, int]]:
    """(leaf, endpath length) for each leaf whose chain ends at a branch
    vertex; the chain's internal vertices all have degree 2."""
    out = []
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        prev, cur = leaf, g.adj[leaf].bit_length() - 1
        length = 1
        while g.degree(cur) == 2:
            nxt_mask = g.adj[cur] & ~(1 << prev)
            prev, cur = cur, nxt_mask.bit_length() - 1
            length += 1
        if g.degree(cur) >= 3:
            out.append((leaf, length))
    return out


# ---------------------------------------------------------------------------
# per-theorem checks: return None on pass, a detail string on violation


def _check_myn1(g: Graph, spec) -> str | None:
    base = gamma_t_value(g)
    for u, v in g.non_edges():
        after = gamma_t_value(add_edge(g, u, v))
        if not base - 2 <= after <= base:
            return f"gamma_t delta {base - after} outside 0..2 at edge ({u},{v})"
    return None


def _check_bounds(g: Graph, spec) -> str | None:
    base = gamma_tr_value(g)
    for u, v in g.non_edges():
        after = gamma_tr_value(add_edge(g, u, v))
        if not base - 2 <= after <= base:
            return f"gamma_tR delta {base - after} outside 0..2 at edge ({u},{v})"
    return None


_ALLOWED_CRITICAL_PAIRS = {(2, 2), (1, 2), (0, 2), (1, 1)}


def _check_critedge_values(g: Graph, spec) -> str | None:
    base = gamma_tr_value(g)
    for u, v in g.non_edges():
        h = add_edge(g, u, v)
        if gamma_tr_value(h) >= base:
            continue
        minimums = enumerate_min_trd(h)
        for f in minimums:
            pair = tuple(sorted((f.values[u], f.values[v])))
            if pair not in _ALLOWED_CRITICAL_PAIRS:
                return (
                    f"critical edge ({u},{v}): minimum function assigns {pair}"
                )
        if g.degree(u) == 1 and g.degree(v) == 1:
            if not any(f.values[u] == 1 and f.values[v] == 1 for f in minimums):
                return (
                    f"degree-1 endpoints ({u},{v}) admit no minimum function"
                    " with both weights 1"
                )
    return None


def _check_tr3(g: Graph, spec) -> str | None:
    value_is_3 = gamma_tr_value(g) == 3
    universal = _has_universal_vertex(g)
    if value_is_3 != universal:
        return f"gamma_tR==3 is {value_is_3} but universal vertex is {universal}"
    return None


def _check_hen1(g: Graph, spec) -> str | None:
    classified = fam.hen1_classify(g) is not None
    full_value = gamma_tr_equals_order(g)
    if classified != full_value:
        return f"classified={classified} but gamma_tR==n is {full_value}"
    return None


def _check_ncrit(g: Graph, spec) -> str | None:
    predicted = fam.predict_n_critical(g)
    if gamma_tr_equals_order(g):
        non_edges = g.non_edges()
        measured = bool(non_edges) and all(
            _edge_is_critical(g, g.n, u, v) for u, v in non_edges
        )
    else:
        measured = False
    if predicted != measured:
        return f"predicted={predicted} but measured criticality is {measured}"
    return None


def _check_4crit(g: Graph, spec) -> str | None:
    lhs = gamma_tr_value(g) == 4 and _measured_edge_critical(g)
    rhs = fam.is_galaxy(complement(g))
    if lhs != rhs:
        return f"4-edge-critical is {lhs} but complement-galaxy is {rhs}"
    return None


def _check_n3reg(g: Graph, spec) -> str | None:
    value = gamma_tr_value(g)
    if value != 4:
        return f"gamma_tR={value}, expected 4"
    if not _measured_stable(g):
        return "not stable: some non-edge changes gamma_tR"
    return None


def _check_super(g: Graph, spec) -> str | None:
    if gamma_tr_value(g) == 5 and _measured_supercritical(g):
        return "supercritical graph with gamma_tR=5"
    if fam.is_union_of_completes(g, min_parts=2, min_order=3):
        k = len(component_masks(g))
        value = gamma_tr_value(g)
        if value != 3 * k:
            return f"union of {k} complete graphs has gamma_tR={value}, not {3 * k}"
        if not _measured_supercritical(g):
            return f"union of {k} complete graphs is not supercritical"
    return None


def _check_hen2(g: Graph, spec) -> str | None:
    gt = gamma_t_value(g)
    gtr = gamma_tr_value(g)
    if not gt <= gtr <= 2 * gt:
        return f"gamma_t={gt}, gamma_tR={gtr} outside [gamma_t, 2 gamma_t]"
    equality = gtr == gt
    k2_union = _is_union_of_k2(g)
    if equality != k2_union:
        return f"gamma_tR==gamma_t is {equality} but union-of-K2 is {k2_union}"
    return None


def _check_hen3(g: Graph, spec) -> str | None:
    lhs = gamma_tr_value(g) == gamma_t_value(g) + 1
    rhs = _has_universal_vertex(g)
    if lhs != rhs:
        return f"gamma_tR==gamma_t+1 is {lhs} but universal vertex is {rhs}"
    return None


def _check_obs1(g: Graph, spec) -> str | None:
    gt = gamma_t_value(g)
    gtr = gamma_tr_value(g)
    if not gt + 2 <= gtr <= 2 * gt:
        return f"gamma_t={gt}, gamma_tR={gtr} outside [gamma_t+2, 2 gamma_t]"
    return None


def _check_t2iff(g: Graph, spec) -> str | None:
    gtr = gamma_tr_value(g)
    gt = gamma_t_value(g)
    if (gtr in (3, 4)) != (gt == 2):
        return f"gamma_tR={gtr} but gamma_t={gt}"
    if gtr == 3 and gamma_value(g) != 1:
        return f"gamma_tR=3 but gamma={gamma_value(g)}"
    if gtr == 4 and gamma_value(g) != 2:
        return f"gamma_tR=4 but gamma={gamma_value(g)}"
    return None


def _check_5crit(g: Graph, spec) -> str | None:
    if gamma_tr_value(g) != 5 or not _measured_edge_critical(g):
        return None
    if is_k_gamma_t_edge_critical(g, 3):
        return None
    comps = component_masks(g)
    if len(comps) == 2:
        orders = sorted(m.bit_count() for m in comps)
        complete = all(
            all(g.degree(v) == m.bit_count() - 1 for v in iter_bits(m))
            for m in comps
        )
        if complete and orders[0] == 2 and orders[1] >= 3:
            return None
    return "5-edge-critical but neither 3-gamma_t-edge-critical nor K_2 u K_m"


def _check_enddeg3(g: Graph, spec) -> str | None:
    for w in range(g.n):
        if g.degree(w) != 1:
            continue
        x = g.adj[w].bit_length() - 1
        others = [u for u in iter_bits(g.adj[x]) if u != w]
        pairs = [
            (u, v)
            for i, u in enumerate(others)
            for v in others[i + 1:]
            if not g.has_edge(u, v)
        ]
        if not pairs:
            continue  # neighbourhood minus the leaf is complete
        base = gamma_tr_value(g)
        for u, v in pairs:
            if gamma_tr_value(add_edge(g, u, v)) != base:
                return (
                    f"support {x} of leaf {w}: non-edge ({u},{v}) inside its"
                    " neighbourhood changes gamma_tR"
                )
        if _measured_edge_critical(g):
            return f"edge-critical despite leaf {w} with non-complete N({x})-w"
    return None


def _check_stems(g: Graph, spec) -> str | None:
    stems = {g.adj[v].bit_length() - 1 for v in range(g.n) if g.degree(v) == 1}
    if all(g.degree(s) <= 2 for s in stems):
        return None
    if _measured_edge_critical(g):
        return "edge-critical tree with a stem of degree >= 3"
    return None


def _check_longlegs(g: Graph, spec) -> str | None:
    long_ends = [(leaf, ln) for leaf, ln in _endpath_leaves(g) if ln >= 3]
    if len(long_ends) < 2:
        return None
    base = gamma_tr_value(g)
    u, v = long_ends[0][0], long_ends[1][0]
    if gamma_tr_value(add_edge(g, u, v)) != base:
        return f"joining long-endpath leaves ({u},{v}) changed gamma_tR"
    if _measured_edge_critical(g):
        return "edge-critical despite two endpaths of length >= 3"
    return None


def _check_spider_formula(g: Graph, spec) -> str | None:
    predicted = fam.spider_gamma_formula(spec.legs)
    actual = gamma_tr_value(g)
    if predicted != actual:
        return f"formula gives {predicted} but solver gives {actual}"
    return None


def _check_spider_crit(g: Graph, spec) -> str | None:
    predicted = fam.spider_is_critical(spec.legs)
    measured = _measured_edge_critical(g)
    if predicted != measured:
        return f"predicate says {predicted} but measured criticality is {measured}"
    return None


def _check_span(g: Graph, spec) -> str | None:
    base = gamma_tr_value(g)
    h = complete_to_critical(g)
    after = gamma_tr_value(h)
    if after != base:
        return f"completion changed gamma_tR from {base} to {after}"
    if not _measured_edge_critical(h):
        return "completion is not edge-critical"
    return None


def _check_knkm(g: Graph, spec) -> str | None:
    expected = 2 * min(spec.n, spec.m)
    actual = gamma_tr_value(g)
    if actual != expected:
        return f"gamma_tR={actual}, expected {expected}"
    return None


def _check_diam2(g: Graph, spec) -> str | None:
    if isinstance(spec, fam.ProductDeleted):
        expected = 2 * spec.l + 1
        run_completion = spec.l == 2
    else:
        expected = 2 * min(spec.n, spec.m)
        run_completion = spec.n == spec.m
    actual = gamma_tr_value(g)
    if actual != expected:
        return f"gamma_tR={actual}, expected {expected}"
    if metrics(g).diameter != 2:
        return f"diameter {metrics(g).diameter}, expected 2"
    if run_completion:
        h = complete_to_critical(g)
        if gamma_tr_value(h) != expected:
            return "completion changed gamma_tR"
        if not _measured_edge_critical(h):
            return "completion is not edge-critical"
        if metrics(h).diameter != 2:
            return f"completion has diameter {metrics(h).diameter}"
    return None


def _check_dn(g: Graph, spec) -> str | None:
    expected = 2 * spec.n + 1
    actual = gamma_tr_value(g)
    if actual != expected:
        return f"gamma_tR={actual}, expected {expected}"
    dead = dead_vertices(g, "total-roman")
    w = fam.dead_example_w_vertices(spec.n)
    if dead != w:
        return f"dead set {dead}, expected {w}"
    return None


def _check_dn_edges(g: Graph, spec) -> str | None:
    w = set(fam.dead_example_w_vertices(spec.n))
    base = gamma_tr_value(g)
    if spec.n == 2:
        w1, w2 = sorted(w)
        after = gamma_tr_value(add_edge(g, w1, w2))
        if after != base:
            return f"joining the two degree-2 rim vertices changed {base}->{after}"
        return None
    for u, v in g.non_edges():
        if u in w or v in w:
            if gamma_tr_value(add_edge(g, u, v)) >= base:
                return f"non-edge ({u},{v}) at a dead vertex is not critical"
    return None


def _check_rd_deadpair(g: Graph, spec) -> str | None:
    dead = dead_vertices(g, "roman")
    if len(dead) < 2:
        return None
    base = gamma_r_value(g)
    for i, u in enumerate(dead):
        for v in dead[i + 1:]:
            if g.has_edge(u, v):
                continue
            after = gamma_r_value(add_edge(g, u, v))
            if after != base:
                return f"dead pair ({u},{v}): gamma_R changed {base}->{after}"
    return None


# ---------------------------------------------------------------------------
# the registry


@dataclass(frozen=True)
class TheoremEntry:
    theorem_id: str
    title: str
    default_universe: InstanceUniverse
    check: Callable[[Graph, fam.FamilySpec | None], str | None]
    hypothesis: Callable[[Graph], bool] | None = None
    family_kinds: tuple[type, ...] | None = None  # required descriptor types


def _no_isolated(g: Graph) -> bool:
    return not g.has_isolated_vertices()


def _connected_no_isolated(min_n: int) -> Callable[[Graph], bool]:
    def hyp(g: Graph) -> bool:
        return g.n >= min_n and _no_isolated(g) and is_connected(g)

    return hyp


def _all6(connected: bool = False) -> AllLabeled:
    return AllLabeled(6, connected_only=connected, no_isolated=True)


_SPIDER_CORPUS = tuple(
    fam.Spider(legs)
    for k in (3, 4)
    for legs in itertools.combinations_with_replacement(range(1, 5), k)
)

_LONGLEG_CORPUS = (
    fam.Spider((1, 3, 3)),
    fam.Spider((2, 3, 3)),
    fam.Spider((3, 3, 3)),
    fam.Spider((2, 3, 4)),
    fam.Spider((1, 1, 3, 3)),
    fam.Spider((2, 2, 3, 4)),
)


def _entries() -> list[TheoremEntry]:
    return [
        TheoremEntry(
            "T_MYN1",
            "adding an edge changes gamma_t by at most 2, never upward",
            AllLabeled(5),
            _check_myn1,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_BOUNDS",
            "adding an edge changes gamma_tR by at most 2, never upward",
            AllLabeled(5),
            _check_bounds,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_CRITEDGE_VALUES",
            "minimum functions pin critical-edge endpoints to the four value sets",
            AllLabeled(5),
            _check_critedge_values,
            hypothesis=lambda g: _no_isolated(g) and g.n + 1 <= ENUMERATION_MAX_N,
        ),
        TheoremEntry(
            "T_TR3",
            "gamma_tR = 3 exactly on graphs with a universal vertex",
            _all6(),
            _check_tr3,
            hypothesis=lambda g: g.n >= 3 and _no_isolated(g),
        ),
        TheoremEntry(
            "T_HEN1",
            "gamma_tR = n exactly on the classified connected families",
            _all6(connected=True),
            _check_hen1,
            hypothesis=_connected_no_isolated(2),
        ),
        TheoremEntry(
            "T_NCRIT",
            "n-edge-critical graphs are exactly the predicted families",
            _all6(connected=True),
            _check_ncrit,
            hypothesis=_connected_no_isolated(4),
        ),
        TheoremEntry(
            "T_4CRIT",
            "4-edge-critical graphs are exactly those with galaxy complements",
            _all6(),
            _check_4crit,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_N3REG",
            "(n-3)-regular graphs of order >= 6 have gamma_tR = 4 and are stable",
            _all6(),
            _check_n3reg,
            hypothesis=lambda g: g.n >= 6
            and all(d == g.n - 3 for d in g.degrees),
        ),
        TheoremEntry(
            "T_MYN2_ANALOGUE",
            "no 5-supercritical graphs; unions of >=2 complete graphs of order"
            " >=3 are 3k-supercritical",
            _all6(),
            _check_super,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_HEN2",
            "gamma_t <= gamma_tR <= 2 gamma_t with equality only on unions of K_2",
            _all6(),
            _check_hen2,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_HEN3",
            "gamma_tR = gamma_t + 1 exactly on graphs with a universal vertex",
            _all6(connected=True),
            _check_hen3,
            hypothesis=_connected_no_isolated(3),
        ),
        TheoremEntry(
            "T_OBS1",
            "without a universal vertex, gamma_t + 2 <= gamma_tR <= 2 gamma_t",
            _all6(connected=True),
            _check_obs1,
            hypothesis=lambda g: g.n >= 3
            and is_connected(g)
            and _no_isolated(g)
            and max(g.degrees) <= g.n - 2,
        ),
        TheoremEntry(
            "T_T2IFF",
            "gamma_tR in {3,4} exactly when gamma_t = 2, with gamma 1 resp. 2",
            _all6(connected=True),
            _check_t2iff,
            hypothesis=_connected_no_isolated(3),
        ),
        TheoremEntry(
            "T_5CRIT",
            "5-edge-critical graphs are 3-gamma_t-edge-critical or K_2 u K_m",
            _all6(),
            _check_5crit,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_ENDDEG3",
            "a leaf whose support has a non-complete punctured neighbourhood"
            " blocks edge-criticality",
            _all6(),
            _check_enddeg3,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_STEMS",
            "edge-critical trees have no stems of degree >= 3",
            _all6(connected=True),
            _check_stems,
            hypothesis=lambda g: g.n >= 2 and _no_isolated(g) and _is_tree(g),
        ),
        TheoremEntry(
            "T_LONGLEGS",
            "two endpaths of length >= 3 block edge-criticality",
            Families(_LONGLEG_CORPUS),
            _check_longlegs,
            hypothesis=_no_isolated,
        ),
        TheoremEntry(
            "T_SPIDER_FORMULA",
            "the three-case spider formula matches the solver",
            Families(_SPIDER_CORPUS),
            _check_spider_formula,
            family_kinds=(fam.Spider,),
        ),
        TheoremEntry(
            "T_SPIDER_CRIT",
            "the leg-pattern predicate matches measured spider criticality",
            Families(_SPIDER_CORPUS),
            _check_spider_crit,
            family_kinds=(fam.Spider,),
        ),
        TheoremEntry(
            "T_SPAN",
            "completion preserves gamma_tR >= 4 and reaches edge-criticality",
            AllLabeled(5),
            _check_span,
            hypothesis=lambda g: _no_isolated(g) and gamma_tr_value(g) >= 4,
        ),
        TheoremEntry(
            "T_KNKM",
            "gamma_tR of the rook's graph K_n x K_m is 2 min(n, m)",
            Families(
                tuple(
                    fam.CartesianComplete(n, m)
                    for n in (2, 3, 4)
                    for m in (2, 3, 4)
                    if n <= m
                )
            ),
            _check_knkm,
            family_kinds=(fam.CartesianComplete,),
        ),
        TheoremEntry(
            "T_DIAM2",
            "diameter-2 edge-critical graphs exist for every value >= 4",
            Families(
                (
                    fam.CartesianComplete(2, 2),
                    fam.CartesianComplete(3, 3),
                    fam.ProductDeleted(2),
                    fam.ProductDeleted(3),
                )
            ),
            _check_diam2,
            family_kinds=(fam.CartesianComplete, fam.ProductDeleted),
        ),
        TheoremEntry(
            "T_DN",
            "the shared-vertex K_4-e chain has gamma_tR = 2n+1 with dead rim"
            " vertices",
            Families((fam.DeadExample(2), fam.DeadExample(3), fam.DeadExample(4))),
            _check_dn,
            family_kinds=(fam.DeadExample,),
        ),
        TheoremEntry(
            "T_DN_EDGES",
            "for n >= 3 every non-edge at a dead rim vertex is critical",
            Families((fam.DeadExample(2), fam.DeadExample(3), fam.DeadExample(4))),
            _check_dn_edges,
            family_kinds=(fam.DeadExample,),
        ),
        TheoremEntry(
            "T_RD_DEADPAIR",
            "joining two Roman-dead vertices never changes gamma_R",
            AllLabeled(5),
            _check_rd_deadpair,
            hypothesis=_no_isolated,
        ),
    ]


THEOREMS: dict[str, TheoremEntry] = {e.theorem_id: e for e in _entries()}

_PARALLEL_WINDOW = 2048


def parallel_map(fn, items: Iterable, jobs: int = 1) -> Iterator:
    """Ordered map, optionally spread over a process pool.

    Results always arrive in input order, so output never depends on the
    number of workers.  Submission is windowed to keep memory bounded on
    very large streams.
    """
    if jobs <= 1:
        for item in items:
            yield fn(item)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        it = iter(items)
        while True:
            chunk = list(itertools.islice(it, _PARALLEL_WINDOW))
            if not chunk:
                return
            size = max(1, len(chunk) // (4 * jobs))
            yield from pool.map(fn, chunk, chunksize=size)


def _check_worker(args: tuple[str, str | None, str]) -> str | None:
    check_id, spec_text, g6 = args
    spec = fam.parse_family(spec_text) if spec_text is not None else None
    entry = THEOREMS.get(check_id)
    check = entry.check if entry is not None else _QUESTION_CHECKS[check_id]
    return check(graph6_decode(g6), spec)


def _filtered_instances(entry: TheoremEntry, universe: InstanceUniverse):
    for spec, g in enumerate_instances(universe):
        if entry.family_kinds is not None and not isinstance(
            spec, entry.family_kinds
        ):
            continue
        if entry.hypothesis is not None and not entry.hypothesis(g):
            continue
        yield spec, g


def _collect(
    theorem_id: str,
    universe: InstanceUniverse,
    instances,
    evaluate,
    jobs: int,
) -> VerificationReport:
    checked = 0
    counterexamples: list[Counterexample] = []
    if jobs <= 1:
        for spec, g in instances:
            checked += 1
            detail = evaluate(g, spec)
            if detail is not None and len(counterexamples) < MAX_COUNTEREXAMPLES:
                prefix = f"{fam.family_to_text(spec)}: " if spec is not None else ""
                counterexamples.append(
                    Counterexample(graph6_encode(g), prefix + detail)
                )
    else:
        payloads = (
            (
                theorem_id,
                fam.family_to_text(spec) if spec is not None else None,
                graph6_encode(g),
            )
            for spec, g in instances
        )
        it = iter(payloads)
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            while True:
                chunk = list(itertools.islice(it, _PARALLEL_WINDOW))
                if not chunk:
                    break
                size = max(1, len(chunk) // (4 * jobs))
                for payload, detail in zip(
                    chunk, pool.map(_check_worker, chunk, chunksize=size)
                ):
                    checked += 1
                    if detail is not None and len(counterexamples) < MAX_COUNTEREXAMPLES:
                        prefix = f"{payload[1]}: " if payload[1] is not None else ""
                        counterexamples.append(
                            Counterexample(payload[2], prefix + detail)
                        )
    return VerificationReport(
        theorem_id,
        universe,
        checked,
        "pass" if not counterexamples else "fail",
        tuple(counterexamples),
    )


def verify_theorem(
    theorem_id: str,
    universe: InstanceUniverse | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Evaluate one registered claim over a universe (default: its own)."""
    entry = THEOREMS.get(theorem_id)
    if entry is None:
        raise UnknownTheoremError(theorem_id)
    if universe is None:
        universe = entry.default_universe
    if entry.family_kinds is not None and not isinstance(universe, Families):
        raise IncompatibleUniverseError(
            f"{theorem_id} needs a family universe carrying "
            f"{'/'.join(k.__name__ for k in entry.family_kinds)} descriptors"
        )
    return _collect(
        theorem_id,
        universe,
        _filtered_instances(entry, universe),
        entry.check,
        jobs,
    )


def run_registry(
    universe_overrides: dict[str, InstanceUniverse] | None = None,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run every registered theorem at its default universe."""
    overrides = universe_overrides or {}
    return [
        verify_theorem(tid, overrides.get(tid), jobs=jobs)
        for tid in sorted(THEOREMS)
    ]


def _hunt_q1(g: Graph, spec) -> str | None:
    if _measured_supercritical(g) and not fam.is_union_of_completes(
        g, min_parts=2, min_order=3
    ):
        return (
            f"supercritical with gamma_tR={gamma_tr_value(g)} but not a union"
            " of complete graphs of order >= 3"
        )
    return None


def _hunt_q2(g: Graph, spec) -> str | None:
    if _measured_edge_critical(g):
        dead = dead_vertices(g, "total-roman")
        if dead:
            return (
                f"edge-critical with dead vertices {dead} at"
                f" gamma_tR={gamma_tr_value(g)}"
            )
    return None


_QUESTION_CHECKS: dict[str, Callable[[Graph, fam.FamilySpec | None], str | None]] = {
    "Q1_supercritical": _hunt_q1,
    "Q2_dead_in_critical": _hunt_q2,
}

QUESTIONS = tuple(sorted(_QUESTION_CHECKS))


def hunt_counterexamples(
    question_id: str,
    universe: InstanceUniverse | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Search a universe for counterexamples to the open questions.

    Q1_supercritical: a supercritical graph that is not a disjoint union
    of two or more complete graphs of order >= 3.  Q2_dead_in_critical:
    an edge-critical graph with a nonempty dead-vertex set.  A passing
    report means only that the bounded universe holds no counterexample.
    """
    check = _QUESTION_CHECKS.get(question_id)
    if check is None:
        raise UnknownQuestionError(question_id)
    if universe is None:
        universe = _all6()
    instances = (
        (spec, g)
        for spec, g in enumerate_instances(universe)
        if not g.has_isolated_vertices()
    )
    return _collect(question_id, universe, instances, check, jobs)
