"""Exact solvers for the domination invariants gamma, gamma_t, gamma_R, gamma_tR.

The central piece is a branch-and-bound search over partial weight
assignments f: V -> {0, 1, 2}.  It branches on an unsatisfied vertex of
maximum degree, trying the values 2, then 1, then 0; the 0 branch is
expanded over the choices of lowest-index neighbour that will carry the
required 2, so every level of the tree satisfies at least one new vertex.
The same engine serves Roman domination (total condition disabled) and
supports pinned vertex values, which is how dead vertices and the
lexicographically smallest witness are computed.

A deliberately independent oracle, :func:`brute_oracle_gamma_tr`, scans all
3^n weight vectors and shares nothing with the branch-and-bound path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    GraphTooLargeError,
    IsolatedVertexError,
    LengthMismatchError,
    OutOfRangeError,
    TooSmallError,
)
from .graphs import Graph, iter_bits

SOLVER_MAX_N = 24
ENUMERATION_MAX_N = 12
_VALUE_CACHE_MAX_N = 6
_ORDER_CACHE_N = 7


@dataclass(frozen=True)
class WeightFunction:
    """An assignment f: V -> {0, 1, 2} stored as a value tuple."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, x in enumerate(self.values):
            if x not in (0, 1, 2):
                raise OutOfRangeError(f"weight {x} at vertex {v} not in {{0,1,2}}")

    @property
    def weight(self) -> int:
        return sum(self.values)

    def level_set(self, level: int) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.values) if x == level)

    @property
    def v0(self) -> tuple[int, ...]:
        return self.level_set(0)

    @property
    def v1(self) -> tuple[int, ...]:
        return self.level_set(1)

    @property
    def v2(self) -> tuple[int, ...]:
        return self.level_set(2)

    @property
    def v_plus(self) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.values) if x > 0)


@dataclass(frozen=True)
class TrdVerdict:
    """Validity verdict with the first violating vertex and condition."""

    valid: bool
    vertex: int | None = None
    condition: str | None = None  # "roman" or "total"

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class SolveResult:
    invariant: str
    value: int
    witness: WeightFunction
    nodes_explored: int


def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertices():
        raise IsolatedVertexError(
            f"isolated vertices {tuple(iter_bits(g.isolated_mask()))} present"
        )


def is_trd_function(g: Graph, f: WeightFunction) -> TrdVerdict:
    """Check the two TRD conditions, reporting the first violating vertex."""
    if len(f.values) != g.n:
        raise LengthMismatchError(f"function length {len(f.values)} != order {g.n}")
    two = 0
    pos = 0
    for v, x in enumerate(f.values):
        if x == 2:
            two |= 1 << v
        if x > 0:
            pos |= 1 << v
    for v, x in enumerate(f.values):
        if x == 0:
            if not g.adj[v] & two:
                return TrdVerdict(False, v, "roman")
        else:
            if not g.adj[v] & pos:
                return TrdVerdict(False, v, "total")
    return TrdVerdict(True)


class _WeightSearch:
    """Branch-and-bound minimiser for RD/TRD-function weight."""

    __slots__ = (
        "n", "adj", "full", "deg", "total", "budget",
        "nodes", "best", "cap", "first_hit", "done",
    )

    def __init__(self, g: Graph, total: bool, node_budget: int | None = None):
        self.n = g.n
        self.adj = g.adj
        self.full = g.full_mask
        self.deg = [a.bit_count() for a in g.adj]
        self.total = total
        self.budget = node_budget
        self.nodes = 0

    def solve(
        self,
        forced: dict[int, int] | None = None,
        target_cap: int | None = None,
        first_hit: bool = False,
        seed_upper: int | None = None,
    ) -> int | None:
        """Minimum feasible weight not exceeding ``target_cap``, else None.

        ``seed_upper`` is the weight of a known feasible assignment; only
        strictly better assignments are searched and the seed is returned
        when nothing beats it.  With ``first_hit`` the search stops at the
        first assignment within the cap (the result is then only an upper
        bound, suitable for yes/no questions).
        """
        cap = 2 * self.n if target_cap is None else target_cap
        if cap < 0:
            return None
        if seed_upper is not None and seed_upper <= cap:
            if first_hit:
                return seed_upper
            self.best = seed_upper
        else:
            self.best = cap + 1
        self.cap = cap
        self.first_hit = first_hit
        self.done = False
        assigned = two = pos = sat = 0
        weight = 0
        if forced:
            for v, val in forced.items():
                bv = 1 << v
                assigned |= bv
                if val == 2:
                    two |= bv
                    pos |= bv
                    sat |= self.adj[v] | bv
                    weight += 2
                elif val == 1:
                    pos |= bv
                    sat |= bv
                    weight += 1
                elif val != 0:
                    raise OutOfRangeError(f"pinned weight {val} not in {{0,1,2}}")
        self._rec(assigned, two, pos, 0, sat, weight)
        return self.best if self.best <= cap else None

    def _bound(self, undom: int, unassigned: int, not2: int) -> int:
        # Admissible completion bound: a future 2 at w satisfies at most
        # |N(w) & undom| (+1 if w is itself unsatisfied) vertices for cost 2,
        # a future 1 satisfies one vertex for cost 1.
        adj = self.adj
        counts = []
        m = unassigned & ~not2
        while m:
            low = m & -m
            w = low.bit_length() - 1
            c = (adj[w] & undom).bit_count()
            if undom & low:
                c += 1
            if c > 1:
                counts.append(c)
            m ^= low
        remaining = undom.bit_count()
        cost = 0
        if counts:
            counts.sort(reverse=True)
            for c in counts:
                # a further 2 only beats finishing with 1s while it can
                # still satisfy two or more vertices
                if remaining < 2:
                    break
                remaining -= c
                cost += 2
        return cost + max(remaining, 0)

    def _rec(self, assigned, two, pos, not2, sat, weight):
        if self.done:
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(f"node budget {self.budget} exhausted")
        undom = self.full & ~sat
        unassigned = self.full & ~assigned
        adj = self.adj
        if undom:
            if weight + self._bound(undom, unassigned, not2) >= self.best:
                return
            # branch vertex: unsatisfied, maximum degree, lowest index
            v = -1
            dbest = -1
            m = undom
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if self.deg[u] > dbest:
                    dbest = self.deg[u]
                    v = u
                m ^= low
            bv = 1 << v
            adjv = adj[v]
            if unassigned & bv:
                if not not2 & bv:
                    self._rec(assigned | bv, two | bv, pos | bv, not2,
                              sat | adjv | bv, weight + 2)
                    if self.done:
                        return
                self._rec(assigned | bv, two, pos | bv, not2, sat | bv, weight + 1)
                if self.done:
                    return
                helpers = adjv & unassigned & ~not2 & ~bv
            else:
                helpers = adjv & unassigned & ~not2
                bv = 0  # already assigned 0 via pins; only cover branches apply
            excl = 0
            while helpers:
                low = helpers & -helpers
                w = low.bit_length() - 1
                self._rec(assigned | bv | low, two | low, pos | low, not2 | excl,
                          sat | adj[w] | low, weight + 2)
                if self.done:
                    return
                excl |= low
                helpers ^= low
            return
        if self.total:
            lone = 0
            m = pos
            while m:
                low = m & -m
                if not adj[low.bit_length() - 1] & pos:
                    lone |= low
                m ^= low
            if lone:
                if weight + 1 >= self.best:
                    return
                v = (lone & -lone).bit_length() - 1
                helpers = adj[v] & unassigned
                excl = 0
                while helpers:
                    low = helpers & -helpers
                    self._rec(assigned | excl | low, two, pos | low, not2,
                              sat, weight + 1)
                    if self.done:
                        return
                    excl |= low
                    helpers ^= low
                return
        if weight < self.best:
            self.best = weight
            if self.first_hit and weight <= self.cap:
                self.done = True


def _trd_probe(g: Graph) -> int:
    """Weight of a cheap feasible TRD-function found by direct construction.

    Candidates: a 2 on a dominating vertex with a 1 on one neighbour, a
    2,2 pair on an edge whose closed neighbourhoods cover V, and the
    all-ones function.  Each candidate is checked against the TRD
    conditions directly, so the result is always an achieved weight.
    """
    full = g.full_mask
    best = g.n  # all-ones is a TRD-function whenever no vertex is isolated
    for v in range(g.n):
        if g.adj[v] and g.adj[v] | (1 << v) == full:
            return min(best, 3)
    if best > 4:
        for u in range(g.n):
            au = g.adj[u]
            rest = au >> (u + 1) << (u + 1)
            m = rest
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if au | g.adj[v] | (1 << u) | low == full:
                    return 4
                m ^= low
    return best


def _rd_probe(g: Graph) -> int:
    """Weight of a cheap feasible RD-function (all-ones, or a single 2)."""
    full = g.full_mask
    for v in range(g.n):
        if g.adj[v] | (1 << v) == full:
            return min(g.n, 2)
    return g.n


# Per-order value caches, indexed by the colex edge mask.  Only graphs of
# order <= 6 are cached (32768 masks at n = 6); 0xFF marks unknown.
_TR_VALUES: dict[int, bytearray] = {}
_T_VALUES: dict[int, bytearray] = {}
_G_VALUES: dict[int, bytearray] = {}
_R_VALUES: dict[int, bytearray] = {}
_ORDER_DECISIONS: dict[int, bytearray] = {}


def _value_cache(store: dict[int, bytearray], n: int) -> bytearray:
    arr = store.get(n)
    if arr is None:
        arr = bytearray(b"\xff" * (1 << (n * (n - 1) // 2)))
        store[n] = arr
    return arr


def reset_caches() -> None:
    """Drop all memoised invariant values (mainly for tests)."""
    for store in (_TR_VALUES, _T_VALUES, _G_VALUES, _R_VALUES, _ORDER_DECISIONS):
        store.clear()


def _gamma_tr_uncached(g: Graph) -> int:
    probe = _trd_probe(g)
    found = _WeightSearch(g, True).solve(target_cap=probe - 1)
    return probe if found is None else found


def gamma_tr_value(g: Graph) -> int:
    """Exact gamma_tR(G), value only, memoised for n <= 6."""
    if g.n < 2:
        raise TooSmallError("gamma_tR needs order >= 2")
    if g.n > SOLVER_MAX_N:
        raise GraphTooLargeError(f"gamma_tR capped at n <= {SOLVER_MAX_N}")
    _require_no_isolated(g)
    if g.n <= _VALUE_CACHE_MAX_N:
        arr = _value_cache(_TR_VALUES, g.n)
        key = g.edge_mask
        val = arr[key]
        if val == 0xFF:
            val = _gamma_tr_uncached(g)
            arr[key] = val
        return val
    return _gamma_tr_uncached(g)


def has_trd_weight_at_most(g: Graph, cap: int) -> bool:
    """Whether some TRD-function on G has weight <= cap."""
    if g.n < 2:
        raise TooSmallError("gamma_tR needs order >= 2")
    _require_no_isolated(g)
    if _trd_probe(g) <= cap:
        return True
    return _WeightSearch(g, True).solve(target_cap=cap, first_hit=True) is not None


def gamma_tr_equals_order(g: Graph) -> bool:
    """Decide gamma_tR(G) = |V(G)| without always computing the exact value."""
    if g.n <= _VALUE_CACHE_MAX_N:
        return gamma_tr_value(g) == g.n
    if g.n == _ORDER_CACHE_N:
        arr = _ORDER_DECISIONS.get(g.n)
        if arr is None:
            arr = bytearray(1 << (g.n * (g.n - 1) // 2))
            _ORDER_DECISIONS[g.n] = arr
        key = g.edge_mask
        val = arr[key]
        if val == 0:
            val = 1 if not has_trd_weight_at_most(g, g.n - 1) else 2
            arr[key] = val
        return val == 1
    return not has_trd_weight_at_most(g, g.n - 1)


def gamma_tr(g: Graph, node_budget: int | None = None) -> SolveResult:
    """Exact gamma_tR(G) with the lexicographically smallest minimum witness.

    The value comes from branch and bound seeded by constructive probes;
    the witness is built by pinning vertex values in index order and
    keeping the smallest value that still admits a completion of optimal
    weight.  ``node_budget`` bounds the total nodes across all searches.
    """
    if g.n < 2:
        raise TooSmallError("gamma_tR needs order >= 2")
    if g.n > SOLVER_MAX_N:
        raise GraphTooLargeError(f"gamma_tR capped at n <= {SOLVER_MAX_N}")
    _require_no_isolated(g)
    nodes = 0
    probe = _trd_probe(g)
    search = _WeightSearch(g, True, node_budget)
    found = search.solve(target_cap=probe - 1)
    nodes += search.nodes
    value = probe if found is None else found
    pins: dict[int, int] = {}
    for v in range(g.n):
        for val in (0, 1, 2):
            pins[v] = val
            remaining = None if node_budget is None else node_budget - nodes
            s2 = _WeightSearch(g, True, remaining)
            hit = s2.solve(forced=pins, target_cap=value, first_hit=True)
            nodes += s2.nodes
            if hit is not None:
                break
        else:  # pragma: no cover - the prefix is always extendable
            raise AssertionError("witness reconstruction failed")
    witness = WeightFunction(tuple(pins[v] for v in range(g.n)))
    return SolveResult("gamma_tR", value, witness, nodes)


def brute_oracle_gamma_tr(g: Graph) -> int:
    """Exact gamma_tR(G) by exhausting all 3^n weight vectors.

    Independent of the branch-and-bound path: vectors are enumerated as
    (two-set, one-set) bitmask pairs and checked against the raw TRD
    conditions.  Enforced cap n <= 12.
    """
    if g.n > ENUMERATION_MAX_N:
        raise GraphTooLargeError(f"oracle capped at n <= {ENUMERATION_MAX_N}")
    _require_no_isolated(g)
    n, full, adj = g.n, g.full_mask, g.adj
    best = 2 * n + 1
    for two_set in range(1 << n):
        w2 = 2 * two_set.bit_count()
        if w2 >= best:
            continue
        nbr = 0
        m = two_set
        while m:
            low = m & -m
            nbr |= adj[low.bit_length() - 1]
            m ^= low
        covered = two_set | nbr
        mandatory = full & ~covered  # weight-1 on these or the vector fails
        base = w2 + mandatory.bit_count()
        if base >= best:
            continue
        free = covered & ~two_set
        extra = 0
        while True:
            w = base + extra.bit_count()
            if w < best:
                posmask = two_set | mandatory | extra
                mm = posmask
                ok = True
                while mm:
                    low = mm & -mm
                    if not adj[low.bit_length() - 1] & posmask:
                        ok = False
                        break
                    mm ^= low
                if ok:
                    best = w
            if extra == free:
                break
            extra = (extra - free) & free
    return best


def enumerate_min_trd(g: Graph) -> list[WeightFunction]:
    """All minimum TRD-functions, in lexicographic value-vector order."""
    if g.n > ENUMERATION_MAX_N:
        raise GraphTooLargeError(f"enumeration capped at n <= {ENUMERATION_MAX_N}")
    _require_no_isolated(g)
    target = gamma_tr_value(g)
    n, full, adj = g.n, g.full_mask, g.adj
    vectors = []
    for two_set in range(1 << n):
        w2 = 2 * two_set.bit_count()
        if w2 > target:
            continue
        nbr = 0
        m = two_set
        while m:
            low = m & -m
            nbr |= adj[low.bit_length() - 1]
            m ^= low
        covered = two_set | nbr
        mandatory = full & ~covered
        need = target - w2 - mandatory.bit_count()
        if need < 0:
            continue
        free_bits = list(iter_bits(covered & ~two_set))
        if need > len(free_bits):
            continue
        for combo in itertools.combinations(free_bits, need):
            ones = mandatory
            for b in combo:
                ones |= 1 << b
            posmask = two_set | ones
            mm = posmask
            ok = True
            while mm:
                low = mm & -mm
                if not adj[low.bit_length() - 1] & posmask:
                    ok = False
                    break
                mm ^= low
            if ok:
                vectors.append(tuple(
                    2 if two_set >> v & 1 else 1 if ones >> v & 1 else 0
                    for v in range(n)
                ))
    vectors.sort()
    return [WeightFunction(vec) for vec in vectors]


def dead_vertices(g: Graph, mode: str = "total-roman") -> tuple[int, ...]:
    """Vertices assigned 0 by every minimum TRD-function (or RD-function).

    Decided by pinned branch-and-bound runs: v is dead iff neither pin
    f(v)=1 nor f(v)=2 admits a function of minimum weight.  This avoids
    full enumeration so the check scales to the solver cap.
    """
    key = mode.strip().lower().replace("_", "-")
    if key == "total-roman":
        total = True
    elif key == "roman":
        total = False
    else:
        raise ValueError(f"mode must be 'total-roman' or 'roman', got {mode!r}")
    if g.n > SOLVER_MAX_N:
        raise GraphTooLargeError(f"dead vertices capped at n <= {SOLVER_MAX_N}")
    if total:
        base = gamma_tr_value(g)
    else:
        base = gamma_r_value(g)
    dead = []
    for v in range(g.n):
        alive = False
        for val in (1, 2):
            search = _WeightSearch(g, total)
            if search.solve(forced={v: val}, target_cap=base, first_hit=True) is not None:
                alive = True
                break
        if not alive:
            dead.append(v)
    return tuple(dead)


def _min_cover_size(g: Graph, closed: bool) -> int:
    """Minimum size of a set whose closed/open neighbourhoods cover V."""
    n, full, adj = g.n, g.full_mask, g.adj
    cover_of = [adj[v] | (1 << v) for v in range(n)] if closed else list(adj)
    coverers = [0] * n
    for u in range(n):
        m = cover_of[u]
        while m:
            low = m & -m
            coverers[low.bit_length() - 1] |= 1 << u
            m ^= low
    best = [n]

    def rec(covered: int, size: int, banned: int) -> None:
        if covered == full:
            if size < best[0]:
                best[0] = size
            return
        rem = (full & ~covered).bit_count()
        maxc = 0
        m = full & ~banned
        while m:
            low = m & -m
            c = (cover_of[low.bit_length() - 1] & ~covered).bit_count()
            if c > maxc:
                maxc = c
            m ^= low
        if maxc == 0 or size + (rem + maxc - 1) // maxc >= best[0]:
            return
        # cover the uncovered vertex with the fewest remaining candidates
        pick = -1
        fewest = n + 1
        m = full & ~covered
        while m:
            low = m & -m
            v = low.bit_length() - 1
            c = (coverers[v] & ~banned).bit_count()
            if c < fewest:
                fewest = c
                pick = v
            m ^= low
        cands = sorted(
            iter_bits(coverers[pick] & ~banned),
            key=lambda u: (-(cover_of[u] & ~covered).bit_count(), u),
        )
        newban = banned
        for u in cands:
            rec(covered | cover_of[u], size + 1, newban)
            newban |= 1 << u

    rec(0, 0, 0)
    return best[0]


def gamma_value(g: Graph) -> int:
    """The domination number gamma(G), memoised for n <= 6."""
    if g.n <= _VALUE_CACHE_MAX_N:
        arr = _value_cache(_G_VALUES, g.n)
        key = g.edge_mask
        val = arr[key]
        if val == 0xFF:
            val = _min_cover_size(g, closed=True)
            arr[key] = val
        return val
    return _min_cover_size(g, closed=True)


def gamma_t_value(g: Graph) -> int:
    """The total domination number gamma_t(G), memoised for n <= 6."""
    _require_no_isolated(g)
    if g.n <= _VALUE_CACHE_MAX_N:
        arr = _value_cache(_T_VALUES, g.n)
        key = g.edge_mask
        val = arr[key]
        if val == 0xFF:
            val = _min_cover_size(g, closed=False)
            arr[key] = val
        return val
    return _min_cover_size(g, closed=False)


def _gamma_r_uncached(g: Graph) -> int:
    probe = _rd_probe(g)
    found = _WeightSearch(g, False).solve(target_cap=probe - 1)
    return probe if found is None else found


def gamma_r_value(g: Graph) -> int:
    """The Roman domination number gamma_R(G), memoised for n <= 6."""
    if g.n <= _VALUE_CACHE_MAX_N:
        arr = _value_cache(_R_VALUES, g.n)
        key = g.edge_mask
        val = arr[key]
        if val == 0xFF:
            val = _gamma_r_uncached(g)
            arr[key] = val
        return val
    return _gamma_r_uncached(g)


def rd_weight_at_most(g: Graph, cap: int, pins: dict[int, int] | None = None) -> bool:
    """Whether some RD-function (with optional pinned values) has weight <= cap."""
    return _WeightSearch(g, False).solve(
        forced=pins, target_cap=cap, first_hit=True
    ) is not None


def classical_numbers(g: Graph) -> tuple[int, int, int]:
    """(gamma, gamma_t, gamma_R); raises on isolated vertices (gamma_t)."""
    _require_no_isolated(g)
    return gamma_value(g), gamma_t_value(g), gamma_r_value(g)
