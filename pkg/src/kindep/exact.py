"""Exact oracles for the k-independence and k-chromatic numbers.

Small-instance ground truth by exhaustive search.  Vertex sets are
machine-word bitmasks (n <= 64) and edge containment is a mask-subset
test, so the searches stay cheap enough to run over whole corpora.

A node budget turns an over-large call into an explicit
"budget_exceeded" result; the oracle never returns an approximation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from kindep.hypergraph import Hypergraph


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one exact computation.

    status is "exact" (value and witness are trustworthy ground truth)
    or "budget_exceeded" (value and witness are None).  The witness is
    a vertex tuple for alpha queries and a tuple of classes for chi.
    """

    quantity: str
    k: int
    value: int | None
    status: str
    witness: tuple | None
    nodes: int
    elapsed: float

    def to_json_dict(self) -> dict:
        witness: object = None
        if self.witness is not None:
            if self.quantity == "alpha_k":
                witness = [v + 1 for v in self.witness]
            else:
                witness = [[v + 1 for v in cls] for cls in self.witness]
        return {
            "quantity": self.quantity,
            "k": self.k,
            "value": self.value,
            "status": self.status,
            "witness": witness,
            "nodes": self.nodes,
        }


class _BudgetExceeded(Exception):
    pass


class _NodeMeter:
    """Counts search nodes; raises once a finite limit is crossed."""

    def __init__(self, limit: int | None) -> None:
        self.spent = 0
        self.limit = limit

    def tick(self) -> None:
        self.spent += 1
        if self.limit is not None and self.spent > self.limit:
            raise _BudgetExceeded


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _max_violator(h: Hypergraph, smask: int, k: int) -> tuple[int, int]:
    """(vertex, induced degree) of the worst violator inside smask, or
    (-1, 0) when the masked set is k-independent.  Ties: lowest id."""
    deg = [0] * h.n
    for emask, edge in zip(h.edge_masks, h.edges):
        if emask & smask == emask:
            for v in edge:
                deg[v] += 1
    worst, worst_deg = -1, k
    for v in range(h.n):
        if smask >> v & 1 and deg[v] > worst_deg:
            worst, worst_deg = v, deg[v]
    return (worst, worst_deg) if worst >= 0 else (-1, 0)


def _witness_union(h: Hypergraph, smask: int, v: int, k: int) -> int:
    """Mask of v plus the vertices of k+1 edges through v inside smask."""
    out = 1 << v
    found = 0
    for emask in h.edge_masks:
        if emask >> v & 1 and emask & smask == emask:
            out |= emask
            found += 1
            if found == k + 1:
                break
    return out


def _greedy_seed(h: Hypergraph, k: int) -> int:
    """Peel worst violators until k-independent; mask of the survivors."""
    smask = (1 << h.n) - 1
    while True:
        v, _ = _max_violator(h, smask, k)
        if v < 0:
            return smask
        smask &= ~(1 << v)


def alpha_k_exact(h: Hypergraph, k: int, node_budget: int | None = None) -> OracleResult:
    """Maximum size of a k-independent set, by branch and bound.

    Search state is (candidate mask, required mask).  At an invalid
    node some vertex of the violator's witness union must leave the
    candidate set; branching over those exclusions, each branch
    requiring the previously tried vertices to stay, partitions the
    space.  Nodes with no more candidates than the incumbent are cut.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if h.n > 64:
        raise ValueError("oracle supports n <= 64")
    start = time.perf_counter()
    meter = _NodeMeter(node_budget)
    best_mask = _greedy_seed(h, k)
    best = bin(best_mask).count("1")

    def explore(smask: int, required: int) -> None:
        nonlocal best, best_mask
        meter.tick()
        size = bin(smask).count("1")
        if size <= best:
            return
        v, _ = _max_violator(h, smask, k)
        if v < 0:
            best, best_mask = size, smask
            return
        union = _witness_union(h, smask, v, k)
        candidates = [v] + [u for u in _mask_to_vertices(union) if u != v]
        req = required
        for u in candidates:
            bit = 1 << u
            if req & bit:
                continue
            explore(smask & ~bit, req)
            req |= bit

    try:
        explore((1 << h.n) - 1, 0)
    except _BudgetExceeded:
        return OracleResult("alpha_k", k, None, "budget_exceeded", None, meter.spent,
                            time.perf_counter() - start)
    return OracleResult("alpha_k", k, best, "exact", _mask_to_vertices(best_mask),
                        meter.spent, time.perf_counter() - start)


def alpha_k_bruteforce(h: Hypergraph, k: int) -> int:
    """Plain sweep over all 2^n subsets; reference for the pruned search."""
    if h.n > 20:
        raise ValueError("bruteforce reference is for small n only")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    best = 0
    masks = h.edge_masks
    edges = h.edges
    for smask in range(1 << h.n):
        size = bin(smask).count("1")
        if size <= best:
            continue
        deg = [0] * h.n
        ok = True
        for emask, edge in zip(masks, edges):
            if emask & smask == emask:
                for v in edge:
                    deg[v] += 1
                    if deg[v] > k:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            best = size
    return best


def _partition_search(h: Hypergraph, k: int, classes: int, meter: _NodeMeter) -> list[int] | None:
    """Backtracking assignment of vertices (in id order) to `classes`
    classes, each keeping induced max degree <= k.  Symmetry is broken
    by allowing a vertex only the used classes plus one fresh one.
    """
    by_last: list[list[int]] = [[] for _ in range(h.n)]
    for i, edge in enumerate(h.edges):
        by_last[edge[-1]].append(i)
    assign = [-1] * h.n
    cls_deg = [[0] * h.n for _ in range(classes)]

    def place(v: int, t: int) -> list[int] | None:
        """Apply degree increments for the edges that become fully
        contained in class t once v joins it; returns that edge list,
        or None (state rolled back) if a degree tops k."""
        done = [
            i for i in by_last[v]
            if all(assign[u] == t for u in h.edges[i] if u != v)
        ]
        touched = []
        for i in done:
            for u in h.edges[i]:
                cls_deg[t][u] += 1
                touched.append(u)
                if cls_deg[t][u] > k:
                    for w in touched:
                        cls_deg[t][w] -= 1
                    return None
        return done

    def unplace(t: int, done: list[int]) -> None:
        for i in done:
            for u in h.edges[i]:
                cls_deg[t][u] -= 1

    def descend(v: int, used: int) -> bool:
        if v == h.n:
            return True
        meter.tick()
        for t in range(min(used + 1, classes)):
            assign[v] = t
            done = place(v, t)
            if done is not None:
                if descend(v + 1, max(used, t + 1)):
                    return True
                unplace(t, done)
            assign[v] = -1
        return False

    return assign if descend(0, 0) else None


def chi_k_exact(h: Hypergraph, k: int, node_budget: int | None = None) -> OracleResult:
    """Minimum class count of a partition with induced max degree <= k
    per class, by iterative deepening over the class count.

    n singleton classes are always valid (s >= 2), so deepening from 1
    terminates without leaning on any bound under test.  One node
    budget is shared across the deepening rounds.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1 for the partition oracle, got {k}")
    start = time.perf_counter()
    meter = _NodeMeter(node_budget)
    for classes in range(1, h.n + 1):
        try:
            assign = _partition_search(h, k, classes, meter)
        except _BudgetExceeded:
            return OracleResult("chi_k", k, None, "budget_exceeded", None,
                                meter.spent, time.perf_counter() - start)
        if assign is not None:
            witness = tuple(
                tuple(v for v in range(h.n) if assign[v] == t)
                for t in range(classes)
                if t in assign
            )
            return OracleResult("chi_k", k, classes, "exact", witness,
                                meter.spent, time.perf_counter() - start)
    raise AssertionError("singleton partition must have succeeded")
