"""Constructive extraction of large k-independent sets.

Three engines, each realizing one of the lower-bound arguments:

    greedy_peel        threshold peeling; survivors number >= n - e/(k+1)
    band_peel          banded threshold recursion achieving f(x) * n
    partition_extract  largest class of a bounded-degree partition,
                       size >= ceil(n / ceil(delta/k)) by pigeonhole

plus `best_extract`, which runs all applicable engines and augments the
winner to a maximal set.  Every result is re-verified against the input
hypergraph before it is returned; a failed re-verification raises
ExtractionDefect and is a bug by definition, never a degraded answer.

All reported vertex ids refer to the caller's hypergraph even where the
recursion internally relabels subinstances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from kindep.hypergraph import Hypergraph


class ExtractionDefect(RuntimeError):
    """An extractor produced a set that failed re-verification."""


@dataclass(frozen=True)
class TraceStep:
    """One audited algorithm step.

    op is "remove" (peeling) or "move" (partition local search);
    degree is the induced degree that triggered the step.
    """

    op: str
    vertex: int
    degree: int

    def to_json_dict(self) -> dict:
        return {"op": self.op, "vertex": self.vertex + 1, "degree": self.degree}


@dataclass(frozen=True)
class ExtractionResult:
    """A verified k-independent set plus the steps that produced it."""

    algorithm: str
    k: int
    vertices: tuple[int, ...]
    certified_max_degree: int
    trace: tuple[TraceStep, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "k": self.k,
            "size": self.size,
            "set": [v + 1 for v in self.vertices],
            "certified_max_degree": self.certified_max_degree,
            "trace": [t.to_json_dict() for t in self.trace],
        }


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of V with bounded induced degree per class.

    fallback_events counts emergency class openings (theoretically
    impossible; any nonzero count is reported as a degraded run).
    """

    k: int
    classes: tuple[tuple[int, ...], ...]
    class_max_degrees: tuple[int, ...]
    moves: tuple[TraceStep, ...]
    fallback_events: int


def _finalize(h: Hypergraph, k: int, algorithm: str,
              vertices: tuple[int, ...], trace: tuple[TraceStep, ...]) -> ExtractionResult:
    """Re-verify and package; the re-check is the module's safety net."""
    violation = h.k_independence_violation(vertices, k)
    if violation is not None:
        raise ExtractionDefect(
            f"{algorithm} returned a non-{k}-independent set: vertex "
            f"{violation.vertex} has induced degree > {k}"
        )
    deg = h.induced_degrees(vertices)
    certified = max(deg.values(), default=0)
    return ExtractionResult(algorithm, k, vertices, certified, trace)


class _PeelState:
    """Mutable view of a hypergraph under vertex deletion.

    Tracks alive vertices, alive edges (all endpoints alive), and the
    induced degree of every alive vertex, so one deletion costs only
    the edges it kills.
    """

    def __init__(self, h: Hypergraph) -> None:
        self.h = h
        self.alive = [True] * h.n
        self.edge_alive = [True] * h.e
        self.deg = list(h.degrees)
        self.alive_count = h.n

    def remove(self, v: int) -> None:
        assert self.alive[v]
        self.alive[v] = False
        self.alive_count -= 1
        for i in self.h.incidence[v]:
            if self.edge_alive[i]:
                self.edge_alive[i] = False
                for u in self.h.edges[i]:
                    if u != v:
                        self.deg[u] -= 1

    def worst_alive(self) -> int:
        """Alive vertex of maximum induced degree, ties to lowest id."""
        best, best_deg = -1, -1
        for v in range(self.h.n):
            if self.alive[v] and self.deg[v] > best_deg:
                best, best_deg = v, self.deg[v]
        return best

    def survivors(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.h.n) if self.alive[v])

    def alive_edge_count(self) -> int:
        return sum(self.edge_alive)


def greedy_peel(h: Hypergraph, k: int, threshold: int | None = None) -> ExtractionResult:
    """Peel vertices of current degree >= threshold until none remain.

    The default threshold k+1 makes every survivor's induced degree at
    most k, and each removal kills at least k+1 edges, so the survivor
    count is at least n - e/(k+1).
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    theta = k + 1 if threshold is None else threshold
    if theta < 1:
        raise ValueError(f"threshold must be >= 1, got {theta}")
    state = _PeelState(h)
    trace = []
    while True:
        v = state.worst_alive()
        if v < 0 or state.deg[v] < theta:
            break
        trace.append(TraceStep("remove", v, state.deg[v]))
        state.remove(v)
    return _finalize(h, k, "greedy_peel", state.survivors(), tuple(trace))


def _degree_band(h: Hypergraph, k: int) -> tuple[int, Fraction]:
    """Minimal r >= 0 with d <= (s/2)(r+1)(k+1), plus x = 2d/(s(k+1))."""
    x = Fraction(2 * h.e, h.n * (k + 1))
    return max(0, math.ceil(x) - 1), x


def band_peel(h: Hypergraph, k: int, probe: list | None = None) -> ExtractionResult:
    """Banded threshold peeling realizing the f(x) * n guarantee.

    One phase: with the instance in band r >= 1 (that is,
    (s/2) r (k+1) < d <= (s/2)(r+1)(k+1)), remove up to T = ceil(t)
    vertices of current degree >= s(r+1)(k+1)/2, where
    t = (2e - n r (k+1)) / ((r+2)(k+1)); the remainder lands in a lower
    band and is handled recursively.  Band 0 is plain greedy peeling.
    Each level also runs greedy_peel on its own instance and returns
    whichever set is larger (ties favor the banded recursion).

    `probe`, when given, collects one diagnostics dict per phase for
    the verification harness.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    r, x = _degree_band(h, k)
    if r == 0:
        inner = greedy_peel(h, k)
        return replace(inner, algorithm="band_peel")

    t = Fraction(2 * h.e - h.n * r * (k + 1), (r + 2) * (k + 1))
    cap = math.ceil(t)
    # degree threshold s(r+1)(k+1)/2, compared without rounding
    tau_twice = h.s * (r + 1) * (k + 1)
    state = _PeelState(h)
    trace = []
    while len(trace) < cap:
        v = state.worst_alive()
        if v < 0 or 2 * state.deg[v] < tau_twice:
            break
        trace.append(TraceStep("remove", v, state.deg[v]))
        state.remove(v)

    removed = len(trace)
    if probe is not None:
        survivors = state.survivors()
        rem_e = state.alive_edge_count()
        rem_n = len(survivors)
        entry = {
            "n": h.n, "e": h.e, "k": k, "r": r, "x": x, "t": t, "cap": cap,
            "removed": removed, "early_stop": removed < cap,
            "remainder_n": rem_n, "remainder_e": rem_e,
            "remainder_d_ok": Fraction(h.s * rem_e, rem_n) <= Fraction(h.s * r * (k + 1), 2)
            if removed == cap and rem_n else None,
        }
        if removed < cap and k >= 1:
            rem_delta = max((state.deg[v] for v in survivors), default=0)
            entry["stop_classes_ok"] = -(-rem_delta // k) <= r + 1
        probe.append(entry)

    if removed == 0:
        # threshold found no vertex at all: fall back to the best of the
        # other engines rather than recursing on an unchanged instance
        contenders = [greedy_peel(h, k)]
        if k >= 1:
            contenders.append(partition_extract(h, k))
        winner = max(contenders, key=lambda res: res.size)
        return replace(winner, algorithm="band_peel")

    survivors = state.survivors()
    remainder = h.induced(survivors)
    rec = band_peel(remainder, k, probe)
    rec_vertices = tuple(survivors[i] for i in rec.vertices)
    rec_trace = tuple(trace) + tuple(
        TraceStep(step.op, survivors[step.vertex], step.degree) for step in rec.trace
    )
    plain = greedy_peel(h, k)
    if plain.size > len(rec_vertices):
        return replace(plain, algorithm="band_peel")
    return _finalize(h, k, "band_peel", rec_vertices, rec_trace)


def k_partition(h: Hypergraph, k: int) -> Partition:
    """Partition V into ceil(delta/k) classes of induced max degree <= k.

    Local search from a round-robin start: while some vertex exceeds k
    inside its class, move the worst offender to the class where it
    would have the fewest fully-contained edges.  Each move strictly
    lowers the count of single-class edges, so at most e moves happen.
    """
    if k < 1:
        raise ValueError(f"partitioning requires k >= 1, got {k}")
    delta = h.max_degree
    c = max(1, -(-delta // k))
    assign = [v % c for v in range(h.n)]
    moves = []
    fallback_events = 0
    hard_cap = 4 * h.e + 2 * h.n + 16

    def mono_degrees() -> list[int]:
        deg = [0] * h.n
        for edge in h.edges:
            t = assign[edge[0]]
            if all(assign[u] == t for u in edge[1:]):
                for u in edge:
                    deg[u] += 1
        return deg

    def prospective(v: int, t: int) -> int:
        return sum(
            1
            for i in h.incidence[v]
            if all(assign[u] == t for u in h.edges[i] if u != v)
        )

    while True:
        deg = mono_degrees()
        worst, worst_deg = -1, k
        for v in range(h.n):
            if deg[v] > worst_deg:
                worst, worst_deg = v, deg[v]
        if worst < 0:
            break
        if len(moves) >= hard_cap:
            raise ExtractionDefect("partition local search failed to converge")
        options = [
            (prospective(worst, t), t)
            for t in range(c)
            if t != assign[worst]
        ]
        best_gain, target = min(options, default=(worst_deg, -1))
        if best_gain >= worst_deg:
            # should be unreachable; keep the run valid and flag it
            fallback_events += 1
            c += 1
            target = c - 1
        moves.append(TraceStep("move", worst, worst_deg))
        assign[worst] = target

    classes = tuple(
        tuple(v for v in range(h.n) if assign[v] == t) for t in range(c)
    )
    class_max = []
    for cls in classes:
        if cls:
            induced = h.induced_degrees(cls)
            worst_in_cls = max(induced.values(), default=0)
        else:
            worst_in_cls = 0
        if worst_in_cls > k:
            raise ExtractionDefect("partition converged with an invalid class")
        class_max.append(worst_in_cls)
    return Partition(k, classes, tuple(class_max), tuple(moves), fallback_events)


def partition_extract(h: Hypergraph, k: int) -> ExtractionResult:
    """Largest class of k_partition; pigeonhole gives n/ceil(delta/k)."""
    part = k_partition(h, k)
    best = max(part.classes, key=len)
    return _finalize(h, k, "partition_extract", best, part.moves)


def best_extract(h: Hypergraph, k: int) -> ExtractionResult:
    """Best of all engines, then augmented to a maximal set.

    Augmentation retries every excluded vertex in ascending id order
    and keeps those that preserve k-independence, so no single vertex
    can extend the returned set.
    """
    contenders = [greedy_peel(h, k), band_peel(h, k)]
    if k >= 1:
        contenders.append(partition_extract(h, k))
    winner = max(contenders, key=lambda res: res.size)
    chosen = set(winner.vertices)
    for v in range(h.n):
        if v not in chosen and h.is_k_independent(sorted(chosen | {v}), k):
            chosen.add(v)
    return _finalize(h, k, "best_extract", tuple(sorted(chosen)), winner.trace)
