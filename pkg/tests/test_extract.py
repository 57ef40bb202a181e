"""Extraction engines: frozen small cases, guarantee sweeps, trace
replay, and the re-verification safety net."""

import math
from fractions import Fraction

import pytest

from kindep import (
    ExtractionDefect,
    alpha_k_exact,
    band_peel,
    best_extract,
    bound_report,
    eval_f,
    gen_complete,
    gen_random_uniform,
    greedy_peel,
    k_partition,
    partition_extract,
)


@pytest.fixture
def k4():
    return gen_complete(4, 3)


def sweep_instances():
    for seed in range(10):
        n = 8 + seed % 4
        m = 3 * (seed % 4) + 2 * seed
        s = 2 + seed % 3
        yield gen_random_uniform(n, m, s, seed)


def test_greedy_peel_complete_k0(k4):
    res = greedy_peel(k4, 0)
    assert res.algorithm == "greedy_peel"
    assert res.vertices == (2, 3)
    assert res.certified_max_degree == 0
    assert [(t.op, t.vertex, t.degree) for t in res.trace] == [
        ("remove", 0, 3),
        ("remove", 1, 1),
    ]


def test_greedy_peel_guarantee():
    for h in sweep_instances():
        for k in range(4):
            res = greedy_peel(h, k)
            assert res.size >= h.n - Fraction(h.e, k + 1)
            assert res.certified_max_degree <= k


def test_greedy_peel_trace_replay(k4):
    for h in list(sweep_instances()) + [k4]:
        for k in range(3):
            res = greedy_peel(h, k)
            removed = [t.vertex for t in res.trace]
            assert len(set(removed)) == len(removed)
            assert tuple(sorted(set(range(h.n)) - set(removed))) == res.vertices


def test_greedy_custom_threshold(k4):
    lax = greedy_peel(k4, 2, threshold=3)
    assert lax.size == 3
    with pytest.raises(ExtractionDefect):
        # threshold too lax for k = 0: survivors keep an edge, and the
        # mandatory re-verification must catch it
        greedy_peel(k4, 0, threshold=4)
    with pytest.raises(ValueError):
        greedy_peel(k4, 0, threshold=0)
    with pytest.raises(ValueError):
        greedy_peel(k4, -1)


def test_band_peel_complete_k0(k4):
    res = band_peel(k4, 0)
    assert res.algorithm == "band_peel"
    assert res.vertices == (2, 3)
    assert [(t.op, t.vertex, t.degree) for t in res.trace] == [
        ("remove", 0, 3),
        ("remove", 1, 1),
    ]


def test_band_peel_guarantee():
    for h in sweep_instances():
        for k in range(4):
            res = band_peel(h, k)
            x = Fraction(2 * h.e, h.n * (k + 1))
            assert res.size >= math.ceil(eval_f(x) * h.n)
            assert res.certified_max_degree <= k


def test_band_peel_all_remove_traces_replay():
    for h in sweep_instances():
        for k in range(3):
            res = band_peel(h, k)
            if all(t.op == "remove" for t in res.trace):
                removed = set(t.vertex for t in res.trace)
                assert tuple(sorted(set(range(h.n)) - removed)) == res.vertices


def test_band_peel_probe_entries():
    h = gen_random_uniform(10, 30, 3, 3)
    probe = []
    band_peel(h, 0, probe=probe)
    assert probe
    for entry in probe:
        assert entry["r"] >= 1
        assert entry["removed"] <= entry["cap"]
        assert entry["early_stop"] == (entry["removed"] < entry["cap"])


def test_partition_contract():
    for h in sweep_instances():
        for k in (1, 2, 3):
            part = k_partition(h, k)
            expected_classes = max(1, -(-h.max_degree // k))
            assert len(part.classes) == expected_classes
            assert part.fallback_events == 0
            assert len(part.moves) <= h.e
            assert sorted(v for cls in part.classes for v in cls) == list(range(h.n))
            assert all(d <= k for d in part.class_max_degrees)


def test_partition_rejects_k0(k4):
    with pytest.raises(ValueError):
        k_partition(k4, 0)
    with pytest.raises(ValueError):
        partition_extract(k4, 0)


def test_partition_extract_pigeonhole():
    for h in sweep_instances():
        for k in (1, 2):
            res = partition_extract(h, k)
            classes = max(1, -(-h.max_degree // k))
            assert res.size >= -(-h.n // classes)
            assert res.certified_max_degree <= k


def test_partition_extract_complete(k4):
    res = partition_extract(k4, 1)
    assert res.size == 2
    assert res.trace == ()


def test_best_extract_dominates_and_is_maximal(k4):
    for h in list(sweep_instances()) + [k4]:
        for k in range(3):
            best = best_extract(h, k)
            assert best.size >= greedy_peel(h, k).size
            assert best.size >= band_peel(h, k).size
            if k >= 1:
                assert best.size >= partition_extract(h, k).size
            chosen = set(best.vertices)
            for v in range(h.n):
                if v not in chosen:
                    assert not h.is_k_independent(sorted(chosen | {v}), k)


def test_extraction_never_beats_oracle():
    for h in sweep_instances():
        for k in range(3):
            exact = alpha_k_exact(h, k).value
            assert best_extract(h, k).size <= exact


def test_extraction_achieves_best_bound():
    for h in sweep_instances():
        for k in range(4):
            report = bound_report(h, k)
            assert best_extract(h, k).size >= report.best_lower_bound


def test_result_json_shape(k4):
    doc = band_peel(k4, 0).to_json_dict()
    assert list(doc) == [
        "algorithm",
        "k",
        "size",
        "set",
        "certified_max_degree",
        "trace",
    ]
    assert doc["set"] == [3, 4]
    assert doc["trace"][0] == {"op": "remove", "vertex": 1, "degree": 3}
    assert doc["size"] == 2
