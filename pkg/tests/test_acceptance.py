"""Acceptance gate: the nine headline guarantees of this package, one
test per criterion, each printing a single PASS/FAIL line (run with -s
to watch them).

Unlike the unit tests, these run the full-size default verification
corpus: all 1024 edge subsets of the 3-uniform complete hypergraph on
5 vertices crossed with k in {0..3}, plus 500 seeded random instances
with s in {2,3,4}, n in [8,14], m in [0,3n].  Runtime limits that are
part of a criterion are asserted; measured times are printed either
way.
"""

import time
from dataclasses import replace
from fractions import Fraction

import mpmath

from kindep import (
    VerifyConfig,
    alpha_k_exact,
    bound_report,
    chi_k_exact,
    gen_complete,
    run_verify,
)

DEFAULT = VerifyConfig()


def run_single(check_name: str, cfg: VerifyConfig, out_dir) -> tuple:
    cfg = replace(cfg, checks=(check_name,))
    start = time.perf_counter()
    outcome = run_verify(cfg, out_dir=str(out_dir))
    elapsed = time.perf_counter() - start
    assert len(outcome.checks) == 1
    return outcome, outcome.checks[0], elapsed


def announce(number: int, title: str, passed: bool, extra: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"criterion {number} ({title}): {status}  [{extra}]")


def test_criterion_1_exhaustive_soundness(tmp_path):
    cfg = replace(DEFAULT, random_count=0)
    outcome, check, elapsed = run_single("bound-soundness", cfg, tmp_path)
    ok = check.passed and check.skipped == 0
    announce(1, "exhaustive bound soundness", ok,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s, limit 30s")
    assert check.violations == 0
    assert check.skipped == 0
    assert check.comparisons > 4096  # several bounds per (instance, k) pair
    assert outcome.dumps == ()
    assert elapsed < 30.0


def test_criterion_2_random_soundness(tmp_path):
    cfg = replace(DEFAULT, exhaustive_n=0)
    outcome, check, elapsed = run_single("bound-soundness", cfg, tmp_path)
    ok = check.passed and check.skipped == 0
    announce(2, "random bound soundness", ok,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s, limit 300s")
    assert check.violations == 0
    assert check.skipped == 0
    assert outcome.dumps == ()
    assert elapsed < 300.0


def test_criterion_3_known_values():
    k4 = gen_complete(4, 3)
    alphas = [alpha_k_exact(k4, k).value for k in range(3)]
    chi1 = chi_k_exact(k4, 1).value

    rep0 = bound_report(k4, 0)
    avg0 = rep0.bound("avg_degree").value
    simple0 = rep0.bound("avg_degree_simple").value
    products0 = rep0.bound("caro_tuza_alpha").value
    cps0 = rep0.bound("cps").value
    mpmath.mp.dps = 50
    cps_reference = float(4 * mpmath.exp(-mpmath.euler / 2) / 2)

    rep2 = bound_report(k4, 2)
    avg2 = rep2.bound("avg_degree").value
    simple2 = rep2.bound("avg_degree_simple").value
    degree2 = rep2.bound("max_degree").value

    ok = (
        alphas == [2, 3, 3]
        and chi1 == 2
        and avg0 == simple0 == Fraction(4, 3)
        and products0 == Fraction(192, 105)
        and abs(cps0 - cps_reference) <= 1e-9
        and avg2 == Fraction(8, 3)
        and simple2 == Fraction(12, 5)
        and degree2 == 2
        and avg2 > simple2 > degree2
    )
    announce(3, "known values on the complete 3-uniform 4-vertex instance", ok,
             f"alpha={alphas}, chi_1={chi1}, cps err={abs(cps0 - cps_reference):.2e}")
    assert alphas == [2, 3, 3]
    assert chi1 == 2
    assert avg0 == simple0 == Fraction(4, 3)
    assert products0 == Fraction(192, 105)
    assert abs(cps0 - cps_reference) <= 1e-9
    assert avg2 == Fraction(8, 3) and simple2 == Fraction(12, 5) and degree2 == 2
    assert avg2 > simple2 > degree2


def test_criterion_4_fg_analytic_suite(tmp_path):
    micro = VerifyConfig(exhaustive_n=2, exhaustive_s=2, exhaustive_k=(0,),
                         random_count=0, replication_count=0)
    _, check, elapsed = run_single("fg-properties", micro, tmp_path)
    ok = check.passed and elapsed < 1.0
    announce(4, "f/g grid identities", ok,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s, limit 1s")
    assert check.violations == 0
    assert check.comparisons > 40_000  # all-pairs convexity dominates
    assert elapsed < 1.0


def test_criterion_5_constructive_achievement(tmp_path):
    outcome, check, elapsed = run_single("extraction-achievement", DEFAULT, tmp_path)
    announce(5, "every extractor achieves its bound", check.passed,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s")
    for note in check.notes:
        print(f"    {note}")
    assert check.violations == 0
    assert outcome.dumps == ()
    assert not list(tmp_path.glob("*.hg"))


def test_criterion_6_partition_contract(tmp_path):
    _, check, elapsed = run_single("partition", DEFAULT, tmp_path)
    announce(6, "partition class count, no fallbacks, chi agreement", check.passed,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"oracle skips={check.skipped}, {elapsed:.2f}s")
    assert check.violations == 0


def test_criterion_7_remark_regime(tmp_path):
    _, check, elapsed = run_single("remark-regime", DEFAULT, tmp_path)
    announce(7, "average-degree bound dominates in the high-degree regime",
             check.passed,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s")
    for note in check.notes:
        print(f"    {note}")
    assert check.violations == 0
    assert check.comparisons > 0


def test_criterion_8_replication_invariance(tmp_path):
    _, check, elapsed = run_single("replication", DEFAULT, tmp_path)
    announce(8, "alpha and per-vertex bounds are replication invariant",
             check.passed,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s")
    assert check.violations == 0
    assert check.comparisons >= 20 * 2  # 20 instances, copy counts 2 and 3


def test_criterion_9_oracle_self_check(tmp_path):
    _, check, elapsed = run_single("oracle-self-agreement", DEFAULT, tmp_path)
    ok = check.passed and check.skipped == 0
    announce(9, "pruned oracle equals the plain subset sweep", ok,
             f"comparisons={check.comparisons}, violations={check.violations}, "
             f"{elapsed:.2f}s")
    assert check.violations == 0
    assert check.skipped == 0
    assert check.comparisons > 4096  # whole exhaustive corpus qualifies
