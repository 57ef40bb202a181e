"""
Exact oracles
=============

Ground truth for small instances: the exact k-independence number by
branch and bound, the exact k-chromatic number by iterative deepening,
and the node budget that keeps oversized queries honest.
"""

from kindep import (
    alpha_k_bruteforce,
    alpha_k_exact,
    bound_report,
    chi_k_exact,
    gen_complete,
    gen_random_uniform,
)

k4 = gen_complete(4, 3)

# alpha_k for the complete (4,3) instance, with witnesses.  The witness
# is an actual k-independent set of maximum size, never a claim.
print("complete (4,3):")
for k in range(4):
    res = alpha_k_exact(k4, k)
    print(f"  alpha_{k} = {res.value}  witness {res.witness}  ({res.nodes} nodes)")

# chi_k is the least number of classes so that every class induces max
# degree <= k; for this instance two classes suffice at k=1.
chi = chi_k_exact(k4, 1)
print(f"  chi_1 = {chi.value}  witness {chi.witness}")

# The pruned search must agree with the plain 2^n sweep everywhere.
h = gen_random_uniform(12, 30, 3, 5)
print(f"\nrandom instance n={h.n} m={h.e} s={h.s}:")
for k in range(3):
    pruned = alpha_k_exact(h, k)
    sweep = alpha_k_bruteforce(h, k)
    assert pruned.value == sweep
    print(f"  alpha_{k} = {pruned.value}  (pruned: {pruned.nodes} nodes; sweep agrees)")

# Every lower bound is at most the exact value; the gap is what the
# extraction engines try to close.
for k in range(3):
    best = bound_report(h, k).best_lower_bound
    exact = alpha_k_exact(h, k).value
    print(f"  k={k}: best bound {best} <= alpha {exact}")

# A node budget converts an over-large query into an explicit
# budget_exceeded result instead of an open-ended computation.
big = gen_complete(9, 3)
starved = alpha_k_exact(big, 1, node_budget=50)
print(f"\nbudget 50 on complete (9,3): status={starved.status} value={starved.value}")
full = alpha_k_exact(big, 1)
print(f"unbounded:                    status={full.status} value={full.value} "
      f"({full.nodes} nodes)")
