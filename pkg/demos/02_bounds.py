"""
Lower bounds on the k-independence number
=========================================

Every bound the package knows, evaluated on one instance, plus the two
helper functions whose exact identities the refined average-degree
bound depends on.
"""

from fractions import Fraction

from kindep import bound_report, eval_f, eval_g, gen_complete, gen_random_uniform

# The complete 3-uniform hypergraph on 4 vertices is small enough to
# check everything by hand: alpha_0=2, alpha_1=3, alpha_2=3.
k4 = gen_complete(4, 3)

for k in (0, 2):
    report = bound_report(k4, k)
    print(f"bounds at k={k}  (n={report.n} e={report.e} delta={report.delta})")
    for b in report.bounds:
        if b.applicable:
            shown = b.value if isinstance(b.value, Fraction) else f"{b.value:.6f}"
            print(f"  {b.name:<20} {shown}")
        else:
            print(f"  {b.name:<20} not applicable: {b.reason}")
    print(f"  best lower bound: {report.best_lower_bound}")
    print()

# At k=2 the three average/max degree bounds are strictly ordered:
# 8/3 > 12/5 > 2.  The refined form f(x)*n never loses to the simple
# n^2(k+1)/(n(k+1)+2e), and beats it whenever x = 2e/(n(k+1)) is not
# an integer.
rep2 = bound_report(k4, 2)
chain = [rep2.bound(name).value for name in ("avg_degree", "avg_degree_simple", "max_degree")]
print(f"k=2 chain: {chain[0]} > {chain[1]} > {chain[2]}")
assert chain[0] > chain[1] > chain[2]

# f is defined piecewise from floor(x); g is a closed form in ceil(x).
# They agree exactly on every positive rational, and f(x) >= 1/(1+x)
# with equality exactly at integers.
print("\n x      f(x)      1/(1+x)")
for x in (0, Fraction(1, 2), 1, Fraction(5, 3), 2, Fraction(7, 2)):
    fx = eval_f(x)
    assert x == 0 or fx == eval_g(x)
    print(f" {str(x):<6} {str(fx):<9} {Fraction(1, 1 + x)}")

# On a random instance the best bound varies with k; exact rational
# values make the comparison trustworthy at the boundaries.
h = gen_random_uniform(12, 24, 3, 7)
print(f"\nrandom instance n={h.n} m={h.e} s={h.s}")
for k in range(4):
    report = bound_report(h, k)
    winner = max(
        (b for b in report.bounds if b.applicable and b.name != "caro_tuza_k_diag"),
        key=lambda b: b.ceiled(),
    )
    print(f"  k={k}: best={report.best_lower_bound} (from {winner.name})")
