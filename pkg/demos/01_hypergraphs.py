"""
Building and inspecting uniform hypergraphs
===========================================

Construction, the canonical text format, induced subhypergraphs, and
the k-independence predicate that everything else in the package is
built on.
"""

from kindep import Hypergraph, gen_complete, parse_hg, write_hg

# A hypergraph is (n, s, edges): n vertices numbered 0..n-1, every edge
# an s-element vertex tuple.  Edges are stored sorted and deduplicated,
# so two constructions of the same hypergraph compare equal.
h = Hypergraph(6, 3, ((0, 1, 2), (2, 3, 4), (0, 2, 4), (1, 4, 5)))
print(f"n={h.n}  e={h.e}  s={h.s}")
print(f"degrees       {h.degrees}")
print(f"max degree    {h.max_degree}")
print(f"avg degree    {h.avg_degree}  (= s*e/n, kept exact as a Fraction)")

# The text serialization is canonical: same hypergraph, same bytes.
# Vertex ids are 1-based on disk, 0-based in the API.
print()
print(write_hg(h, comments=("a small 3-uniform example",)), end="")
assert parse_hg(write_hg(h)) == h

# Induced subhypergraphs keep exactly the edges that lie fully inside
# the chosen vertex set, relabeling vertices to 0..len-1.
sub = h.induced([0, 1, 2, 4])
print(f"\ninduced on {{0,1,2,4}}: n={sub.n} e={sub.e} edges={sub.edges}")

# A set S is k-independent when no vertex of S lies in more than k
# edges of the induced subhypergraph.  k=0 is plain independence.
for k in (0, 1):
    for cand in ([0, 1, 3, 5], [0, 1, 2, 3]):
        verdict = h.is_k_independent(cand, k)
        print(f"k={k}  S={cand}  k-independent: {verdict}")

# When a set fails, the violation names the worst vertex and k+1 edges
# through it as a certificate.
bad = h.k_independence_violation([0, 1, 2, 3, 4], 1)
print(f"\nviolation in {{0..4}} at k=1: vertex {bad.vertex}, edges {bad.edges}")

# Complete s-uniform hypergraphs are the standard worked example: on 4
# vertices with s=3, every 3-subset is an edge.
k4 = gen_complete(4, 3)
print(f"\ncomplete (4,3): edges {k4.edges}")
print(f"alpha_0 is 2 here: any 3 vertices contain a full edge")

# Replication takes c disjoint copies; average degree is unchanged.
twice = k4.replicate(2)
print(f"replicated twice: n={twice.n} e={twice.e} avg degree {twice.avg_degree}")
