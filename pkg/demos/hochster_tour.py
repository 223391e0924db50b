"""
Normal and non-normal edge ideals
=================================

Walks through a few small graphs, shows when two odd cycles are far enough
apart to make the edge ideal non-normal, then estimates how often that
happens in G(n, p) as p grows.
"""

from erideals import Graph, estimate
from erideals.cli import analyze_graph
from erideals.named import triangles_joined_by_path, two_triangles
from erideals.normality import find_hochster, induced_odd_cycles

# two triangles joined through a middle vertex: far enough apart
g = triangles_joined_by_path()
print("edges:", g.edges())
print("odd holes:", [sorted(c) for c in induced_odd_cycles(g)])
print("witness:", find_hochster(g).to_json())

# join them by one edge instead and they touch
h = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
print("\ntriangles joined by an edge ->", find_hochster(h))

# the full report the CLI prints for `erideals analyze`
print()
for key, value in analyze_graph(two_triangles()).items():
    print(f"{key:>18}: {value}")

# in G(30, p) configurations appear fast once triangles do
print("\n  p     P(normal)   95% CI")
for p in (0.01, 0.03, 0.05, 0.08, 0.12):
    est = estimate(30, p, "edge_ideal_normal", 4000, seed=1)
    print(f"{p:5.2f}  {est.p_hat:9.4f}   [{est.ci_lo:.4f}, {est.ci_hi:.4f}]")
