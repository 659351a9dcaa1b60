"""
Graphs, neighborhoods, and the nine similarity metrics
======================================================

Build a small graph, inspect its compressed adjacency layout, and score
a vertex pair with every metric.
"""

import hublink as hl

# A small fixed graph: two triangles sharing vertices 1, 2, 3 plus a tail.
edges = hl.EdgeList.from_pairs(
    [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
g = hl.build_graph(edges)
print(g)
print("degrees:", g.degrees().tolist())

# The CSR layout: offsets index into one flat, sorted neighbor array.
print("offsets:  ", g.offsets.tolist())
print("adjacency:", g.adjacency.tolist())
for v in range(g.vertex_count):
    print(f"  neighbors({v}) = {g.neighbors(v).tolist()}")

# Vertices 0 and 3 are not adjacent but share both 1 and 2 as neighbors.
# Each metric turns that shared neighborhood into a score. The count-type
# metrics accumulate 1 per common neighbor; AA and RA down-weight common
# neighbors by their degree before accumulating.
u, v = 0, 3
common = sorted(set(g.neighbors(u).tolist()) & set(g.neighbors(v).tolist()))
print(f"\ncommon neighbors of {u} and {v}: {common}")

acc = {m: sum(hl.contribution(m, g.degree(b)) for b in common) for m in hl.Metric}
for metric in hl.Metric:
    score = hl.finalize(metric, acc[metric], g.degree(u), g.degree(v))
    print(f"  {metric.token:>4}: accumulated {acc[metric]:.4f} -> score {score:.4f}")

# The brute-force scorer ranks every non-adjacent pair the same way.
print("\ntop pairs by Jaccard coefficient:")
for p in hl.brute_force_predict(g, hl.Metric.JC, 3):
    print(f"  ({p.u}, {p.v}) -> {p.score:.4f}")
