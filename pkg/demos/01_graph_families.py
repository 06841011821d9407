"""Graph families, degree statistics, and edge-list round trips.

Every generator is deterministic given its seed, and every graph keeps
node ids 0..n-1 with sorted neighbor lists.
"""

from walksearch import (
    degree_stats,
    er_connected,
    gen_family,
    hex_chain,
    load_edge_list,
    save_edge_list,
)

# A chain of hexagons with pendant side chains: the shape where short
# walks miss structure but a single search cannot miss a node.
g = hex_chain(3)
stats = degree_stats(g)
print(f"hex_chain(3): {g.n} nodes, {g.edge_count} edges")
print(f"  d_max={stats.d_max}  avg_deg={stats.avg_deg:.3f}  "
      f"edges-per-node C={stats.sparsity_c:.3f}")

# Sparse connected random graph, resampled until connected.
h = er_connected(24, avg_deg=3.0, seed=7)
print(f"\ner_connected(24, 3.0, seed=7): {h.edge_count} edges, "
      f"connected={h.is_connected()}")
print("same seed reproduces it exactly:",
      h == er_connected(24, avg_deg=3.0, seed=7))

# The canonical text format: '# n=<k>' header, then 'u v' lines with u<v.
text = save_edge_list(gen_family("cycle", n=5))
print("\ncycle(5) as an edge list:")
print(text, end="")
print("round trip is exact:", load_edge_list(text) == gen_family("cycle", n=5))
