"""Classic color refinement versus the walk-based variant.

The walk variant hashes each node with the multiset of colored walks
terminating at it. Its stable partition always coincides with classic
refinement, which the unfolding-tree picture explains: leaf-to-root
paths of the depth-d tree at u are exactly the length-d walks ending
at u.
"""

from collections import Counter

from walksearch import (
    cycle_graph,
    disjoint_union,
    distinguish,
    leaf_paths,
    path_graph,
    terminating_walks,
    unfolding_tree,
    wl_refine,
    wwl_refine,
)

g = path_graph(4)
run = wl_refine([g])
print("classic refinement on the 4-path:")
for r in range(len(run.history)):
    print(f"  round {r}: {run.partition(r, 0).sorted_blocks()}")
print(f"  stable at round {run.stable_round}")

walk_run = wwl_refine([g], length=2)
print("\nwalk refinement (length 2) reaches the same stable partition:",
      walk_run.stable_partition(0) == run.stable_partition(0))

# The classic blind spot: two triangles versus a six-cycle. Every node
# has degree 2, so neither test can tell them apart.
pair = (disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6))
for test, ell in (("wl", None), ("wwl", 1), ("wwl", 3)):
    v = distinguish(*pair, test=test, length=ell)
    print(f"2xC3 vs C6 under {v.test}: {v.result}")
v = distinguish(path_graph(3), cycle_graph(3), test="wl")
print(f"path(3) vs cycle(3) under wl: {v.result}")

# Unfolding trees collect terminating walks as leaf-to-root paths.
tree = unfolding_tree(path_graph(3), 1, depth=2)
print(f"\nunfolding tree at the path middle, depth 2: {tree.node_count} nodes")
print("leaf-to-root paths:", sorted(leaf_paths(tree)))
length_two = [w for w in terminating_walks(path_graph(3), 1, 2) if len(w) == 3]
print("length-2 terminating walks:", sorted(length_two))
print("same multiset:", Counter(leaf_paths(tree)) == Counter(length_two))
