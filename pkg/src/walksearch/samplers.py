"""Walk and search samplers.

Three walk policies (uniform, non-backtracking, and a pluggable local
rule), a randomized depth-first search whose visit sequence induces a
spanning tree, and an exact enumerator of all DFS outcomes with rational
probabilities. The enumerator is the ground-truth oracle used by the
coverage and invariance labs.

Randomness contract: every sampler takes an explicit ``random.Random``;
batch sampling derives the trial-i generator deterministically from
``(seed, i)``, so results are identical regardless of evaluation order.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph

POLICIES = ("uniform", "non_backtracking", "local_rule")

DEFAULT_ENUM_BUDGET = 10**6


class EnumerationBudgetError(RuntimeError):
    """Graph too large for exact DFS enumeration under the given budget."""


def derive_seed(seed: int, *key) -> int:
    """Deterministic 64-bit seed for trial `key` of a run seeded by `seed`."""
    material = repr((seed,) + tuple(key)).encode()
    return int.from_bytes(hashlib.blake2b(material, digest_size=8).digest(), "big")


def derive_rng(seed: int, *key) -> random.Random:
    return random.Random(derive_seed(seed, *key))


def map_trials(fn, trials: int, threads: int = 1) -> list:
    """Run fn(0..trials-1), optionally across threads.

    Results are aggregated in trial order either way, and each trial must
    seed its own RNG from its index, so the output is independent of the
    thread count.
    """
    if threads <= 1:
        return [fn(i) for i in range(trials)]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, range(trials)))


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class WalkRecord:
    """A sampled walk: `nodes` has length ell+1 and consecutive nodes are adjacent."""

    nodes: tuple[int, ...]
    policy: str
    start: int


@dataclass(frozen=True)
class SearchRecord:
    """A sampled DFS: first-visit order plus the discovered spanning tree.

    `visit_order` is a permutation of 0..n-1 starting at `root`;
    `tree_edges` holds the n-1 discovery edges as (u, v) pairs with u < v.
    """

    visit_order: tuple[int, ...]
    tree_edges: frozenset[tuple[int, int]]
    root: int


@dataclass(frozen=True)
class SampleSet:
    """m records drawn independently from one graph."""

    kind: str  # "walks" | "searches"
    items: tuple
    seed: int

    def to_dict(self) -> dict:
        items = []
        for rec in self.items:
            if self.kind == "walks":
                items.append({"nodes": list(rec.nodes), "start": rec.start})
            else:
                items.append(
                    {
                        "visit_order": list(rec.visit_order),
                        "tree_edges": [list(e) for e in sorted(rec.tree_edges)],
                        "root": rec.root,
                    }
                )
        return {"kind": self.kind, "seed": self.seed, "items": items}

    @staticmethod
    def from_dict(payload: dict) -> "SampleSet":
        kind = payload["kind"]
        items = []
        for item in payload["items"]:
            if kind == "walks":
                nodes = tuple(item["nodes"])
                items.append(
                    WalkRecord(nodes=nodes, policy="unknown", start=item["start"])
                )
            else:
                items.append(
                    SearchRecord(
                        visit_order=tuple(item["visit_order"]),
                        tree_edges=frozenset(
                            tuple(e) for e in item["tree_edges"]
                        ),
                        root=item["root"],
                    )
                )
        return SampleSet(kind=kind, items=tuple(items), seed=payload["seed"])


@dataclass(frozen=True)
class DfsOutcome:
    """One distinct DFS visit order with its exact probability."""

    record: SearchRecord
    probability: Fraction


# ---------------------------------------------------------------------------
# walks


def min_degree_weight(g: Graph, u: int, v: int) -> float:
    """Default local-rule weight w(u, v) = 1 / min(deg u, deg v).

    The minimum-degree local rule is a configurable stand-in: callers may
    supply any positive weight function of an edge instead.
    """
    return 1.0 / min(len(g.adjacency[u]), len(g.adjacency[v]))


class WalkPolicy:
    """Transition sampler for a fixed graph and walk policy."""

    def __init__(self, g: Graph, policy: str = "uniform", weight_fn=None):
        if policy not in POLICIES:
            raise ValueError(f"unknown policy {policy!r}; choose from {POLICIES}")
        self.g = g
        self.policy = policy
        self._weights: list[list[float]] | None = None
        if policy == "local_rule":
            fn = weight_fn if weight_fn is not None else min_degree_weight
            self._weights = [
                [fn(g, u, v) for v in g.adjacency[u]] for u in range(g.n)
            ]

    def start(self, rng: random.Random) -> int:
        return rng.randrange(self.g.n)

    def step(self, cur: int, prev: int | None, rng: random.Random) -> int:
        nbrs = self.g.adjacency[cur]
        if self.policy == "uniform":
            return nbrs[rng.randrange(len(nbrs))]
        if self.policy == "non_backtracking":
            if prev is None or len(nbrs) == 1:
                # a degree-1 node forces backtracking
                return nbrs[rng.randrange(len(nbrs))]
            choices = [v for v in nbrs if v != prev]
            return choices[rng.randrange(len(choices))]
        return rng.choices(nbrs, weights=self._weights[cur])[0]


def sample_walk(
    g: Graph,
    length: int,
    rng: random.Random,
    policy: str = "uniform",
    weight_fn=None,
    start: int | None = None,
) -> WalkRecord:
    """Sample a walk of `length` steps (so the record holds length+1 nodes).

    The start node is uniform over V unless forced. Requires a connected
    graph with at least one edge; a walk on a disconnected graph would be
    trapped in one component, so it is rejected up front.
    """
    if length < 1:
        raise ValueError("walk length must be >= 1")
    if not g.is_connected():
        raise ValueError("walks require a connected graph")
    if g.n < 2:
        raise ValueError("walks require at least 2 nodes")
    pol = WalkPolicy(g, policy, weight_fn)
    cur = pol.start(rng) if start is None else start
    nodes = [cur]
    prev: int | None = None
    for _ in range(length):
        nxt = pol.step(cur, prev, rng)
        nodes.append(nxt)
        prev, cur = cur, nxt
    return WalkRecord(nodes=tuple(nodes), policy=policy, start=nodes[0])


# ---------------------------------------------------------------------------
# randomized DFS


def sample_dfs(g: Graph, rng: random.Random, root: int | None = None) -> SearchRecord:
    """Sample a random depth-first search.

    The root is uniform over V unless forced. On first visiting a node its
    neighbors are put in an independently uniform random order, and
    exploration follows that order, skipping nodes already visited. The
    visit order records first visits only, so its length is exactly n.
    """
    if g.n < 1:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("searches require a connected graph")
    adjacency = g.adjacency
    if root is None:
        root = rng.randrange(g.n)
    visited = bytearray(g.n)
    visited[root] = 1
    order = [root]
    tree: list[tuple[int, int]] = []
    nbrs = list(adjacency[root])
    rng.shuffle(nbrs)
    stack = [(root, iter(nbrs))]
    push = stack.append
    pop = stack.pop
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if not visited[v]:
                visited[v] = 1
                order.append(v)
                tree.append((u, v) if u < v else (v, u))
                child_nbrs = list(adjacency[v])
                rng.shuffle(child_nbrs)
                push((v, iter(child_nbrs)))
                advanced = True
                break
        if not advanced:
            pop()
    return SearchRecord(
        visit_order=tuple(order), tree_edges=frozenset(tree), root=root
    )


def validate_search_record(g: Graph, rec: SearchRecord) -> None:
    """Check the spanning-tree and full-coverage invariants; raise on violation."""
    n = g.n
    if len(rec.visit_order) != n or sorted(rec.visit_order) != list(range(n)):
        raise ValueError("visit_order is not a permutation of 0..n-1")
    if rec.visit_order[0] != rec.root:
        raise ValueError("visit_order does not start at the root")
    if len(rec.tree_edges) != n - 1:
        raise ValueError(f"expected {n - 1} tree edges, got {len(rec.tree_edges)}")
    edge_set = g.edges()
    if not rec.tree_edges <= edge_set:
        raise ValueError("tree edge not present in the graph")
    # acyclic + connected via union-find over the n-1 edges
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in rec.tree_edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ValueError("tree edges contain a cycle")
        parent[ru] = rv
    if n > 0 and len({find(v) for v in range(n)}) != 1:
        raise ValueError("tree edges do not connect all nodes")
    # orient tree edges from earlier- to later-visited endpoint: every
    # non-root node must then have exactly one parent edge, the root none
    pos = {v: i for i, v in enumerate(rec.visit_order)}
    parent_edges = [0] * n
    for u, v in rec.tree_edges:
        child = v if pos[u] < pos[v] else u
        parent_edges[child] += 1
    for v in range(n):
        expected = 0 if v == rec.root else 1
        if parent_edges[v] != expected:
            raise ValueError(
                f"node {v} has {parent_edges[v]} earlier-visited tree "
                f"neighbors, expected {expected}"
            )


# ---------------------------------------------------------------------------
# exact DFS enumeration
#
# Branches on the uniform choice among the currently-unvisited neighbors of
# the stack top. This is distribution-equal to drawing an independent
# uniform neighbor permutation per vertex up front: conditioned on any
# prefix, the first not-yet-visited entry remaining in a uniformly random
# permutation is uniform over the not-yet-visited neighbors.


def enumerate_dfs(g: Graph, budget: int = DEFAULT_ENUM_BUDGET) -> list[DfsOutcome]:
    """Enumerate every DFS outcome with its exact rational probability.

    Outcomes are keyed by visit order (which determines the tree), and
    their probabilities sum to exactly 1. Raises EnumerationBudgetError
    once more than `budget` branch states have been expanded: the graph is
    too large for exact enumeration.
    """
    if g.n < 1:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("exact enumeration requires a connected graph")
    adjacency = g.adjacency
    n = g.n
    outcomes: dict[tuple[int, ...], list] = {}
    states = 0

    def expand(order, visited, stack, tree, prob):
        nonlocal states
        states += 1
        if states > budget:
            raise EnumerationBudgetError(
                f"too large for exact enumeration (budget {budget} exceeded)"
            )
        stack = list(stack)
        while stack:
            u = stack[-1]
            admissible = [w for w in adjacency[u] if w not in visited]
            if not admissible:
                stack.pop()
                continue
            share = prob / len(admissible)
            for w in admissible:
                expand(
                    order + (w,),
                    visited | {w},
                    stack + [w],
                    tree + ((u, w) if u < w else (w, u),),
                    share,
                )
            return
        entry = outcomes.get(order)
        if entry is None:
            outcomes[order] = [prob, tree]
        else:
            # a visit order determines its discovery tree
            assert entry[1] == tree
            entry[0] += prob

    for root in range(n):
        expand((root,), frozenset((root,)), (root,), (), Fraction(1, n))

    result = []
    for order, (prob, tree) in sorted(outcomes.items()):
        rec = SearchRecord(
            visit_order=order,
            tree_edges=frozenset(tuple(e) for e in tree),
            root=order[0],
        )
        result.append(DfsOutcome(record=rec, probability=prob))
    return result


# ---------------------------------------------------------------------------
# batch sampling


def sample_set(
    g: Graph,
    kind: str,
    m: int,
    seed: int,
    length: int | None = None,
    policy: str = "uniform",
    weight_fn=None,
) -> SampleSet:
    """Draw m independent records; trial i uses an RNG derived from (seed, i)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if kind not in ("walks", "searches"):
        raise ValueError(f"kind must be 'walks' or 'searches', got {kind!r}")
    items = []
    if kind == "walks":
        ell = g.n if length is None else length
        for i in range(m):
            items.append(
                sample_walk(g, ell, derive_rng(seed, i), policy, weight_fn)
            )
    else:
        for i in range(m):
            items.append(sample_dfs(g, derive_rng(seed, i)))
    return SampleSet(kind=kind, items=tuple(items), seed=seed)
