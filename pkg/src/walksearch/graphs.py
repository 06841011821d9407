"""Undirected simple graphs with integer node ids, plus generators and edge-list I/O.

Graphs are immutable after construction: node ids are exactly 0..n-1,
neighbor lists are kept sorted, and there are no self-loops or parallel
edges. All randomness in the generators enters through an explicit seed.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass


class GraphParseError(ValueError):
    """Raised when edge-list text cannot be parsed into a graph."""


_HEADER_RE = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph stored as sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph on nodes 0..n-1 from an iterable of (u, v) pairs.

        Duplicate edges (in either orientation) are merged. Self-loops and
        out-of-range ids raise ValueError.
        """
        if n < 0:
            raise ValueError(f"node count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(row)) for row in nbrs)
        return Graph(n=n, adjacency=adjacency, edge_count=len(seen))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def edges(self) -> frozenset[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v."""
        return frozenset(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    def neighbor_sets(self) -> list[set[int]]:
        """Adjacency as a list of sets, for O(1) membership tests."""
        return [set(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        if len(row) > len(self.adjacency[v]):
            row, u, v = self.adjacency[v], v, u
        return v in row

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.n

    def validate(self) -> None:
        """Re-check the structural invariants; raises ValueError on violation."""
        deg_sum = 0
        for u, row in enumerate(self.adjacency):
            deg_sum += len(row)
            if list(row) != sorted(set(row)):
                raise ValueError(f"neighbor list of {u} not sorted/deduplicated")
            for v in row:
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric edge ({u}, {v})")
        if deg_sum != 2 * self.edge_count:
            raise ValueError("edge_count does not match half the degree sum")


@dataclass(frozen=True)
class DegreeStats:
    """Degree summary: max degree, average degree, and edges-per-node ratio."""

    d_max: int
    avg_deg: float
    sparsity_c: float


def degree_stats(g: Graph) -> DegreeStats:
    d_max = max(g.degrees(), default=0)
    n = g.n if g.n else 1
    return DegreeStats(
        d_max=d_max,
        avg_deg=2.0 * g.edge_count / n,
        sparsity_c=g.edge_count / n,
    )


# ---------------------------------------------------------------------------
# edge-list I/O
#
# Format: one "u v" pair per line, 0-based ids. Lines starting with '#' are
# comments; a "# n=<k>" line declares the node count (otherwise it is
# 1 + the largest id seen). The writer emits the header and edges with
# u < v, sorted.


def load_edge_list(text: str) -> Graph:
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER_RE.match(line)
            if m:
                declared_n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(
                f"line {lineno}: expected 'u v', got {line!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: non-integer node id in {line!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative node id in {line!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop {u} {v}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise GraphParseError(
            f"declared n={n} is smaller than largest node id {max_id}"
        )
    return Graph.from_edges(n, edges)


def save_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(save_edge_list(g))


# ---------------------------------------------------------------------------
# structural operations


def relabel(g: Graph, perm) -> Graph:
    """Apply a permutation of 0..n-1 to the node ids.

    perm[i] is the new id of node i. The result is isomorphic to g.
    """
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def inverse_permutation(perm) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place g and h side by side; h's ids are offset by g.n."""
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# generators


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, n))
    )


def star_graph(n: int) -> Graph:
    """Node 0 is the hub; nodes 1..n-1 are leaves."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n nodes (Pruefer decoding)."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, ())
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


ER_MAX_RETRIES = 1000


def er_connected(n: int, avg_deg: float, seed: int) -> Graph:
    """G(n, p) with p = avg_deg / (n - 1), resampled until connected.

    Deterministic given the seed. Raises RuntimeError if no connected
    sample appears within ER_MAX_RETRIES attempts.
    """
    if n < 2:
        raise ValueError("er_connected needs n >= 2")
    p = min(1.0, avg_deg / (n - 1))
    rng = random.Random(seed)
    for _ in range(ER_MAX_RETRIES):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError(
        f"er_connected({n}, {avg_deg}): no connected sample in "
        f"{ER_MAX_RETRIES} attempts"
    )


def hex_chain(k: int) -> Graph:
    """Chain of k six-cycles, each carrying one degree-1 pendant.

    Unit i occupies nodes 7i..7i+6: a hexagon on 7i..7i+5 with the pendant
    7i+6 attached at 7i. Consecutive hexagons are bridged by an edge from
    node 7i+3 to node 7(i+1)+5, keeping the maximum degree at 3.
    """
    if k < 1:
        raise ValueError("hex_chain needs k >= 1")
    edges = []
    for i in range(k):
        base = 7 * i
        for j in range(6):
            edges.append((base + j, base + (j + 1) % 6))
        edges.append((base, base + 6))
        if i + 1 < k:
            edges.append((base + 3, base + 7 + 5))
    return Graph.from_edges(7 * k, edges)


FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "random_tree",
    "er_connected",
    "hex_chain",
)


def gen_family(family: str, seed: int = 0, **params) -> Graph:
    """Generate a named graph family.

    Supported descriptors: path(n), cycle(n), complete(n), star(n),
    random_tree(n), er_connected(n, avg_deg), hex_chain(k). The seed only
    matters for the random families.
    """
    if family == "path":
        return path_graph(params["n"])
    if family == "cycle":
        return cycle_graph(params["n"])
    if family == "complete":
        return complete_graph(params["n"])
    if family == "star":
        return star_graph(params["n"])
    if family == "random_tree":
        return random_tree(params["n"], seed)
    if family == "er_connected":
        return er_connected(params["n"], params["avg_deg"], seed)
    if family == "hex_chain":
        return hex_chain(params["k"])
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
