"""Edge-set recovery from search sequences and their adjacency encodings.

Every 1 entry of an adjacency encoding names one true edge (the current
node and the node j steps back). Unioning those pairs across a sample of
searches recovers edges; with window s >= n+1 a single search already
sees every earlier position, so all edges among visited nodes appear.
Recovery can only ever miss edges, never invent them, as long as the
encodings were computed from the actual graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encodings import adjacency_encoding
from .graphs import Graph
from .samplers import SampleSet


@dataclass(frozen=True)
class ReconstructionReport:
    recovered_edges: frozenset[tuple[int, int]]
    missing: frozenset[tuple[int, int]]
    spurious: frozenset[tuple[int, int]]
    exact: bool

    def to_dict(self, n: int, m: int, s: int) -> dict:
        return {
            "n": n,
            "m": m,
            "s": s,
            "missing_count": len(self.missing),
            "spurious_count": len(self.spurious),
            "exact": self.exact,
        }


def reconstruct_from_searches(
    seqs, encodings, s: int, n: int | None = None
) -> frozenset[tuple[int, int]]:
    """Union of edges named by the encodings' 1 entries.

    `seqs` holds node sequences, `encodings` the matching adjacency
    matrices, each shaped (len(seq), s-1) for the same window s. The
    entry at row i, column j-1 asserts the edge (seq[i], seq[i-j]).
    """
    if len(seqs) != len(encodings):
        raise ValueError("need one encoding per sequence")
    recovered: set[tuple[int, int]] = set()
    for seq, enc in zip(seqs, encodings):
        seq = tuple(seq)
        if enc.shape != (len(seq), s - 1):
            raise ValueError(
                f"encoding shape {enc.shape} does not match "
                f"({len(seq)}, {s - 1})"
            )
        if n is not None and any(not 0 <= w < n for w in seq):
            raise ValueError("node id out of range")
        for i in range(1, len(seq)):
            for j in range(1, min(s - 1, i) + 1):
                if enc[i, j - 1]:
                    a, b = seq[i], seq[i - j]
                    recovered.add((a, b) if a < b else (b, a))
    return frozenset(recovered)


def verify_reconstruction(g: Graph, sset: SampleSet, s: int) -> ReconstructionReport:
    """Encode each search of `sset` against g, reconstruct, and diff vs E."""
    if sset.kind != "searches":
        raise ValueError("reconstruction expects a search sample set")
    seqs = [rec.visit_order for rec in sset.items]
    encs = [adjacency_encoding(g, seq, s) for seq in seqs]
    recovered = reconstruct_from_searches(seqs, encs, s, n=g.n)
    true_edges = g.edges()
    missing = true_edges - recovered
    spurious = recovered - true_edges
    return ReconstructionReport(
        recovered_edges=recovered,
        missing=frozenset(missing),
        spurious=frozenset(spurious),
        exact=not missing and not spurious,
    )
