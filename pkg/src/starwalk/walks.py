"""Exact walk counting on graphs via integer vector propagation.

Walk counts grow like lambda_1^k, so 64-bit arithmetic overflows around
k = 60 even on ten-vertex trees; everything here runs on Python's unbounded
integers and never touches floating point.

The trace sequence (closed walks of every length up to K) propagates one
counting vector per start vertex. To keep that affordable at a few hundred
vertices, the n start vectors are packed into one big integer each, using a
fixed limb of L bits per coordinate: adding packed integers adds all
coordinates at once, and no carry can cross a limb boundary because every
entry of A^k is at most Delta^k < 2^L. This is the same per-start-vertex
iteration, O(n * m * K) limb operations in total, just batched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import Graph

CLOSED_TOTAL = "closed_total"
CLOSED_AT_VERTEX = "closed_at_vertex"
ALL_WALKS = "all_walks"


@dataclass(frozen=True)
class MomentSequence:
    """values[k] = a walk count of length k, k = 0..K; kind says which."""

    kind: str
    values: tuple[int, ...]

    @property
    def max_k(self) -> int:
        return len(self.values) - 1

    def to_json_obj(self) -> dict:
        # exact integers serialize as decimal strings: they routinely
        # exceed every fixed-width and double-representable range
        return {"kind": self.kind, "values": [str(v) for v in self.values]}


def closed_walk_counts(g: Graph, max_k: int) -> MomentSequence:
    """Trace of A^k for k = 0..max_k, i.e. closed k-walk counts."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    n = g.n
    if n == 0:
        return MomentSequence(CLOSED_TOTAL, (0,) * (max_k + 1))
    limb = max_k * max(1, g.max_degree()).bit_length() + 4
    mask = (1 << limb) - 1
    rows = [1 << (u * limb) for u in range(n)]
    values = [n]
    adj = g.adj
    for _ in range(max_k):
        rows = [sum(rows[w] for w in nbrs) for nbrs in adj]
        values.append(sum((rows[u] >> (u * limb)) & mask for u in range(n)))
    return MomentSequence(CLOSED_TOTAL, tuple(values))


def closed_walk_counts_at(g: Graph, v: int, max_k: int) -> MomentSequence:
    """Closed k-walk counts from a single start vertex: (A^k)_{v,v}."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    x = [0] * g.n
    x[v] = 1
    values = [1]
    adj = g.adj
    for _ in range(max_k):
        x = [sum(x[w] for w in nbrs) for nbrs in adj]
        values.append(x[v])
    return MomentSequence(CLOSED_AT_VERTEX, tuple(values))


def all_walk_counts(g: Graph, max_k: int) -> MomentSequence:
    """Grand sum of A^k (walks of length k between all vertex pairs)."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    x = [1] * g.n
    values = [g.n]
    adj = g.adj
    for _ in range(max_k):
        x = [sum(x[w] for w in nbrs) for nbrs in adj]
        values.append(sum(x))
    return MomentSequence(ALL_WALKS, tuple(values))


def brute_force_closed_walks(g: Graph, v: int, k: int) -> int:
    """Closed k-walks from v by explicit enumeration. Test oracle only:
    guarded to tiny sizes because the walk tree is visited node by node."""
    if g.n > 8:
        raise ValueError("brute force capped at 8 vertices")
    if not (0 <= k <= 10):
        raise ValueError("brute force capped at k <= 10")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if k == 0:
        return 1
    adj = g.adj

    def count(cur: int, left: int) -> int:
        if left == 1:
            return 1 if v in adj[cur] else 0
        return sum(count(w, left - 1) for w in adj[cur])

    return count(v, k)
