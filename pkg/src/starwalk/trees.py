"""Graph construction: paths, starlike trees, coalescence, free-tree census.

Graphs are immutable adjacency-list structures over vertices 0..n-1. The only
builders exposed mutate nothing; operations like coalescence return fresh
graphs. Starlike trees fix a layout convention (center is vertex 0, branches
laid out consecutively, nondecreasing, each branch starting at its
center-adjacent vertex) so that walk counts at addressable vertices are
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .partitions import Partition


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)


def make_path(n: int) -> Graph:
    """Path on n vertices, 0-1-...-(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class StarlikeTree:
    """A tree whose only possible high-degree vertex is the center.

    branches are the path lengths hanging off vertex 0. With fewer than three
    branches this degenerates to a plain path; it is still represented the
    same way so the ordering machinery can treat paths uniformly.
    """

    branches: Partition
    graph: Graph
    center: int = 0

    @property
    def n(self) -> int:
        return self.graph.n

    def branch_roots(self) -> tuple[int, ...]:
        """First vertex (center-adjacent) of each branch, in branch order."""
        roots = []
        nxt = 1
        for a in self.branches:
            roots.append(nxt)
            nxt += a
        return tuple(roots)

    def __str__(self) -> str:
        return f"S({self.branches})"


def make_starlike(branches: Partition | Sequence[int]) -> StarlikeTree:
    """Build S(a_1,...,a_k): k paths of those lengths glued at a new center."""
    if not isinstance(branches, Partition):
        branches = Partition(branches)
    edges = []
    nxt = 1
    for a in branches:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return StarlikeTree(branches, Graph.from_edges(nxt, edges))


def coalescence(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Glue disjoint copies of g and h by identifying g's u with h's v.

    Vertices of g keep their labels; the surviving vertices of h follow.
    """
    if not (0 <= u < g.n):
        raise ValueError(f"u={u} out of range")
    if not (0 <= v < h.n):
        raise ValueError(f"v={v} out of range")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return g.n + (w if w < v else w - 1)

    edges = g.edges() + [(relabel(a), relabel(b)) for a, b in h.edges()]
    return Graph.from_edges(g.n + h.n - 1, edges)


def attach_two_paths(g: Graph, u: int, p: int, q: int) -> Graph:
    """Attach two pendent paths with p and q edges at vertex u of g."""
    if not (0 <= u < g.n):
        raise ValueError(f"u={u} out of range")
    if p < 0 or q < 0:
        raise ValueError("path lengths must be nonnegative")
    edges = g.edges()
    nxt = g.n
    for length in (p, q):
        prev = u
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def tree_centers(g: Graph) -> tuple[int, ...]:
    """The one or two middle vertices of a tree, by iterative leaf peeling."""
    if not is_tree(g):
        raise ValueError("centers are defined for trees only")
    if g.n <= 2:
        return tuple(range(g.n))
    degree = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if degree[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            degree[leaf] = 0
            for w in g.adj[leaf]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(g: Graph, root: int, parent: int) -> tuple:
    children = [w for w in g.adj[root] if w != parent]
    return tuple(sorted(_rooted_code(g, c, root) for c in children))


def canonical_code(g: Graph) -> tuple:
    """Isomorphism-invariant code of a free tree (sorted-subtree encoding,
    rooted at the center, or at the central edge when there are two)."""
    centers = tree_centers(g)
    if len(centers) == 1:
        return ("c", _rooted_code(g, centers[0], -1))
    a, b = centers
    return ("e", tuple(sorted((_rooted_code(g, a, b), _rooted_code(g, b, a)))))


def is_starlike(g: Graph) -> bool:
    """Tree with at most one vertex of degree >= 3 (paths count)."""
    return is_tree(g) and sum(1 for v in range(g.n) if g.degree(v) >= 3) <= 1


def starlike_branches(g: Graph) -> Optional[Partition]:
    """Recover branch lengths from a starlike tree, or None if not starlike.

    Paths are reported from one end, i.e. P_n maps to the single branch
    (n-1); the one-vertex tree has no branches and returns None.
    """
    if not is_starlike(g):
        return None
    high = [v for v in range(g.n) if g.degree(v) >= 3]
    if high:
        center = high[0]
    elif g.n >= 2:
        center = next(v for v in range(g.n) if g.degree(v) == 1)
    else:
        return None
    lengths = []
    for start in g.adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in g.adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return Partition(lengths)


def enumerate_free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Grown by attaching a leaf everywhere on each (n-1)-tree and deduplicating
    canonical codes; every n-tree arises this way since removing any leaf of
    it yields an (n-1)-tree. Capped at n <= 12: class counts stay small but
    the census cost grows quickly past that.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 12:
        raise ValueError("free-tree census capped at n <= 12")
    level = {canonical_code(make_path(1)): make_path(1)}
    for size in range(2, n + 1):
        nxt: dict[tuple, Graph] = {}
        for tree in level.values():
            edges = tree.edges()
            for v in range(tree.n):
                candidate = Graph.from_edges(size, edges + [(v, size - 1)])
                code = canonical_code(candidate)
                if code not in nxt:
                    nxt[code] = candidate
        level = nxt
    return [level[code] for code in sorted(level)]


def parse_tree_spec(text: str) -> StarlikeTree:
    """Parse a descriptor like "S(1,2,3)" into a starlike tree."""
    s = text.strip()
    if not (s.startswith("S(") and s.endswith(")")):
        raise ValueError(f"malformed tree descriptor {text!r}")
    from .partitions import parse_partition

    inner = s[2:-1]
    branches, _ = parse_partition(inner)
    return make_starlike(branches)


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines; blank lines and # comments ok."""
    edges = []
    max_v = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id in {raw!r}")
        edges.append((u, v))
        max_v = max(max_v, u, v)
    return Graph.from_edges(max_v + 1, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges())
