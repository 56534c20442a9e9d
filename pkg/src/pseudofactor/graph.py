"""Simple undirected graphs and the exact search routines everything else uses.

Vertices are dense integer indices 0..n-1, so vertex subsets double as
bitmasks inside the search kernels. Graphs are immutable after construction
and every operation here is a pure function, which makes values safe to share
across concurrent workers.

All searches are exact and refuse (with CapacityError) instances above their
documented limits instead of ever returning an approximate answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, GraphParseError

Edge = tuple[int, int]

#: largest vertex count accepted by the exact independence search
INDEPENDENCE_LIMIT = 40
#: largest vertex count accepted by the exhaustive longest-path search
LONGEST_PATH_LIMIT = 18


def norm_edge(u: int, v: int) -> Edge:
    """Unordered edge as an ordered pair."""
    return (u, v) if u < v else (v, u)


def to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, repr=False)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    ``adj`` and ``adj_bits`` are the same adjacency as frozensets and as
    bitmasks; both are derived from ``edges`` at construction time.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...]
    adj_bits: tuple[int, ...]

    @classmethod
    def build(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normed: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            normed.add(norm_edge(u, v))
        edge_tuple = tuple(sorted(normed))
        neigh: list[set[int]] = [set() for _ in range(n)]
        for u, v in edge_tuple:
            neigh[u].add(v)
            neigh[v].add(u)
        adj = tuple(frozenset(s) for s in neigh)
        adj_bits = tuple(to_mask(s) for s in neigh)
        return cls(n=n, edges=edge_tuple, adj=adj, adj_bits=adj_bits)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


# ---------------------------------------------------------------------------
# parsing / serialization


def load_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    A header line ``n <count>`` fixes the vertex count and must precede all
    edges; every other significant line is ``u v``. ``#`` starts a comment,
    blank lines are skipped, duplicate edges collapse.
    """
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate vertex-count header")
            if len(parts) != 2:
                raise GraphParseError(f"line {lineno}: header must be 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: vertex count must be non-negative")
            continue
        if n is None:
            raise GraphParseError(f"line {lineno}: edge before the 'n <count>' header")
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph.build(n, edges)


def load_dimacs(text: str) -> Graph:
    """Parse DIMACS: ``c`` comments, one ``p edge <n> <m>`` line, ``e u v``
    lines with 1-based vertices (converted to 0-based)."""
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: vertex count {parts[2]!r} is not an integer") from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: vertex count must be non-negative")
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before the problem line")
            if len(parts) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphParseError("missing 'p edge <n> <m>' line")
    return Graph.build(n, edges)


def load_graph_text(text: str) -> Graph:
    """Parse a graph file, detecting the format from its first significant line."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0]
        if head in ("p", "c", "e"):
            return load_dimacs(text)
        break
    return load_edge_list(text)


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_graph_text(fh.read())


def to_edge_list(g: Graph, comments: tuple[str, ...] = ()) -> str:
    """Render ``g`` in the edge-list format (round-trips through load_edge_list)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exact parameters


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(len(g.adj[v]) for v in range(g.n))


def _greedy_independent(adj_bits, mask: int) -> int:
    """Independent set found by repeatedly taking a minimum-degree vertex."""
    chosen = 0
    remaining = mask
    while remaining:
        v = min(bits(remaining), key=lambda x: (adj_bits[x] & remaining).bit_count())
        chosen |= 1 << v
        remaining &= ~(adj_bits[v] | (1 << v))
    return chosen


def maximum_independent_set(g: Graph, within=None, limit: int = INDEPENDENCE_LIMIT) -> frozenset[int]:
    """A maximum independent set of g (restricted to ``within`` if given).

    Exact branch and bound: branch on a highest-degree vertex (in/out of the
    set), prune with the trivial size bound, seed with the min-degree greedy
    set. Guaranteed correct for every instance it accepts; instances above
    ``limit`` vertices raise CapacityError.
    """
    mask = g.full_mask if within is None else to_mask(within)
    if mask.bit_count() > limit:
        raise CapacityError(
            f"independence search limited to {limit} vertices, got {mask.bit_count()}"
        )
    adj = g.adj_bits
    best_set = _greedy_independent(adj, mask)
    best = best_set.bit_count()

    def expand(cand: int, size: int, chosen: int):
        nonlocal best, best_set
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best, best_set = size, chosen
            return
        v = max(bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        bit = 1 << v
        expand(cand & ~(adj[v] | bit), size + 1, chosen | bit)
        expand(cand & ~bit, size, chosen)

    expand(mask, 0, 0)
    return frozenset(bits(best_set))


def independence_number(g: Graph, within=None, limit: int = INDEPENDENCE_LIMIT) -> int:
    return len(maximum_independent_set(g, within=within, limit=limit))


def _reachable(adj_bits, start: int, avail: int) -> int:
    """Bitmask of vertices in ``avail`` reachable from ``start`` (start excluded)."""
    seen = adj_bits[start] & avail
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj_bits[v]
        frontier = nxt & avail & ~seen
        seen |= frontier
    return seen


def longest_path(g: Graph, within=None, limit: int = LONGEST_PATH_LIMIT) -> tuple[int, ...]:
    """A path (distinct vertices, consecutive adjacent) with the most vertices.

    Exhaustive DFS from every start vertex, pruned by the number of still
    reachable unvisited vertices. Exponential; refuses instances above
    ``limit`` vertices.
    """
    mask = g.full_mask if within is None else to_mask(within)
    k = mask.bit_count()
    if k == 0:
        raise ValueError("longest path of an empty vertex set is undefined")
    if k > limit:
        raise CapacityError(f"longest-path search limited to {limit} vertices, got {k}")
    adj = g.adj_bits
    best: list[int] = []
    path: list[int] = []

    def dfs(v: int, avail: int):
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        ext = adj[v] & avail
        if not ext:
            return
        if len(path) + _reachable(adj, v, avail).bit_count() <= len(best):
            return
        for u in bits(ext):
            path.append(u)
            dfs(u, avail & ~(1 << u))
            path.pop()

    for s in bits(mask):
        path = [s]
        dfs(s, mask & ~(1 << s))
    return tuple(best)


def endpoint_cycle(g: Graph, path, within=None):
    """Cycle made of the path segment from its first endpoint u to u's
    farthest neighbor on the path, closed by that chord.

    Requires ``path`` to be maximal at u (all of u's neighbors lie on it),
    which any longest path satisfies. Returns (vertices, edges); the cycle
    always contains u and all of u's neighbors. Returns None when u has
    fewer than two neighbors.
    """
    path = tuple(path)
    u = path[0]
    nbrs = g.adj[u] if within is None else g.adj[u] & frozenset(within)
    if len(nbrs) < 2:
        return None
    pos = {v: i for i, v in enumerate(path)}
    if not all(w in pos for w in nbrs):
        raise ValueError("path is not maximal at its endpoint")
    far = max(pos[w] for w in nbrs)
    cyc = path[: far + 1]
    edges = tuple(norm_edge(cyc[i], cyc[i + 1]) for i in range(len(cyc) - 1))
    edges += (norm_edge(u, cyc[-1]),)
    vertices = frozenset(cyc)
    assert nbrs <= vertices and u in vertices
    return vertices, edges


def connected_components(g: Graph, within=None) -> list[frozenset[int]]:
    """Partition of ``within`` (default: all vertices) into maximal connected
    sets of the induced subgraph, ordered by smallest member."""
    mask = g.full_mask if within is None else to_mask(within)
    adj = g.adj_bits
    comps: list[frozenset[int]] = []
    rest = mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = (1 << start) | _reachable(adj, start, rest)
        comps.append(frozenset(bits(comp)))
        rest &= ~comp
    return comps
