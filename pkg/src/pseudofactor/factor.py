"""Pseudo factors: component classification, validation, and the degree-window
spanning-subgraph decision.

A pseudo [2,b]-factor is a spanning subgraph in which every component on at
least three vertices has all internal degrees in [2, b]; the remaining
components are single edges or single vertices (the "small" components, the
quantity this package minimizes and bounds).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import CapacityError, FactorError
from .graph import Edge, Graph, norm_edge, to_mask

#: largest block size accepted by the exact degree-window spanning search
SPANNING_LIMIT = 20


class ComponentClass(enum.Enum):
    LARGE = "large"   # >= 3 vertices, all degrees in [2, b]
    EDGE = "edge"     # exactly one chosen edge
    VERTEX = "vertex"  # isolated in the factor


@dataclass(frozen=True)
class FactorComponent:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    kind: ComponentClass


@dataclass(frozen=True)
class FactorSummary:
    small_count: int
    large_count: int
    b: int


@dataclass(frozen=True, repr=False)
class PseudoFactor:
    """A validated pseudo [2,b]-factor: a graph, a chosen edge subset, and the
    classified components of the spanning subgraph they induce."""

    graph: Graph
    edges: tuple[Edge, ...]
    components: tuple[FactorComponent, ...]
    b: int

    @classmethod
    def build(cls, g: Graph, edges, b: int) -> "PseudoFactor":
        """Validate ``edges`` as a pseudo [2,b]-factor of ``g``.

        Raises FactorError naming the offending component and vertex when a
        component on >= 3 vertices has a degree outside [2, b], and on edges
        not present in ``g``.
        """
        if b < 2:
            raise ValueError(f"b must be at least 2, got {b}")
        chosen: set[Edge] = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if e[1] not in g.adj[e[0]]:
                raise FactorError(f"chosen edge {e} is not an edge of the graph")
            chosen.add(e)
        chosen_adj: list[list[int]] = [[] for _ in range(g.n)]
        for u, v in sorted(chosen):
            chosen_adj[u].append(v)
            chosen_adj[v].append(u)

        components: list[FactorComponent] = []
        seen = [False] * g.n
        for start in range(g.n):
            if seen[start]:
                continue
            stack, comp = [start], [start]
            seen[start] = True
            while stack:
                v = stack.pop()
                for w in chosen_adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comp.sort()
            comp_set = set(comp)
            comp_edges = tuple(
                sorted(e for e in chosen if e[0] in comp_set and e[1] in comp_set)
            )
            if len(comp) == 1:
                kind = ComponentClass.VERTEX
            elif len(comp) == 2:
                kind = ComponentClass.EDGE
            else:
                kind = ComponentClass.LARGE
                for v in comp:
                    d = len(chosen_adj[v])
                    if d < 2 or d > b:
                        raise FactorError(
                            f"component {tuple(comp)}: vertex {v} has degree {d}, "
                            f"outside [2, {b}]",
                            component=comp,
                            vertex=v,
                        )
            components.append(FactorComponent(tuple(comp), comp_edges, kind))
        return cls(graph=g, edges=tuple(sorted(chosen)), components=tuple(components), b=b)

    @property
    def small_count(self) -> int:
        return sum(1 for c in self.components if c.kind is not ComponentClass.LARGE)

    @property
    def large_count(self) -> int:
        return sum(1 for c in self.components if c.kind is ComponentClass.LARGE)

    def summary(self) -> FactorSummary:
        return FactorSummary(self.small_count, self.large_count, self.b)

    def __repr__(self):
        return (
            f"PseudoFactor(n={self.graph.n}, chosen={len(self.edges)}, "
            f"small={self.small_count}, large={self.large_count}, b={self.b})"
        )


def validate_pseudo_factor(g: Graph, edges, b: int) -> FactorSummary:
    """Summary of ``edges`` as a pseudo [2,b]-factor of ``g``; raises
    FactorError if any invariant fails."""
    return PseudoFactor.build(g, edges, b).summary()


def is_2b_subgraph(g: Graph, vertices, edges, b: int) -> bool:
    """True iff every vertex of ``vertices`` has degree in [2, b] counting only
    ``edges`` (which must all be graph edges inside ``vertices``)."""
    vs = frozenset(vertices)
    deg = dict.fromkeys(vs, 0)
    for u, v in set(norm_edge(*e) for e in edges):
        if u not in vs or v not in vs or v not in g.adj[u]:
            return False
        deg[u] += 1
        deg[v] += 1
    return all(2 <= d <= b for d in deg.values())


# ---------------------------------------------------------------------------
# degree-window spanning subgraphs


def spanning_in_range(g: Graph, s, b: int, limit: int = SPANNING_LIMIT):
    """An edge subset of G[s] giving every vertex of ``s`` degree in [2, b],
    or None if none exists.

    Memoized search over the vertices in deficiency order (lowest induced
    degree first): a vertex decides its edges toward later vertices, and any
    vertex whose remaining possible degree cannot reach 2 fails the branch
    fast. Exact; blocks larger than ``limit`` raise CapacityError.
    """
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    verts = sorted(set(s))
    k = len(verts)
    if k < 3:
        return None
    if k > limit:
        raise CapacityError(f"spanning search limited to {limit} vertices, got {k}")
    mask = to_mask(verts)
    induced_deg = {v: (g.adj_bits[v] & mask).bit_count() for v in verts}
    if min(induced_deg.values()) < 2:
        return None
    induced_edges = [e for e in g.edges if e[0] in induced_deg and e[1] in induced_deg]
    if max(induced_deg.values()) <= b:
        return tuple(induced_edges)

    order = sorted(verts, key=lambda v: (induced_deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    fwd = [sorted(pos[w] for w in g.adj[order[i]] if w in pos and pos[w] > i) for i in range(k)]
    # pot[i][t]: neighbors of order[t] at positions > i (still undecided once
    # position i is fully processed)
    nbr_pos = [sorted(pos[w] for w in g.adj[order[t]] if w in pos) for t in range(k)]
    pot = [[sum(1 for p in nbr_pos[t] if p > i) for t in range(k)] for i in range(-1, k)]

    failed: set[tuple[int, tuple[int, ...]]] = set()

    def search(i: int, back: tuple[int, ...]):
        # back[j] = degree already fixed for order[i + j]
        if i == k:
            return ()
        key = (i, back)
        if key in failed:
            return None
        base = back[0]
        options = fwd[i]
        lo = max(0, 2 - base)
        hi = min(b - base, len(options))
        for r in range(lo, hi + 1):
            for combo in itertools.combinations(options, r):
                new_back = list(back[1:])
                ok = True
                for j in combo:
                    t = j - (i + 1)
                    new_back[t] += 1
                    if new_back[t] > b:
                        ok = False
                        break
                if ok:
                    for t in range(k - i - 1):
                        if new_back[t] + pot[i + 1][i + 1 + t] < 2:
                            ok = False
                            break
                if ok:
                    sub = search(i + 1, tuple(new_back))
                    if sub is not None:
                        return tuple(norm_edge(order[i], order[j]) for j in combo) + sub
        failed.add(key)
        return None

    result = search(0, (0,) * k)
    return None if result is None else tuple(sorted(result))


def has_deg_range_spanning(g: Graph, s, b: int, limit: int = SPANNING_LIMIT) -> bool:
    """True iff G[s] has a spanning subgraph with every degree in [2, b].

    Always False for |s| < 3 (such a set cannot form a large component)."""
    return spanning_in_range(g, s, b, limit=limit) is not None


# ---------------------------------------------------------------------------
# serialization


def factor_to_text(pf: PseudoFactor) -> str:
    """One line per component:
    ``component <k>: class=<large|edge|vertex> vertices=<list> edges=<list>``."""
    lines = []
    for k, comp in enumerate(pf.components):
        vs = ",".join(str(v) for v in comp.vertices)
        es = ",".join(f"{u}-{v}" for u, v in comp.edges)
        lines.append(f"component {k}: class={comp.kind.value} vertices={vs} edges={es}")
    return "\n".join(lines)


def factor_to_json_dict(pf: PseudoFactor) -> dict:
    return {
        "b": pf.b,
        "small_count": pf.small_count,
        "large_count": pf.large_count,
        "components": [
            {
                "class": comp.kind.value,
                "vertices": list(comp.vertices),
                "edges": [list(e) for e in comp.edges],
            }
            for comp in pf.components
        ],
    }
