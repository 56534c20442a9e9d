"""Exact minimum number of small (edge/vertex) components over all pseudo
[2,b]-factors, plus an independent cross-check oracle.

The main solver is a dynamic program over vertex subsets: a factor is a
partition of V into blocks, where a block costs 0 when it carries a spanning
subgraph with all degrees in [2, b], costs 1 when it is an adjacent pair or a
singleton, and is infeasible otherwise. Each block is forced to contain the
lowest-indexed remaining vertex, so every partition is enumerated exactly
once. The cross-check enumerates set partitions directly and decides block
feasibility by its own edge-subset search; it deliberately shares no solver
code with the DP.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .factor import PseudoFactor, spanning_in_range
from .graph import Edge, Graph, bits, norm_edge

#: largest instance accepted by the subset DP
ORACLE_LIMIT = 15
#: largest instance accepted by the partition-enumeration cross-check
NAIVE_LIMIT = 9


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: PseudoFactor
    blocks: tuple[tuple[int, ...], ...]


def _block_costs(g: Graph, b: int) -> list[int | None]:
    """cost[mask] for every vertex subset: 0 (supports a degree-[2,b] spanning
    subgraph), 1 (adjacent pair or singleton), or None (cannot be a block)."""
    full = g.full_mask
    cost: list[int | None] = [None] * (full + 1)
    for v in range(g.n):
        cost[1 << v] = 1
    for u, v in g.edges:
        cost[(1 << u) | (1 << v)] = 1
    adjb = g.adj_bits
    for mask in range(1, full + 1):
        if mask.bit_count() < 3:
            continue
        degs = [(adjb[v] & mask).bit_count() for v in bits(mask)]
        if min(degs) < 2:
            continue
        if max(degs) <= b:
            cost[mask] = 0
        elif spanning_in_range(g, bits(mask), b) is not None:
            cost[mask] = 0
    return cost


def min_small_components_exact(g: Graph, b: int, limit: int = ORACLE_LIMIT) -> OracleResult:
    """Minimum count of edge/vertex components over all pseudo [2,b]-factors,
    with a witness factor attaining it.

    Witness tie-break: fewest vertex components first, then the
    lexicographically smallest block set.
    """
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    if g.n > limit:
        raise CapacityError(f"exact oracle limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return OracleResult(0, PseudoFactor.build(g, (), b), ())

    cost = _block_costs(g, b)
    full = g.full_mask
    # dp[mask] = (small, singletons, pivot block mask, pivot block tuple);
    # comparing (small, singletons, block tuple) is enough to pick the
    # lexicographically smallest block set because the pivot block, holding
    # the lowest vertex of mask, always sorts first in the final partition.
    dp: list[tuple[int, int, int, tuple[int, ...]] | None] = [None] * (full + 1)
    dp[0] = (0, 0, 0, ())
    for mask in range(1, full + 1):
        pivot = mask & -mask
        rest = mask ^ pivot
        best: tuple[int, int, int, tuple[int, ...]] | None = None
        sub = rest
        while True:
            block = sub | pivot
            c = cost[block]
            if c is not None:
                entry = dp[mask ^ block]
                small = c + entry[0]
                sing = entry[1] + (1 if block == pivot else 0)
                if best is None or (small, sing) < (best[0], best[1]):
                    best = (small, sing, block, tuple(bits(block)))
                elif (small, sing) == (best[0], best[1]):
                    t = tuple(bits(block))
                    if t < best[3]:
                        best = (small, sing, block, t)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        dp[mask] = best

    blocks: list[tuple[int, ...]] = []
    mask = full
    while mask:
        entry = dp[mask]
        blocks.append(entry[3])
        mask ^= entry[2]

    edges: list[Edge] = []
    for block in blocks:
        if len(block) == 2:
            edges.append(norm_edge(*block))
        elif len(block) >= 3:
            chosen = spanning_in_range(g, block, b)
            edges.extend(chosen)
    witness = PseudoFactor.build(g, edges, b)
    return OracleResult(dp[full][0], witness, tuple(blocks))


# ---------------------------------------------------------------------------
# independent cross-check


def _set_partitions(elems: list[int]):
    """All set partitions of ``elems`` as lists of lists."""
    if not elems:
        yield []
        return
    first = elems[0]
    for part in _set_partitions(elems[1:]):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _feasible_by_edge_subsets(g: Graph, block: frozenset[int], b: int) -> bool:
    """Decide a degree-[2,b] spanning subgraph of G[block] by include/exclude
    search over the induced edge list (no ordering tricks, no memo)."""
    verts = sorted(block)
    edges = [e for e in g.edges if e[0] in block and e[1] in block]
    deg = {v: 0 for v in verts}
    rem = {v: 0 for v in verts}
    for u, v in edges:
        rem[u] += 1
        rem[v] += 1

    def rec(idx: int) -> bool:
        if idx == len(edges):
            return all(d >= 2 for d in deg.values())
        u, v = edges[idx]
        rem[u] -= 1
        rem[v] -= 1
        if deg[u] < b and deg[v] < b:
            deg[u] += 1
            deg[v] += 1
            if rec(idx + 1):
                return True
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + rem[u] >= 2 and deg[v] + rem[v] >= 2:
            if rec(idx + 1):
                return True
        rem[u] += 1
        rem[v] += 1
        return False

    return rec(0)


def min_small_components_naive(g: Graph, b: int, limit: int = NAIVE_LIMIT) -> int:
    """Same optimum as the DP, by direct enumeration of every set partition of
    the vertices, each block checked by edge-subset search."""
    if b < 2:
        raise ValueError(f"b must be at least 2, got {b}")
    if g.n > limit:
        raise CapacityError(f"naive oracle limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0

    block_cost: dict[frozenset[int], int | None] = {}

    def cost_of(block: frozenset[int]) -> int | None:
        cached = block_cost.get(block)
        if block in block_cost:
            return cached
        if len(block) == 1:
            c: int | None = 1
        elif len(block) == 2:
            u, v = sorted(block)
            c = 1 if v in g.adj[u] else None
        else:
            c = 0 if _feasible_by_edge_subsets(g, block, b) else None
        block_cost[block] = c
        return c

    best: int | None = None
    for part in _set_partitions(list(range(g.n))):
        total = 0
        for blk in part:
            c = cost_of(frozenset(blk))
            if c is None:
                total = -1
                break
            total += c
        if total >= 0 and (best is None or total < best):
            best = total
    return best
