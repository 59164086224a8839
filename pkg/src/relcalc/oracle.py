"""Independent reference implementations used only for cross-validation.

These deliberately avoid the Warshall closure in rel_core: the closure
oracle is Kleene power iteration, and the two SCC oracles are a one-pass
iterative Tarjan and per-node breadth-first reachability.  A bug in any
one implementation shows up as a disagreement.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .rel_core import Relation, compose, equals, identity, join
from .scc import Partition


@dataclass(frozen=True)
class Graph:
    """Directed graph as a node count and a deduplicated edge set."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside node range 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(edges))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
        return adj


def star_by_powers(r: Relation) -> Relation:
    """Kleene iteration T0 = I, T_{k+1} = I | R;T_k, run to fixpoint."""
    result, _ = star_by_powers_trace(r)
    return result


def star_by_powers_trace(r: Relation) -> tuple[Relation, int]:
    """As star_by_powers, also reporting the number of iterations."""
    i = identity(r.size)
    t = i
    for iterations in range(1, r.size + 2):
        nxt = join(i, compose(r, t))
        if equals(nxt, t):
            return t, iterations
        t = nxt
    raise AssertionError("power iteration failed to reach a fixpoint")


def tarjan_scc(g: Graph) -> Partition:
    """Strongly connected components by one-pass DFS (iterative Tarjan)."""
    n = g.n
    adj = g.adjacency()
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # explicit DFS stack of (node, next-neighbour position)
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pos, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    return Partition.from_classes(n, components)


def reachability_scc(g: Graph) -> Partition:
    """SCCs by mutual reachability from per-node breadth-first search.

    Visited sets and frontiers are int bitmasks; each BFS expands layer
    by layer by OR-ing adjacency rows of the current frontier.
    """
    n = g.n
    rows = [0] * n
    for u, v in g.edges:
        rows[u] |= 1 << v

    reach = [0] * n
    for u in range(n):
        seen = 1 << u
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= rows[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= nxt
        reach[u] = seen

    groups = []
    assigned = 0
    for u in range(n):
        if assigned >> u & 1:
            continue
        members = []
        row = reach[u]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            if reach[v] >> u & 1:
                members.append(v)
                assigned |= low
        groups.append(members)
    return Partition.from_classes(n, groups)
