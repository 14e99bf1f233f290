"""Weighted graph container and the combinatorial subroutines used everywhere else.

Vertices are integers 0..n-1. Edges are stored canonically as (u, v, w) with
u < v and w >= 0. Graphs are immutable after construction; all operations here
are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class GraphError(ValueError):
    """Structurally invalid graph, or an operation's precondition failed."""


class ParseError(ValueError):
    """An edge-list document could not be parsed."""


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with nonnegative edge weights."""

    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not in canonical u < v order")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            if w < 0:
                raise GraphError(f"negative weight {w} on edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from (u, v) or (u, v, w) items, canonicalizing order."""
        canon = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1.0
            else:
                u, v, w = e
            if u > v:
                u, v = v, u
            canon.append((int(u), int(v), float(w)))
        canon.sort(key=lambda e: (e[0], e[1]))
        return cls(n, tuple(canon))

    @cached_property
    def degree(self) -> tuple[int, ...]:
        d = [0] * self.n
        for u, v, _ in self.edges:
            d[u] += 1
            d[v] += 1
        return tuple(d)

    @cached_property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    @cached_property
    def max_degree(self) -> int:
        return max(self.degree) if self.n else 0

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """adjacency[v] = tuple of (neighbor, weight)."""
        adj = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return tuple(tuple(a) for a in adj)

    def edge_weight(self, u, v):
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        raise GraphError(f"no edge ({u}, {v})")

    def is_regular(self):
        """Return the common degree if the graph is regular, else None."""
        degs = set(self.degree)
        return self.degree[0] if len(degs) == 1 else None


def parse_graph(text: str) -> WeightedGraph:
    """Parse an edge-list document: lines "u v [w]", '#' comments, blanks ignored.

    Weights default to 1.0. Vertex count is max id + 1.
    """
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"line {lineno}: expected 'u v [w]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        w = 1.0
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: weight must be a real number") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if w < 0:
            raise ParseError(f"line {lineno}: negative weight {w}")
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u, v, w))
    if not edges:
        raise ParseError("no edges in document")
    n = max(max(u, v) for u, v, _ in edges) + 1
    return WeightedGraph.from_edges(n, edges)


def triangles_per_edge(g: WeightedGraph) -> dict[tuple[int, int], int]:
    """Number of common neighbors of each edge's endpoints."""
    nbrs = [set() for _ in range(g.n)]
    for u, v, _ in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return {(u, v): len(nbrs[u] & nbrs[v]) for u, v, _ in g.edges}


def connected_components(g: WeightedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u, _ in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def spanning_tree(g: WeightedGraph) -> list[tuple[int, int, float]]:
    """BFS spanning tree of a connected graph (|V|-1 edges). Errors if disconnected."""
    if g.n == 1:
        return []
    seen = [False] * g.n
    seen[0] = True
    tree = []
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for u, w in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    tree.append((min(v, u), max(v, u), w))
                    nxt.append(u)
        frontier = nxt
    if len(tree) != g.n - 1:
        raise GraphError("graph is disconnected; no spanning tree exists")
    return tree


def two_color_forest(g: WeightedGraph, forest) -> tuple[int, ...]:
    """Proper 2-coloring of the given forest edges; vertices in no edge get bit 0.

    Errors if the edge set contains a cycle.
    """
    fedges = [(min(e[0], e[1]), max(e[0], e[1])) for e in forest]
    # union-find cycle check
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj = [[] for _ in range(g.n)]
    for u, v in fedges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise GraphError(f"edge set contains a cycle through ({u}, {v})")
        parent[ru] = rv
        adj[u].append(v)
        adj[v].append(u)
    bits = [0] * g.n
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s] or not adj[s]:
            continue
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    bits[u] = 1 - bits[v]
                    stack.append(u)
    return tuple(bits)


def cut_partition(g: WeightedGraph, bits):
    """Split edges into (cut, uncut) lists according to the bit string."""
    if len(bits) != g.n:
        raise GraphError("bit string length must equal the vertex count")
    sat = [(u, v, w) for u, v, w in g.edges if bits[u] != bits[v]]
    unsat = [(u, v, w) for u, v, w in g.edges if bits[u] == bits[v]]
    return sat, unsat


@dataclass(frozen=True)
class MatchForestDecomposition:
    """Per-vertex heaviest incident edges split into a matching and a forest.

    The doubly-maximal edges (picked by both endpoints) form the matching;
    the union of all picks is a forest. The identity
    sum_v max_{e ~ v} w_e = matching_weight + forest_weight holds exactly.
    """

    matching: tuple[tuple[int, int, float], ...]
    forest: tuple[tuple[int, int, float], ...]
    matching_weight: float
    forest_weight: float
    unmatched: tuple[int, ...]


def match_forest_decompose(g: WeightedGraph) -> MatchForestDecomposition:
    """Decompose the per-vertex maximal incident edges.

    Ties between equal weights are broken by canonical edge index (lower
    index = smaller), so the output is deterministic.
    """
    # key[e] strictly orders edges: weight first, canonical index breaks ties
    key = {(u, v): (w, i) for i, (u, v, w) in enumerate(g.edges)}
    pick = {}  # vertex -> its maximal incident edge
    for u, v, w in g.edges:
        for x in (u, v):
            e = (u, v)
            if x not in pick or key[e] > key[pick[x]]:
                pick[x] = e
    forest_set = set(pick.values())
    matching_set = {e for e in forest_set
                    if pick.get(e[0]) == e and pick.get(e[1]) == e}
    weight = {(u, v): w for u, v, w in g.edges}
    forest = tuple(sorted((u, v, weight[(u, v)]) for u, v in forest_set))
    matching = tuple(sorted((u, v, weight[(u, v)]) for u, v in matching_set))
    covered = {x for u, v, _ in matching for x in (u, v)}
    return MatchForestDecomposition(
        matching=matching,
        forest=forest,
        matching_weight=float(sum(w for _, _, w in matching)),
        forest_weight=float(sum(w for _, _, w in forest)),
        unmatched=tuple(v for v in range(g.n) if v not in covered),
    )


def proper_edge_coloring(g: WeightedGraph) -> dict[tuple[int, int], int]:
    """Proper edge coloring with at most max_degree + 1 colors (Misra-Gries)."""
    if not g.edges:
        return {}
    ncolors = g.max_degree + 1
    color = {}  # (u, v) -> color
    at = [dict() for _ in range(g.n)]  # at[v][color] = neighbor

    def ckey(u, v):
        return (u, v) if u < v else (v, u)

    def set_color(u, v, c):
        old = color.get(ckey(u, v))
        if old is not None:
            del at[u][old]
            del at[v][old]
        if c is not None:
            color[ckey(u, v)] = c
            at[u][c] = v
            at[v][c] = u
        else:
            color.pop(ckey(u, v), None)

    def free_color(v):
        for c in range(ncolors):
            if c not in at[v]:
                return c
        raise AssertionError("no free color; degree bound violated")

    def is_free(c, v):
        return c not in at[v]

    for u0, v0, _ in g.edges:
        # maximal fan of u0 starting at v0
        fan = [v0]
        in_fan = {v0}
        while True:
            last = fan[-1]
            ext = None
            for c, x in at[u0].items():
                if x not in in_fan and is_free(c, last):
                    ext = x
                    break
            if ext is None:
                break
            fan.append(ext)
            in_fan.add(ext)
        c = free_color(u0)
        d = free_color(fan[-1])
        if c != d:
            # invert the maximal path from u0 alternating colors d, c, d, ...
            path = []
            cur, col, prev = u0, d, None
            while col in at[cur] and at[cur][col] != prev:
                nxt = at[cur][col]
                path.append((cur, nxt, col))
                prev, cur = cur, nxt
                col = c if col == d else d
            for a, b, col in path:
                set_color(a, b, None)
            for a, b, col in path:
                set_color(a, b, c if col == d else d)
        # first fan prefix ending at a vertex with d free that is still a fan
        w_idx = None
        for i, x in enumerate(fan):
            if not is_free(d, x):
                continue
            ok = True
            for j in range(i):
                cj = color.get(ckey(u0, fan[j + 1]))
                if cj is None or not is_free(cj, fan[j]):
                    ok = False
                    break
            if ok:
                w_idx = i
                break
        assert w_idx is not None, "fan rotation target must exist"
        # rotate the prefix, then color the final edge d
        shifted = [color[ckey(u0, fan[i + 1])] for i in range(w_idx)]
        for i in range(w_idx):
            set_color(u0, fan[i + 1], None)
        for i in range(w_idx):
            set_color(u0, fan[i], shifted[i])
        set_color(u0, fan[w_idx], d)
    return color
