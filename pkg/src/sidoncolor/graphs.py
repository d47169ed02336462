"""Graph construction kit: standard families, powers and Cartesian products.

Vertices are always the dense range ``0..n-1``. Adjacency is stored as
sorted tuples so every iteration order is reproducible.
"""
from __future__ import annotations

import itertools
import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adj):
            for w in nbrs:
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= w < self.n or v not in self.adj[w]:
                    raise ValueError(f"adjacency not symmetric at {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def distances_from(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(self.n):
            if v not in seen:
                comp = sorted(self.distances_from(v))
                seen.update(comp)
                comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.distances_from(0)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        side: dict[int, int] = {}
        for root in range(self.n):
            if root in side:
                continue
            side[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in side:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(index[u], index[w]) for u in vertices for w in self.adj[u] if w in index and u < w],
        )

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return tree_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    g = Graph.from_edges(n, edges)
    if not g.is_tree():
        raise ValueError("edge list does not form a tree")
    return g


def hypercube(d: int) -> Graph:
    """Q_d as the product of d copies of K_2."""
    if d < 1:
        raise ValueError("hypercube dimension must be positive")
    return cartesian_product([complete(2)] * d).graph


def hypercube_bits(d: int) -> Graph:
    """Q_d by direct bit flips; used to cross-check :func:`hypercube`."""
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def power(g: Graph, k: int) -> Graph:
    """G^k: join vertices at distance at most k (never across components)."""
    if k < 1:
        raise ValueError("power must be at least 1")
    edges = []
    for u in range(g.n):
        for w, dist in g.distances_from(u).items():
            if u < w and dist <= k:
                edges.append((u, w))
    return Graph.from_edges(g.n, edges)


@dataclass(frozen=True)
class ProductGraph:
    """Cartesian product with its coordinate system.

    Coordinates are flattened row-major with the first factor slowest, so
    vertex ``i`` has coordinates ``coords[i]`` in ``itertools.product`` order.
    """

    factors: tuple[Graph, ...]
    graph: Graph
    coords: tuple[tuple[int, ...], ...]
    _index: dict = field(repr=False, compare=False)

    def vertex_of(self, coord: Sequence[int]) -> int:
        return self._index[tuple(coord)]

    def coord_of(self, v: int) -> tuple[int, ...]:
        return self.coords[v]

    def dimension_of_edge(self, u: int, v: int) -> int:
        """Index of the single coordinate in which the endpoints differ."""
        cu, cv = self.coords[u], self.coords[v]
        diff = [i for i in range(len(cu)) if cu[i] != cv[i]]
        if len(diff) != 1 or not self.factors[diff[0]].has_edge(cu[diff[0]], cv[diff[0]]):
            raise ValueError(f"{u}-{v} is not an edge of the product")
        return diff[0]

    @property
    def dimension(self) -> int:
        return len(self.factors)


def cartesian_product(factors: Sequence[Graph]) -> ProductGraph:
    if not factors:
        raise ValueError("cartesian product needs at least one factor")
    if any(f.n == 0 for f in factors):
        raise ValueError("factors must be nonempty")
    sizes = [f.n for f in factors]
    coords = tuple(itertools.product(*(range(s) for s in sizes)))
    index = {c: i for i, c in enumerate(coords)}
    # stride of coordinate i in the flattened index
    strides = [prod(sizes[i + 1:]) for i in range(len(sizes))]
    edges = []
    for v, c in enumerate(coords):
        for i, f in enumerate(factors):
            for w in f.adj[c[i]]:
                if w > c[i]:
                    edges.append((v, v + (w - c[i]) * strides[i]))
    g = Graph.from_edges(len(coords), edges)
    return ProductGraph(tuple(factors), g, coords, index)


def cycle_in_path_square_order(n: int) -> list[int]:
    """Order the cycle 0-1-...-(n-1)-0 so every cycle edge spans at most 2 positions.

    Returns the cycle vertices in path order: ``0, n-1, 1, n-2, ...``.
    """
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    order = []
    lo, hi = 0, n - 1
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo += 1
        hi -= 1
    return order


def half_average_degree(g: Graph) -> Fraction:
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return Fraction(g.num_edges, g.n)


_ATOM = re.compile(r"^([PCKQ])(\d+)(?:\^(\d+))?$")


def parse_factor(token: str) -> Graph:
    m = _ATOM.match(token.strip())
    if not m:
        raise ValueError(f"cannot parse graph factor {token!r}")
    kind, size, exp = m.group(1), int(m.group(2)), m.group(3)
    base = {"P": path, "C": cycle, "K": complete, "Q": hypercube}[kind](size)
    return power(base, int(exp)) if exp else base


def parse_graph_spec(spec: str) -> list[Graph]:
    """Parse a graph spec into its list of product factors.

    Accepts inline JSON ``{"n": .., "edges": ..}``, a path to such a JSON
    file, or shorthand like ``P5``, ``C7^2``, ``P3xP3xC5`` (power binds tighter
    than product).
    """
    text = spec.strip()
    if text.startswith("{"):
        return [Graph.from_json(json.loads(text))]
    if text.endswith(".json"):
        with open(text) as fh:
            return [Graph.from_json(json.load(fh))]
    return [parse_factor(tok) for tok in text.split("x")]
