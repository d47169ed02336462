"""F-free colouring checkers and exact exponential solvers.

A colouring is a sequence of integers indexed by vertex. Colours are
unbounded integers because span (the largest colour difference across an
edge) matters, not only the number of colours.

Families: ``P3`` (distance-2 colourings), ``P4`` (star colourings),
``EvenCycles`` (acyclic colourings) and ``Explicit`` lists of connected
bipartite graphs. An empty explicit list means no restriction beyond
properness.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from ._budget import BudgetExceeded, Counter, resolve_budget
from .graphs import Graph, cycle, path, power

ColouringLike = Union[Sequence[int], Mapping[int, int]]

KINDS = ("P3", "P4", "EvenCycles", "Explicit")


@dataclass(frozen=True)
class ForbiddenFamily:
    kind: str
    graphs: tuple[Graph, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown forbidden family {self.kind!r}")
        if self.kind != "Explicit" and self.graphs:
            raise ValueError("only Explicit families carry graphs")
        for h in self.graphs:
            if h.n < 3 or not h.is_connected() or not h.is_bipartite():
                raise ValueError("forbidden graphs must be connected, bipartite, with >= 3 vertices")

    @property
    def is_unrestricted(self) -> bool:
        return self.kind == "Explicit" and not self.graphs

    @property
    def in_hierarchy(self) -> bool:
        """Whether every F-free colouring is acyclic (so acyclic lower bounds apply)."""
        return self.kind in ("P3", "P4", "EvenCycles")

    def __str__(self):
        if self.kind != "Explicit":
            return self.kind
        return "none" if not self.graphs else f"Explicit[{len(self.graphs)}]"


P3 = ForbiddenFamily("P3")
P4 = ForbiddenFamily("P4")
EVEN_CYCLES = ForbiddenFamily("EvenCycles")
NONE = ForbiddenFamily("Explicit")


def explicit(graphs: Sequence[Graph]) -> ForbiddenFamily:
    return ForbiddenFamily("Explicit", tuple(graphs))


def explicit_equivalent(family: ForbiddenFamily, n: int) -> ForbiddenFamily:
    """The explicit graph list a fast-path family stands for on n-vertex hosts."""
    if family.kind == "P3":
        return explicit([path(3)])
    if family.kind == "P4":
        return explicit([path(4)])
    if family.kind == "EvenCycles":
        return explicit([cycle(m) for m in range(4, 2 * (n // 2) + 1, 2)])
    return family


def parse_family(text: str) -> ForbiddenFamily:
    """``p3 | p4 | acyclic | none | explicit:<json file>``."""
    key = text.strip().lower()
    named = {"p3": P3, "p4": P4, "acyclic": EVEN_CYCLES, "evencycles": EVEN_CYCLES, "none": NONE}
    if key in named:
        return named[key]
    if key.startswith("explicit:"):
        with open(text.split(":", 1)[1]) as fh:
            data = json.load(fh)
        items = data["graphs"] if isinstance(data, dict) else data
        return explicit([Graph.from_json(item) for item in items])
    raise ValueError(f"unknown family {text!r}")


# -- checkers -----------------------------------------------------------------

def as_colours(g: Graph, c: ColouringLike) -> list[int]:
    if isinstance(c, Mapping):
        missing = [v for v in range(g.n) if v not in c]
        if missing:
            raise ValueError(f"colouring is not total: missing vertices {missing[:5]}")
        return [int(c[v]) for v in range(g.n)]
    if len(c) != g.n:
        raise ValueError(f"colouring has {len(c)} entries for {g.n} vertices")
    return [int(x) for x in c]


def is_proper(g: Graph, c: ColouringLike) -> bool:
    col = as_colours(g, c)
    return all(col[u] != col[v] for u, v in g.edges)


def span(g: Graph, c: ColouringLike) -> int:
    col = as_colours(g, c)
    if not is_proper(g, col):
        raise ValueError("span is defined for proper colourings only")
    return max((abs(col[u] - col[v]) for u, v in g.edges), default=0)


def colour_count(c: ColouringLike) -> int:
    vals = c.values() if isinstance(c, Mapping) else c
    return len(set(vals))


def colour_range(c: ColouringLike) -> int:
    vals = list(c.values() if isinstance(c, Mapping) else c)
    return max(vals) - min(vals) if vals else 0


def bichromatic_adjacency(g: Graph, col: Sequence[int], a: int, b: int) -> dict[int, set[int]]:
    """Adjacency of the subgraph formed by edges between colour classes a and b."""
    adj: dict[int, set[int]] = {}
    for u, v in g.edges:
        if {col[u], col[v]} == {a, b}:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
    return adj


def contains_subgraph(host: Mapping[int, set[int]], pattern: Graph) -> bool:
    """Whether ``pattern`` (connected) maps injectively and edge-preservingly into ``host``."""
    if pattern.n == 0:
        return True
    if len(host) < pattern.n:
        return False
    # BFS order: every pattern vertex after the first has an earlier neighbour
    order = list(pattern.distances_from(0))
    if len(order) != pattern.n:
        raise ValueError("pattern must be connected")
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in pattern.adj[v] if pos[w] < i] for i, v in enumerate(order)]
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        if back[i]:
            cands = host[image[back[i][0]]]
        else:
            cands = host.keys()
        for h in cands:
            if h in used or len(host[h]) < pattern.degree(v):
                continue
            if all(image[w] in host[h] for w in back[i]):
                image[v] = h
                used.add(h)
                if extend(i + 1):
                    return True
                used.discard(h)
                del image[v]
        return False

    return extend(0)


def _component_of(adj: Mapping[int, set[int]], start: int) -> dict[int, set[int]]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return {u: adj.get(u, set()) & seen for u in seen}


def _explicit_free(g: Graph, col: Sequence[int], graphs: Sequence[Graph]) -> bool:
    if not graphs:
        return True
    pairs = {tuple(sorted((col[u], col[v]))) for u, v in g.edges}
    for a, b in sorted(pairs):
        adj = bichromatic_adjacency(g, col, a, b)
        seen: set[int] = set()
        for start in sorted(adj):
            if start in seen:
                continue
            comp = _component_of(adj, start)
            seen.update(comp)
            for h in graphs:
                if contains_subgraph(comp, h):
                    return False
    return True


def _p3_free(g: Graph, col: Sequence[int]) -> bool:
    for v in range(g.n):
        nbr_cols = [col[w] for w in g.adj[v]]
        if len(nbr_cols) != len(set(nbr_cols)):
            return False
    return True


def _p4_free(g: Graph, col: Sequence[int]) -> bool:
    # a bichromatic P4 exists iff some edge uv has u seeing col[v] twice and v seeing col[u] twice
    def count(x: int, colour: int) -> int:
        return sum(1 for w in g.adj[x] if col[w] == colour)

    return not any(count(u, col[v]) >= 2 and count(v, col[u]) >= 2 for u, v in g.edges)


def _acyclic(g: Graph, col: Sequence[int]) -> bool:
    parent: dict[tuple, tuple] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        pair = (min(col[u], col[v]), max(col[u], col[v]))
        ru, rv = find((pair, u)), find((pair, v))
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_f_free(g: Graph, c: ColouringLike, family: ForbiddenFamily) -> bool:
    """Whether ``c`` is a proper colouring with no bichromatic member of ``family``.

    Improper colourings return False.
    """
    if not isinstance(family, ForbiddenFamily):
        raise TypeError(f"expected a ForbiddenFamily, got {type(family).__name__}")
    col = as_colours(g, c)
    if not is_proper(g, col):
        return False
    if family.kind == "P3":
        return _p3_free(g, col)
    if family.kind == "P4":
        return _p4_free(g, col)
    if family.kind == "EvenCycles":
        return _acyclic(g, col)
    return _explicit_free(g, col, family.graphs)


def is_lp1_labelling(g: Graph, c: ColouringLike, p: int) -> bool:
    """P3-free colouring whose adjacent labels differ by at least p."""
    if p < 1:
        raise ValueError("p must be at least 1")
    col = as_colours(g, c)
    return all(abs(col[u] - col[v]) >= p for u, v in g.edges) and _p3_free(g, col)


def lp1_span(g: Graph, c: ColouringLike) -> int:
    col = as_colours(g, c)
    return max((abs(col[u] - col[v]) for u, v in g.edges), default=0)


def lp1_range(g: Graph, c: ColouringLike) -> int:
    return colour_range(as_colours(g, c))


def acyclic_lower_bound(g: Graph) -> int:
    """Smallest integer strictly above ``|E|/|V| + 1``; a lower bound on acyclic colours."""
    if g.num_edges == 0:
        raise ValueError("acyclic lower bound needs at least one edge")
    # floor(|E|/|V| + 1) + 1
    return g.num_edges // g.n + 2


# -- incremental constraint checks for the solvers ----------------------------

class _Constraints:
    """Checks that assigning ``col[v]`` keeps a partial colouring valid.

    Assumes the partial colouring was valid before ``v`` was coloured, so only
    structures through ``v`` are examined. ``None`` marks uncoloured vertices.
    """

    def __init__(self, g: Graph, family: ForbiddenFamily, min_gap: int = 1):
        self.g = g
        self.family = family
        self.min_gap = min_gap
        if family.kind == "P3":
            self.conflict = power(g, 2).adj
        else:
            self.conflict = g.adj

    def ok(self, v: int, col: list) -> bool:
        a = col[v]
        g = self.g
        for w in g.adj[v]:
            cw = col[w]
            if cw is not None and abs(a - cw) < self.min_gap:
                return False
        kind = self.family.kind
        if kind == "P3":
            return all(col[w] != a for w in self.conflict[v])
        if kind == "P4":
            return self._p4_ok(v, col)
        if kind == "EvenCycles":
            return self._acyclic_ok(v, col)
        if self.family.graphs:
            return self._explicit_ok(v, col)
        return True

    def _p4_ok(self, v: int, col: list) -> bool:
        adj = self.g.adj
        a = col[v]

        def count(x, colour):
            return sum(1 for w in adj[x] if col[w] == colour)

        for u in adj[v]:
            b = col[u]
            if b is None or count(u, a) < 2:
                continue
            for x in adj[u]:
                if col[x] == a and count(x, b) >= 2:
                    return False
        return True

    def _acyclic_ok(self, v: int, col: list) -> bool:
        # a new bichromatic cycle through v joins two same-coloured neighbours of v
        by_colour: dict[int, list[int]] = {}
        for u in self.g.adj[v]:
            if col[u] is not None:
                by_colour.setdefault(col[u], []).append(u)
        return all(
            self._pairwise_apart(us, v, col[v], b, col) for b, us in by_colour.items() if len(us) >= 2
        )

    def _pairwise_apart(self, us, v, a, b, col) -> bool:
        """No two of ``us`` are joined by an a/b-alternating path avoiding v."""
        adj = self.g.adj
        targets = set(us)
        seen = {v}
        for start in us:
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            while queue:
                x = queue.popleft()
                want = a if col[x] == b else b
                for y in adj[x]:
                    if y not in seen and col[y] == want:
                        if y in targets:
                            return False
                        seen.add(y)
                        queue.append(y)
        return True

    def _explicit_ok(self, v: int, col: list) -> bool:
        adj = self.g.adj
        a = col[v]
        for b in {col[u] for u in adj[v] if col[u] is not None}:
            sub: dict[int, set[int]] = {}
            seen = {v}
            queue = deque([v])
            while queue:
                x = queue.popleft()
                want = b if col[x] == a else a
                for y in adj[x]:
                    if col[y] == want:
                        sub.setdefault(x, set()).add(y)
                        sub.setdefault(y, set()).add(x)
                        if y not in seen:
                            seen.add(y)
                            queue.append(y)
            if any(contains_subgraph(sub, h) for h in self.family.graphs):
                return False
        return True


def max_clique_size(adj: Sequence[Sequence[int]], vertices: Sequence[int] | None = None) -> int:
    """Exact clique number via Bron-Kerbosch with pivoting."""
    verts = set(range(len(adj)) if vertices is None else vertices)
    nbr = {v: set(adj[v]) & verts for v in verts}
    best = 0

    def expand(r: int, p: set, x: set):
        nonlocal best
        if not p and not x:
            best = max(best, r)
            return
        if r + len(p) <= best:
            return
        pivot = max(p | x, key=lambda u: len(nbr[u] & p))
        for v in sorted(p - nbr[pivot]):
            expand(r + 1, p & nbr[v], x & nbr[v])
            p = p - {v}
            x = x | {v}

    expand(0, verts, set())
    return best


# -- exact solvers --------------------------------------------------------------

def _component_graphs(g: Graph) -> list[tuple[list[int], Graph]]:
    return [(comp, g.induced(comp)) for comp in g.components()]


def _greedy(g: Graph, cons: _Constraints) -> list[int]:
    col: list = [None] * g.n
    for v in sorted(range(g.n), key=lambda u: (-g.degree(u), u)):
        for k in range(g.n):
            col[v] = k
            if cons.ok(v, col):
                break
        else:
            # explicit families can block every colour at v
            return list(range(g.n))
    return col


def _connected_order(g: Graph) -> list[int]:
    """Start at a max-degree vertex, then always take the vertex with most
    already-ordered neighbours (ties: higher degree, lower id)."""
    if g.n == 0:
        return []
    start = min(range(g.n), key=lambda u: (-g.degree(u), u))
    order = [start]
    placed = {start}
    weight = [0] * g.n
    for w in g.adj[start]:
        weight[w] += 1
    while len(order) < g.n:
        v = min((u for u in range(g.n) if u not in placed), key=lambda u: (-weight[u], -g.degree(u), u))
        order.append(v)
        placed.add(v)
        for w in g.adj[v]:
            weight[w] += 1
    return order


def _k_colour(g: Graph, cons: _Constraints, k: int, counter: Counter) -> list[int] | None:
    """F-free colouring with colours ``0..k-1``, DSATUR-style vertex selection."""
    n = g.n
    col: list = [None] * n
    conflict = cons.conflict
    sat: list[dict[int, int]] = [dict() for _ in range(n)]

    def assign(v, c):
        col[v] = c
        for w in conflict[v]:
            sat[w][c] = sat[w].get(c, 0) + 1

    def unassign(v):
        c = col[v]
        for w in conflict[v]:
            sat[w][c] -= 1
            if not sat[w][c]:
                del sat[w][c]
        col[v] = None

    def pick():
        best, key = None, None
        for u in range(n):
            if col[u] is None:
                kk = (len(sat[u]), g.degree(u), -u)
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def search(done: int, used: int) -> bool:
        if done == n:
            return True
        counter.tick()
        v = pick()
        for c in range(min(used + 1, k)):
            if c in sat[v]:
                continue
            assign(v, c)
            if cons.ok(v, col) and search(done + 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    return list(col) if search(0, 0) else None


def chromatic_lower_bound(g: Graph, family: ForbiddenFamily) -> int:
    if g.n == 0:
        return 0
    cons = _Constraints(g, family)
    lb = max_clique_size(cons.conflict)
    if g.num_edges and family.in_hierarchy:
        lb = max(lb, acyclic_lower_bound(g))
    return max(lb, 1)


def chromatic_number(g: Graph, family: ForbiddenFamily, budget: int | None = None) -> tuple[int, list[int]]:
    """Exact F-free chromatic number with a witness colouring.

    Raises :class:`BudgetExceeded` whose ``best`` is an ``(count, colouring)``
    upper bound when the node budget runs out.
    """
    counter = Counter(resolve_budget(budget), "chromatic_number")
    col = [0] * g.n
    total = 0 if g.n == 0 else 1
    pending = _component_graphs(g)
    for idx, (verts, sub) in enumerate(pending):
        cons = _Constraints(sub, family)
        upper = _greedy(sub, cons)
        ub = colour_count(upper)
        found = upper
        try:
            for k in range(chromatic_lower_bound(sub, family), ub):
                res = _k_colour(sub, cons, k, counter)
                if res is not None:
                    found = res
                    break
        except BudgetExceeded as exc:
            best = list(col)
            worst = ub
            for v, c in zip(verts, upper):
                best[v] = c
            for verts2, sub2 in pending[idx + 1:]:
                extra = _greedy(sub2, _Constraints(sub2, family))
                worst = max(worst, colour_count(extra))
                for v, c in zip(verts2, extra):
                    best[v] = c
            exc.best = (max(total, worst), best)
            raise
        for v, c in zip(verts, found):
            col[v] = c
        total = max(total, colour_count(found))
    return total, _relabel(col)


def _relabel(col: list[int]) -> list[int]:
    """Renumber colours 0.. in order of first appearance."""
    names: dict[int, int] = {}
    return [names.setdefault(c, len(names)) for c in col]


def _span_search(g: Graph, cons: _Constraints, s: int, counter: Counter) -> list[int] | None:
    """F-free colouring of a connected graph with every edge difference in ``[gap, s]``.

    The first vertex is anchored at 0 (shift invariance) and the second is
    forced above it (reflection invariance).
    """
    n = g.n
    order = _connected_order(g)
    col: list = [None] * n
    col[order[0]] = 0
    gap = cons.min_gap

    def search(i: int) -> bool:
        if i == n:
            return True
        counter.tick()
        v = order[i]
        placed = [col[w] for w in g.adj[v] if col[w] is not None]
        lo, hi = max(placed) - s, min(placed) + s
        if i == 1:
            lo = max(lo, 1)
        for c in range(lo, hi + 1):
            if any(abs(c - x) < gap for x in placed):
                continue
            col[v] = c
            if cons.ok(v, col) and search(i + 1):
                return True
        col[v] = None
        return False

    if n == 1 or search(1):
        base = min(col)
        return [c - base for c in col]
    return None


def _min_span(g: Graph, family: ForbiddenFamily, gap: int, counter: Counter) -> tuple[int, list[int]]:
    col = [0] * g.n
    best = 0
    for verts, sub in _component_graphs(g):
        if sub.num_edges == 0:
            continue
        cons = _Constraints(sub, family, min_gap=gap)
        s = (max_clique_size(sub.adj) - 1) * gap
        while True:
            res = _span_search(sub, cons, s, counter)
            if res is not None:
                break
            s += 1
        best = max(best, s)
        for v, c in zip(verts, res):
            col[v] = c
    return best, col


def chromatic_span(g: Graph, family: ForbiddenFamily, budget: int | None = None) -> tuple[int, list[int]]:
    """Exact F-free chromatic span with a witness (each component's minimum is 0)."""
    counter = Counter(resolve_budget(budget), "chromatic_span")
    return _min_span(g, family, 1, counter)


def min_lp1_span(g: Graph, p: int, budget: int | None = None) -> tuple[int, list[int]]:
    """Minimum over L(p,1)-labellings of the largest label difference across an edge."""
    if p < 1:
        raise ValueError("p must be at least 1")
    counter = Counter(resolve_budget(budget), "min_lp1_span")
    return _min_span(g, P3, p, counter)


def _range_search(g: Graph, cons: _Constraints, r: int, counter: Counter) -> list[int] | None:
    n = g.n
    order = _connected_order(g)
    col: list = [None] * n

    def search(i: int) -> bool:
        if i == n:
            return True
        counter.tick()
        v = order[i]
        # reflection x -> r - x: the first vertex may stay in the lower half
        top = r // 2 if i == 0 else r
        for c in range(top + 1):
            col[v] = c
            if cons.ok(v, col) and search(i + 1):
                return True
        col[v] = None
        return False

    return list(col) if search(0) else None


def min_lp1_range(g: Graph, p: int, budget: int | None = None) -> tuple[int, list[int]]:
    """Minimum over L(p,1)-labellings of ``max label - min label``.

    Components share one label window, so the graph is searched as a whole.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    counter = Counter(resolve_budget(budget), "min_lp1_range")
    if g.n == 0:
        return 0, []
    cons = _Constraints(g, P3, min_gap=p)
    r = max(max_clique_size(cons.conflict) - 1, (max_clique_size(g.adj) - 1) * p)
    while True:
        res = _range_search(g, cons, r, counter)
        if res is not None:
            base = min(res)
            return r, [c - base for c in res]
        r += 1
