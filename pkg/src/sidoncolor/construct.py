"""Constructive colourings of Cartesian products.

The central device colours a product vertex ``(v_1, ..., v_d)`` by
``sum(s_i * c_i(v_i))`` where each ``c_i`` is an F-free colouring of factor i
with span at most k and ``s_1 < ... < s_d`` is a k-multiplicative set. An edge
in dimension i then changes the colour by exactly ``s_i`` times the factor
difference, so the result has span at most ``k * max(s)``; reducing modulo
``2 * span + 1`` turns that into a bounded number of colours.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import sidon
from .coloring import (
    P3,
    P4,
    ForbiddenFamily,
    as_colours,
    chromatic_span,
    colour_count,
    is_f_free,
    is_lp1_labelling,
    is_proper,
    lp1_span,
    span,
)
from .graphs import Graph, ProductGraph, cartesian_product, cycle, cycle_in_path_square_order, power

STRATEGIES = ("r", "s", "t")


@dataclass(frozen=True)
class ProductColoringPlan:
    factor_colourings: tuple[tuple[int, ...], ...]
    sidon: sidon.SidonSet
    family: ForbiddenFamily
    k: int

    def validate(self, factors: Sequence[Graph]) -> None:
        if len(factors) != len(self.factor_colourings) or len(factors) != len(self.sidon):
            raise ValueError(
                f"dimension mismatch: {len(factors)} factors, {len(self.factor_colourings)} colourings, "
                f"{len(self.sidon)} multipliers"
            )
        if self.sidon.k < self.k:
            raise ValueError(f"multiplier set is only {self.sidon.k}-multiplicative, need k={self.k}")
        for i, (g, c) in enumerate(zip(factors, self.factor_colourings)):
            if not is_f_free(g, c, self.family):
                raise ValueError(f"factor {i} colouring is not {self.family}-free")
            if span(g, c) > self.k:
                raise ValueError(f"factor {i} colouring has span {span(g, c)} > k={self.k}")


def _normalise(col: list[int]) -> list[int]:
    if not col:
        return col
    base = min(col)
    return [c - base for c in col]


def linear_combination(product: ProductGraph, factor_colourings: Sequence[Sequence[int]], multipliers: Sequence[int]) -> list[int]:
    return _normalise([
        sum(s * c[x] for s, c, x in zip(multipliers, factor_colourings, coord)) for coord in product.coords
    ])


def key_construction(plan: ProductColoringPlan, product: ProductGraph) -> list[int]:
    """Colour the product by the multiplier-weighted sum of factor colours."""
    plan.validate(product.factors)
    return linear_combination(product, plan.factor_colourings, plan.sidon.elements)


def fold_span_to_colours(g: Graph, c: Sequence[int], family: ForbiddenFamily, s: int | None = None) -> list[int]:
    """Reduce a span-``s`` F-free colouring modulo ``2s + 1``."""
    col = as_colours(g, c)
    if not is_f_free(g, col, family):
        raise ValueError(f"input colouring is not {family}-free")
    actual = span(g, col)
    if s is None:
        s = actual
    elif actual > s:
        raise ValueError(f"colouring has span {actual} > {s}")
    return [x % (2 * s + 1) for x in col]


# -- factor colourings --------------------------------------------------------

def layout_colouring(order: Sequence[int]) -> list[int]:
    """Colour each vertex by its position in ``order`` (injective, hence F-free)."""
    col = [0] * len(order)
    for pos, v in enumerate(order):
        col[v] = pos
    return col


def depth_colouring(tree: Graph, root: int = 0) -> list[int]:
    if not tree.is_tree():
        raise ValueError("depth colouring needs a tree")
    dist = tree.distances_from(root)
    return [dist[v] for v in range(tree.n)]


def _follows_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.has_edge(v, (v + 1) % g.n) for v in range(g.n))


def factor_colouring(g: Graph, family: ForbiddenFamily, exact: bool = False, budget: int | None = None) -> list[int]:
    """A low-span F-free colouring of one factor.

    Candidates are the identity layout (paths and their powers), the
    zig-zag layout for graphs built on the cycle ``0-1-...-(n-1)-0``, and
    depth from vertex 0 for trees; the valid candidate of least span wins.
    ``exact`` runs the chromatic span solver instead.
    """
    if exact:
        return chromatic_span(g, family, budget)[1]
    cands = [list(range(g.n))]
    if _follows_cycle(g):
        cands.append(layout_colouring(cycle_in_path_square_order(g.n)))
    if g.is_tree():
        cands.append(depth_colouring(g))
    valid = [c for c in cands if is_f_free(g, c, family)]
    return min(valid, key=lambda c: span(g, c))


def sidon_prefix(strategy: str, k: int, d: int) -> sidon.SidonSet:
    """The d smallest elements of R_k, S_k or T_k."""
    strategy = strategy.lower()
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "r":
        return sidon.generate_R(k, d)
    return sidon.first_elements(strategy, k, d)


def closed_form_bound(k: int, d: int) -> int:
    """``2k(kd - k + 1) + 1``, the colour bound from the progression R_k."""
    return 2 * k * (k * d - k + 1) + 1


@dataclass(frozen=True)
class PipelineResult:
    product: ProductGraph
    family: ForbiddenFamily
    k: int
    sidon: sidon.SidonSet
    unfolded: tuple[int, ...]
    colouring: tuple[int, ...]
    verified: bool

    @property
    def span_before_fold(self) -> int:
        return span(self.product.graph, self.unfolded)

    @property
    def colour_count(self) -> int:
        return colour_count(self.colouring)

    @property
    def bound(self) -> int:
        """``2 k max(S) + 1``: the colour bound for the multipliers used."""
        return 2 * self.k * self.sidon.max + 1

    @property
    def closed_form_bound(self) -> int:
        return closed_form_bound(self.k, self.product.dimension)


def theorem_lambda_pipeline(
    factors: Sequence[Graph],
    family: ForbiddenFamily,
    k: int | None = None,
    strategy: str = "r",
    factor_colourings: Sequence[Sequence[int]] | None = None,
    exact_factors: bool = False,
) -> PipelineResult:
    """Colour ``factors[0] x ... x factors[-1]`` end to end.

    Factor colourings are taken as given or produced by
    :func:`factor_colouring`; k defaults to their largest span. The output is
    re-checked with the independent checkers and ``verified`` records that.
    """
    if factor_colourings is None:
        factor_colourings = [factor_colouring(g, family, exact=exact_factors) for g in factors]
    cols = tuple(tuple(as_colours(g, c)) for g, c in zip(factors, factor_colourings))
    if k is None:
        k = max(max(span(g, c) for g, c in zip(factors, cols)), 1)
    multipliers = sidon_prefix(strategy, k, len(factors))
    plan = ProductColoringPlan(cols, multipliers, family, k)
    product = cartesian_product(factors)
    unfolded = key_construction(plan, product)
    folded = _normalise(fold_span_to_colours(product.graph, unfolded, family, k * multipliers.max))
    verified = is_proper(product.graph, folded) and is_f_free(product.graph, folded, family)
    return PipelineResult(product, family, k, multipliers, tuple(unfolded), tuple(folded), verified)


def acyclic_tree_product(trees: Sequence[Graph]) -> list[int]:
    """A (d+1)-colouring of a product of d trees with no bichromatic cycle.

    Dimension i (1-based) is weighted by i, then colours are reduced mod d+1.
    """
    for t in trees:
        if not t.is_tree():
            raise ValueError("acyclic_tree_product needs trees")
    d = len(trees)
    depths = [depth_colouring(t) for t in trees]
    product = cartesian_product(trees)
    weighted = linear_combination(product, depths, range(1, d + 1))
    return [c % (d + 1) for c in weighted]


def star_tree_product(trees: Sequence[Graph]) -> list[int]:
    """At most 2d+1 colours without a bichromatic P4 on a product of d trees."""
    for t in trees:
        if not t.is_tree():
            raise ValueError("star_tree_product needs trees")
    depths = [depth_colouring(t) for t in trees]
    res = theorem_lambda_pipeline(trees, P4, k=1, strategy="r", factor_colourings=depths)
    return list(res.colouring)


def torus_coloring(lengths: Sequence[int], k: int = 1, strategy: str | None = None) -> PipelineResult:
    """Distance-2 colouring of ``C_{n_1}^k x ... x C_{n_d}^k``.

    Each cycle is laid out in zig-zag order so its k-th power sits inside a
    path power of span 2k. The default multipliers are T_2 for k = 1 and
    R_{2k} otherwise.
    """
    if not lengths or any(n < 3 for n in lengths):
        raise ValueError("torus needs at least one cycle, each of length >= 3")
    if k < 1:
        raise ValueError("k must be positive")
    factors = [power(cycle(n), k) if k > 1 else cycle(n) for n in lengths]
    layouts = [layout_colouring(cycle_in_path_square_order(n)) for n in lengths]
    if strategy is None:
        strategy = "t" if k == 1 else "r"
    return theorem_lambda_pipeline(factors, P3, k=2 * k, strategy=strategy, factor_colourings=layouts)


def torus_bound(d: int, k: int = 1) -> int:
    """``4k(2kd - 2k + 1) + 1``."""
    return 4 * k * (2 * k * d - 2 * k + 1) + 1


@dataclass(frozen=True)
class Lp1Result:
    product: ProductGraph
    p: int
    k: int
    sidon: sidon.SidonSet
    labelling: tuple[int, ...]
    folded: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return 2 * self.k * self.sidon.max + 1


def lp1_key_construction(
    factors: Sequence[Graph],
    labellings: Sequence[Sequence[int]],
    multipliers: sidon.SidonSet,
    p: int,
    k: int | None = None,
) -> Lp1Result:
    """L(p,1) analogue of :func:`key_construction` plus the range fold."""
    cols = [as_colours(g, c) for g, c in zip(factors, labellings)]
    if len(cols) != len(factors) or len(factors) != len(multipliers):
        raise ValueError("need one labelling and one multiplier per factor")
    for i, (g, c) in enumerate(zip(factors, cols)):
        if not is_lp1_labelling(g, c, p):
            raise ValueError(f"factor {i} labelling is not an L({p},1)-labelling")
    if k is None:
        k = max(lp1_span(g, c) for g, c in zip(factors, cols))
    if any(lp1_span(g, c) > k for g, c in zip(factors, cols)):
        raise ValueError(f"a factor labelling has edge span above k={k}")
    if multipliers.k < k:
        raise ValueError(f"multiplier set is only {multipliers.k}-multiplicative, need k={k}")
    product = cartesian_product(factors)
    lab = linear_combination(product, cols, multipliers.elements)
    modulus = 2 * k * multipliers.max + 1
    folded = [x % modulus for x in lab]
    return Lp1Result(product, p, k, multipliers, tuple(lab), tuple(folded))

