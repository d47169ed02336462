"""Small named graphs shared by the coloring and acceptance tests."""
from sidoncolor.graphs import cartesian_product, complete, cycle, hypercube, path, power, star, tree_from_edges


def _prod(*fs):
    return cartesian_product(list(fs)).graph


CORPUS = {
    **{f"P{n}": path(n) for n in range(2, 8)},
    **{f"C{n}": cycle(n) for n in range(3, 9)},
    "P5^2": power(path(5), 2),
    "P6^2": power(path(6), 2),
    "P7^2": power(path(7), 2),
    "C6^2": power(cycle(6), 2),
    "C7^2": power(cycle(7), 2),
    "K1,3": star(3),
    "K1,4": star(4),
    "spider": tree_from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    "caterpillar": tree_from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6), (3, 7)]),
    "Q2": hypercube(2),
    "Q3": hypercube(3),
    "K4": complete(4),
    "P2xP3": _prod(path(2), path(3)),
    "P3xP3": _prod(path(3), path(3)),
    "P3xP4": _prod(path(3), path(4)),
    "P2xP2xP3": _prod(path(2), path(2), path(3)),
    "C3xP2": _prod(cycle(3), path(2)),
    "C4xP3": _prod(cycle(4), path(3)),
    "K3xK3": _prod(complete(3), complete(3)),
    "K1,3xP2": _prod(star(3), path(2)),
}

TINY = {name: g for name, g in CORPUS.items() if g.n <= 6}
