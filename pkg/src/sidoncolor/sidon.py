"""k-multiplicative Sidon sets: generators, verification, exact densities.

A set A of naturals is k-multiplicative when ``a*x == b*y`` with
``a, b`` in ``[1, k]`` and ``x, y`` in A forces ``a == b`` and ``x == y``.
Three constructions are provided: the progression R_k (x = 1 mod k), the
integers S_k coprime to every prime up to k, and T_k, whose small-prime
exponents are multiples of ``floor(log_p k) + 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Iterable, Iterator

from ._budget import BudgetExceeded, Counter, resolve_budget


@lru_cache(maxsize=None)
def primes_upto(k: int) -> tuple[int, ...]:
    """Primes ``<= k`` by trial division."""
    out = []
    for m in range(2, k + 1):
        if all(m % p for p in out if p * p <= m):
            out.append(m)
    return tuple(out)


def primorial(k: int) -> int:
    """Product of the primes up to k (1 for k < 2)."""
    return prod(primes_upto(k))


@lru_cache(maxsize=None)
def exponent_moduli(k: int) -> tuple[int, ...]:
    """``floor(log_p k) + 1`` for each prime p <= k, computed in integers."""
    out = []
    for p in primes_upto(k):
        a, q = 0, p
        while q <= k:
            a += 1
            q *= p
        out.append(a + 1)
    return tuple(out)


@dataclass(frozen=True)
class FactorProfile:
    primes: tuple[int, ...]
    small_exponents: tuple[int, ...]
    coprime_part: int

    def value(self) -> int:
        return self.coprime_part * prod(p**e for p, e in zip(self.primes, self.small_exponents))


def factor_profile(x: int, k: int) -> FactorProfile:
    """Split x into its exponents on the primes ``<= k`` and the coprime remainder."""
    if x < 1 or k < 1:
        raise ValueError("factor_profile needs x >= 1 and k >= 1")
    primes = primes_upto(k)
    exps = []
    for p in primes:
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        exps.append(e)
    return FactorProfile(primes, tuple(exps), x)


def coprime_part(x: int, k: int) -> int:
    return factor_profile(x, k).coprime_part


def find_violation(elements: Iterable[int], k: int) -> tuple[int, int, int, int] | None:
    """Return a witness ``(a, b, x, y)`` with ``a*x == b*y`` and ``(a, x) != (b, y)``.

    Any repeated value in the multiset ``{a*x}`` is a violation, so one hash
    pass over ``|S| * k`` products decides the property.
    """
    seen: dict[int, tuple[int, int]] = {}
    for x in sorted(set(elements)):
        for a in range(1, k + 1):
            v = a * x
            if v in seen:
                b, y = seen[v]
                return (b, a, y, x)
            seen[v] = (a, x)
    return None


def is_k_multiplicative(elements: Iterable[int], k: int) -> bool:
    return find_violation(elements, k) is None


def is_k_multiplicative_naive(elements: Iterable[int], k: int) -> bool:
    """Direct quadruple scan, kept independent of :func:`find_violation`."""
    s = list(elements)
    for x in s:
        for y in s:
            for a in range(1, k + 1):
                for b in range(1, k + 1):
                    if a * x == b * y and (a != b or x != y):
                        return False
    return True


@dataclass(frozen=True)
class SidonSet:
    k: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        els = self.elements
        if any(e < 1 for e in els) or any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("elements must be strictly increasing positive integers")
        bad = find_violation(els, self.k)
        if bad is not None:
            raise ValueError(f"not {self.k}-multiplicative: {bad[0]}*{bad[2]} == {bad[1]}*{bad[3]}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def max(self) -> int:
        return self.elements[-1]

    def prefix(self, d: int) -> "SidonSet":
        if d > len(self.elements):
            raise ValueError(f"set has only {len(self.elements)} elements, need {d}")
        return SidonSet(self.k, self.elements[:d])


def in_R(x: int, k: int) -> bool:
    return x % k == 1 % k


def in_S(x: int, k: int) -> bool:
    return gcd(x, primorial(k)) == 1


def in_T(x: int, k: int) -> bool:
    prof = factor_profile(x, k)
    return all(e % a == 0 for e, a in zip(prof.small_exponents, exponent_moduli(k)))


MEMBERSHIP = {"r": in_R, "s": in_S, "t": in_T}


def iter_set(kind: str, k: int) -> Iterator[int]:
    """Elements of R_k, S_k or T_k in increasing order (infinite)."""
    test = MEMBERSHIP[kind.lower()]
    return (x for x in itertools.count(1) if test(x, k))


def first_elements(kind: str, k: int, count: int) -> SidonSet:
    if count < 1:
        raise ValueError("count must be positive")
    return SidonSet(k, tuple(itertools.islice(iter_set(kind, k), count)))


def up_to(kind: str, k: int, limit: int) -> SidonSet:
    test = MEMBERSHIP[kind.lower()]
    return SidonSet(k, tuple(x for x in range(1, limit + 1) if test(x, k)))


def generate_R(k: int, count: int) -> SidonSet:
    if k < 1 or count < 1:
        raise ValueError("generate_R needs k >= 1 and count >= 1")
    return SidonSet(k, tuple(1 + i * k for i in range(count)))


def generate_S(k: int, limit: int) -> SidonSet:
    return up_to("s", k, limit)


def generate_T(k: int, limit: int) -> SidonSet:
    return up_to("t", k, limit)


def density_R(k: int) -> Fraction:
    return Fraction(1, k)


def density_S(k: int) -> Fraction:
    return prod((1 - Fraction(1, p) for p in primes_upto(k)), start=Fraction(1))


def density_T(k: int) -> Fraction:
    boost = prod(
        (1 + Fraction(1, p**a - 1) for p, a in zip(primes_upto(k), exponent_moduli(k))),
        start=Fraction(1),
    )
    return density_S(k) * boost


def density_periodic(kind: str, period: int, k: int) -> Fraction:
    """``|A ∩ [p]| / p`` for a p-periodic set A."""
    test = MEMBERSHIP[kind.lower()]
    return Fraction(sum(1 for x in range(1, period + 1) if test(x, k)), period)


DENSITY = {"r": density_R, "s": density_S, "t": density_T}


# -- auxiliary graph G_{n,k} ------------------------------------------------

@dataclass(frozen=True)
class AuxGraphComponent:
    seed: int
    members: tuple[int, ...]


def aux_adjacent(x: int, y: int, k: int) -> bool:
    """True iff ``a*x == b*y`` for some ``a, b <= k`` and ``x != y``."""
    if x == y:
        return False
    g = gcd(x, y)
    return x // g <= k and y // g <= k


def aux_graph_components(n: int, k: int) -> list[AuxGraphComponent]:
    """Connected components of G_{n,k}, keyed by coprime part, ordered by seed."""
    if n < 1 or k < 1:
        raise ValueError("aux_graph_components needs n >= 1 and k >= 1")
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(coprime_part(x, k), []).append(x)
    return [AuxGraphComponent(s, tuple(groups[s])) for s in sorted(groups)]


def closed_neighbourhood(x: int, n: int, k: int) -> set[int]:
    return {x} | {y for y in range(1, n + 1) if aux_adjacent(x, y, k)}


def min_neighbourhood_check(n: int, k: int) -> bool:
    """Every vertex of a component with at least k members has a closed
    neighbourhood of size ``>= isqrt(k)``."""
    need = isqrt(k)
    for comp in aux_graph_components(n, k):
        if len(comp.members) < k:
            continue
        for x in comp.members:
            nbhd = sum(1 for y in comp.members if y == x or aux_adjacent(x, y, k))
            if nbhd < need:
                return False
    return True


def _component_mis(members: tuple[int, ...], k: int, counter: Counter) -> tuple[int, ...]:
    """Lexicographically smallest maximum independent set of one component.

    Include-first branching over ascending members visits equal-size sets in
    lexicographic order, and only strictly larger sets replace the incumbent.
    """
    m = len(members)
    nbr = [0] * m
    for i, j in itertools.combinations(range(m), 2):
        if aux_adjacent(members[i], members[j], k):
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i

    # the singleton seed is always feasible
    best = [1 << 0]

    def bound(cand: int) -> int:
        # greedy clique cover of the candidates: one pick per clique at most
        cliques = 0
        while cand:
            cliques += 1
            low = cand & -cand
            clique = low
            rest = cand & ~low & nbr[low.bit_length() - 1]
            while rest:
                b = rest & -rest
                clique |= b
                rest &= nbr[b.bit_length() - 1] & ~b
            cand &= ~clique
        return cliques

    def search(chosen: int, size: int, cand: int):
        counter.tick()
        if size > best[0].bit_count():
            best[0] = chosen
        if not cand or size + bound(cand) <= best[0].bit_count():
            return
        low = cand & -cand
        v = low.bit_length() - 1
        search(chosen | low, size + 1, cand & ~low & ~nbr[v])
        search(chosen, size, cand & ~low)

    try:
        search(0, 0, (1 << m) - 1)
    except BudgetExceeded as exc:
        exc.best = tuple(members[i] for i in range(m) if best[0] >> i & 1)
        raise
    return tuple(members[i] for i in range(m) if best[0] >> i & 1)


def max_sidon_subset(n: int, k: int, budget: int | None = None) -> SidonSet:
    """A maximum k-multiplicative subset of ``[1, n]``.

    Solved as an independent-set search per component of G_{n,k}. Raises
    :class:`BudgetExceeded` with ``best`` set to a feasible (non-optimal)
    :class:`SidonSet` when the node budget runs out.
    """
    if n < 1 or k < 1:
        raise ValueError("max_sidon_subset needs n >= 1 and k >= 1")
    counter = Counter(resolve_budget(budget), "max_sidon_subset")
    comps = aux_graph_components(n, k)
    chosen: list[int] = []
    for i, comp in enumerate(comps):
        try:
            chosen.extend(_component_mis(comp.members, k, counter))
        except BudgetExceeded as exc:
            partial = chosen + list(exc.best) + [c.seed for c in comps[i + 1:]]
            exc.best = SidonSet(k, tuple(sorted(partial)))
            raise
    return SidonSet(k, tuple(sorted(chosen)))
