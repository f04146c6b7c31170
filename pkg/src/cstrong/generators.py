"""Deterministic instance builders: extremal families, fixtures, seeded fuzz inputs."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional

from .colouring import Colouring
from .hypergraph import Hypergraph, SizeGuardExceeded, validate

DEFAULT_VERTEX_CAP = 4096


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of an n-set."""
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    return Hypergraph(n=n, edges=tuple(itertools.combinations(range(n), k)))


@dataclass(frozen=True)
class CoordinatePairSpec:
    """Bookkeeping for the coordinate-pair family.

    The vertex set splits into a base block A (ids 0..|A|-1, |A| = t+2l-4) and
    a cloud B of K**tau vertices indexed by tuples sigma in {0..K-1}**tau in
    lexicographic order (id = |A| + rank of sigma). s_sets lists the
    (t+l-2)-subsets of A in lexicographic order; edge i of the family joins
    s_sets[i] with a pair of cloud vertices whose tuples differ in coordinate i.
    """

    t: int
    l: int
    K: int
    tau: int
    a_size: int
    sigma_tuples: tuple[tuple[int, ...], ...]
    s_sets: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.a_size + len(self.sigma_tuples)

    def b_vertex(self, sigma: tuple[int, ...]) -> int:
        return self.a_size + self.sigma_tuples.index(sigma)

    def a_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.a_size))

    def b_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.a_size, self.n))


def coordinate_pair_family(
    t: int, l: int, K: int, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> tuple[Hypergraph, CoordinatePairSpec]:
    """t-intersecting (t+l)-uniform family whose links are cheap to colour.

    Edges are S_i + {b_sigma, b_sigma'} over all i and all tuple pairs whose
    i-th coordinates differ (the remaining coordinates are unconstrained).
    Every pair of vertices shares an edge, so the whole family is
    rainbow-forced at strength t+l, while each t-set link collapses to a
    small number of tuple classes.
    """
    if l < 2 or K < 2 or t < 1:
        raise ValueError("need t >= 1, l >= 2, K >= 2")
    a_size = t + 2 * l - 4
    tau = math.comb(a_size, l - 2)
    n = K**tau + a_size
    if n > vertex_cap:
        raise SizeGuardExceeded(f"{n} vertices exceed the cap of {vertex_cap}")
    sigma_tuples = tuple(itertools.product(range(K), repeat=tau))
    s_sets = tuple(itertools.combinations(range(a_size), t + l - 2))
    assert len(s_sets) == tau
    rank = {sigma: idx for idx, sigma in enumerate(sigma_tuples)}
    edges = []
    for i, s in enumerate(s_sets):
        for sigma, sigma2 in itertools.combinations(sigma_tuples, 2):
            if sigma[i] != sigma2[i]:
                edges.append(tuple(sorted(s + (a_size + rank[sigma], a_size + rank[sigma2]))))
    h = Hypergraph.from_edges(n, edges)
    validate(h)
    spec = CoordinatePairSpec(
        t=t, l=l, K=K, tau=tau, a_size=a_size, sigma_tuples=sigma_tuples, s_sets=s_sets
    )
    return h, spec


def coordinate_pair_link_colouring(spec: CoordinatePairSpec, s: tuple[int, ...]) -> Colouring:
    """Colouring of the full vertex set whose restriction to the link at s is l-strong.

    Three regimes, by how much of s lies in the cloud block B:
      - 3+ cloud vertices: the link is edgeless, one colour suffices;
      - 1 or 2 cloud vertices: rainbow the rest of A, one shared colour on the
        remaining cloud;
      - s inside A: rainbow the rest of A, then one colour per class of cloud
        tuples agreeing on every coordinate i with s contained in s_sets[i].
    Vertices of s itself receive fresh colours above the link palette.
    """
    s_set = set(s)
    if len(s_set) != spec.t or any(not (0 <= v < spec.n) for v in s_set):
        raise ValueError("s must be a t-subset of the vertex set")
    a_in_s = [v for v in range(spec.a_size) if v in s_set]
    b_in_s = [v for v in spec.b_vertices() if v in s_set]
    colours = [0] * spec.n
    next_colour = 0

    def fresh() -> int:
        nonlocal next_colour
        next_colour += 1
        return next_colour - 1

    if len(b_in_s) >= 3:
        shared = fresh()
        for v in range(spec.n):
            if v not in s_set:
                colours[v] = shared
    elif len(b_in_s) >= 1:
        for v in range(spec.a_size):
            if v not in s_set:
                colours[v] = fresh()
        cloud = [v for v in spec.b_vertices() if v not in s_set]
        if cloud:
            shared = fresh()
            for v in cloud:
                colours[v] = shared
    else:
        for v in range(spec.a_size):
            if v not in s_set:
                colours[v] = fresh()
        index_set = [i for i, si in enumerate(spec.s_sets) if s_set <= set(si)]
        class_colour: dict[tuple[int, ...], int] = {}
        for idx, sigma in enumerate(spec.sigma_tuples):
            v = spec.a_size + idx
            key = tuple(sigma[i] for i in index_set)
            if key not in class_colour:
                class_colour[key] = fresh()
            colours[v] = class_colour[key]
    for v in sorted(s_set):
        colours[v] = fresh()
    return Colouring(colours=tuple(colours), k=next_colour)


def kernel_augmented(g: Hypergraph, t: int) -> Hypergraph:
    """Append a fixed block of t-1 fresh vertices to every edge of a graph.

    The output is (t+1)-uniform, needs at least as many colours at strength
    t+1 as the graph needs at strength 2, and every sunflower in it has a
    kernel of size at least t-1.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if any(len(e) != 2 for e in g.edges):
        raise ValueError("input must be 2-uniform")
    block = tuple(range(g.n, g.n + t - 1))
    edges = [tuple(sorted(e + block)) for e in g.edges]
    return Hypergraph.from_edges(g.n + t - 1, edges)


def sunflower_gen(p: int, kernel_size: int, petal_size: int) -> Hypergraph:
    """Kernel 0..kernel_size-1 plus p disjoint petals of the given size."""
    if p < 2 or petal_size < 1 or kernel_size < 0:
        raise ValueError("need p >= 2, petal_size >= 1, kernel_size >= 0")
    kernel = tuple(range(kernel_size))
    edges = []
    for i in range(p):
        start = kernel_size + i * petal_size
        petal = tuple(range(start, start + petal_size))
        edges.append(kernel + petal)
    return Hypergraph.from_edges(kernel_size + p * petal_size, edges)


def _random_subset(rng: random.Random, pool: list[int]) -> list[int]:
    return [v for v in pool if rng.getrandbits(1)]


def random_t_intersecting(
    n: int, m: int, t: int, seed: int, max_tries: Optional[int] = None
) -> Hypergraph:
    """Seeded random t-intersecting hypergraph built around one shared core.

    Algorithm (fixed so failures replay): a Mersenne generator seeded with
    ``seed`` draws a t-subset core by shuffling 0..n-1 via getrandbits-driven
    Fisher-Yates and taking the first t vertices, then draws each edge as
    core + an independent coin-flip subset of the rest, rejecting duplicates
    and empty edges. Not uniform over all t-intersecting hypergraphs; every
    output passes the intersection predicate by construction.
    """
    if n < t or t < 0 or m < 0:
        raise ValueError("need n >= t >= 0 and m >= 0")
    rng = random.Random(seed)
    ids = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.getrandbits(32) % (i + 1)
        ids[i], ids[j] = ids[j], ids[i]
    core = sorted(ids[:t])
    rest = sorted(ids[t:])
    tries = 0
    limit = max_tries if max_tries is not None else 100 * max(m, 1)
    edges: set[tuple[int, ...]] = set()
    while len(edges) < m:
        tries += 1
        if tries > limit:
            raise ValueError(
                f"could not draw {m} distinct edges with core size {t} on {n} vertices"
            )
        edge = tuple(sorted(core + _random_subset(rng, rest)))
        if edge:
            edges.add(edge)
    h = Hypergraph.from_edges(n, sorted(edges))
    validate(h)
    return h
