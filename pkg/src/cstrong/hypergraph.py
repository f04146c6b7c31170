"""Hypergraphs on dense integer vertices: links, intersection predicates, sunflowers.

Vertices are the integers 0..n-1. Edges are non-empty subsets of the vertex
set, stored as sorted tuples; the edge list itself is kept in ascending
lexicographic order so that every operation is deterministic and JSON output
is canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class PropertyViolation(Exception):
    """An internal structural guarantee failed; this signals a bug, not bad input."""


class SizeGuardExceeded(ValueError):
    """A resource guard (enumeration size, vertex cap) was exceeded."""


@dataclass(frozen=True)
class HypergraphViolation:
    kind: str  # "empty-edge" | "vertex-out-of-range" | "duplicate-edge"
    edge_index: int
    detail: str


class InvalidHypergraph(ValueError):
    def __init__(self, violation: HypergraphViolation):
        self.violation = violation
        super().__init__(f"{violation.kind} at edge {violation.edge_index}: {violation.detail}")


def normalise_edge(edge: Iterable[int]) -> tuple[int, ...]:
    """Sort and deduplicate the members of a single edge."""
    return tuple(sorted(set(edge)))


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph; ``edges`` holds sorted vertex tuples in sorted order."""

    n: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build a hypergraph, normalising edge order; duplicates are kept for validate()."""
        norm = sorted(normalise_edge(e) for e in edges)
        return cls(n=n, edges=tuple(norm))

    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def subhypergraph(self, edge_indices: Iterable[int]) -> "Hypergraph":
        """Edge-subset hypergraph on the same vertex set."""
        idx = sorted(set(edge_indices))
        return Hypergraph(n=self.n, edges=tuple(self.edges[i] for i in idx))


def find_violation(h: Hypergraph) -> Optional[HypergraphViolation]:
    """Return the first violated invariant, or None if the hypergraph is well formed."""
    for i, e in enumerate(h.edges):
        if len(e) == 0:
            return HypergraphViolation("empty-edge", i, "edges must be non-empty")
        if any(not (0 <= v < h.n) for v in e):
            bad = next(v for v in e if not (0 <= v < h.n))
            return HypergraphViolation(
                "vertex-out-of-range", i, f"vertex {bad} outside 0..{h.n - 1}"
            )
        if tuple(sorted(set(e))) != e:
            return HypergraphViolation(
                "vertex-out-of-range", i, f"edge {e} is not a sorted duplicate-free tuple"
            )
    seen: dict[tuple[int, ...], int] = {}
    for i, e in enumerate(h.edges):
        if e in seen:
            return HypergraphViolation("duplicate-edge", i, f"edge {e} repeats index {seen[e]}")
        seen[e] = i
    return None


def validate(h: Hypergraph) -> None:
    """Raise InvalidHypergraph on the first violated invariant."""
    violation = find_violation(h)
    if violation is not None:
        raise InvalidHypergraph(violation)


def small_edges(h: Hypergraph, t: int) -> list[tuple[int, ...]]:
    """Lint: edges of size below t.

    Such edges are legal, but on hypergraphs containing a small edge nested in
    a bigger one the pair-based intersection predicate and the two-petal
    sunflower search can disagree (the nested pair has an empty petal), so
    callers fuzzing that equivalence should screen with this.
    """
    return [e for e in h.edges if len(e) < t]


@dataclass(frozen=True)
class Link:
    """Link of a vertex set: the residues e\\S of the edges e containing S.

    ``host_vertices[i]`` is the host id of the link's vertex ``i``;``to_link``
    inverts that map. ``had_full_edge`` records whether some host edge equalled
    S itself (its residue is empty and is dropped).
    """

    hyp: Hypergraph
    host_vertices: tuple[int, ...]
    had_full_edge: bool

    def to_link(self, host_vertex: int) -> int:
        return self.host_vertices.index(host_vertex)

    def to_host_edge(self, link_edge: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.host_vertices[v] for v in link_edge))


def link(h: Hypergraph, s: Iterable[int]) -> Link:
    s_set = frozenset(s)
    if any(not (0 <= v < h.n) for v in s_set):
        raise ValueError(f"link set {sorted(s_set)} not within 0..{h.n - 1}")
    host_vertices = tuple(v for v in range(h.n) if v not in s_set)
    renumber = {v: i for i, v in enumerate(host_vertices)}
    residues = set()
    had_full_edge = False
    for e in h.edges:
        if s_set <= set(e):
            residue = tuple(renumber[v] for v in e if v not in s_set)
            if residue:
                residues.add(residue)
            else:
                had_full_edge = True
    sub = Hypergraph(n=len(host_vertices), edges=tuple(sorted(residues)))
    return Link(hyp=sub, host_vertices=host_vertices, had_full_edge=had_full_edge)


def is_t_intersecting(h: Hypergraph, t: int) -> bool:
    """True iff every pair of distinct edges shares at least t vertices."""
    if t < 0:
        raise ValueError("t must be non-negative")
    sets = h.edge_sets()
    return all(
        len(sets[i] & sets[j]) >= t for i in range(len(sets)) for j in range(i + 1, len(sets))
    )


@dataclass(frozen=True)
class Sunflower:
    """p edges whose pairwise intersections all equal the common kernel."""

    edge_indices: tuple[int, ...]
    kernel: tuple[int, ...]
    petals: tuple[tuple[int, ...], ...]


def sunflower_violation(h: Hypergraph, sf: Sunflower) -> Optional[str]:
    """Independent check of the sunflower certificate; None when it is valid."""
    idx = sf.edge_indices
    if len(set(idx)) != len(idx) or any(not (0 <= i < h.m) for i in idx):
        return "edge indices must be distinct and in range"
    if len(idx) != len(sf.petals):
        return "one petal per edge required"
    kernel = frozenset(sf.kernel)
    edge_sets = [frozenset(h.edges[i]) for i in idx]
    for es, petal in zip(edge_sets, sf.petals):
        pet = frozenset(petal)
        if not pet:
            return "empty petal"
        if pet & kernel:
            return "petal meets kernel"
        if kernel | pet != es:
            return "edge is not kernel plus petal"
    for a in range(len(edge_sets)):
        for b in range(a + 1, len(edge_sets)):
            if edge_sets[a] & edge_sets[b] != kernel:
                return "pairwise intersection differs from kernel"
    return None


def find_sunflower(h: Hypergraph, p: int, max_kernel: int) -> Optional[Sunflower]:
    """First sunflower with exactly p petals and kernel size at most max_kernel.

    Exhaustive over p-subsets of edge indices in ascending lexicographic
    order, pruning a partial choice as soon as a pair of chosen edges fails to
    intersect in the candidate kernel. Petals must be non-empty, so an edge
    equal to the kernel never joins a sunflower.
    """
    if p < 2:
        raise ValueError("a sunflower needs at least two petals")
    if max_kernel < 0:
        raise ValueError("max_kernel must be non-negative")
    sets = h.edge_sets()
    m = len(sets)

    def extend(chosen: list[int], kernel: Optional[frozenset[int]]) -> Optional[Sunflower]:
        if len(chosen) == p:
            assert kernel is not None
            petals = tuple(tuple(sorted(sets[i] - kernel)) for i in chosen)
            return Sunflower(tuple(chosen), tuple(sorted(kernel)), petals)
        start = chosen[-1] + 1 if chosen else 0
        for cand in range(start, m - (p - len(chosen) - 1)):
            if kernel is None:
                if chosen:
                    new_kernel = sets[chosen[0]] & sets[cand]
                    if len(new_kernel) > max_kernel:
                        continue
                    if new_kernel == sets[chosen[0]] or new_kernel == sets[cand]:
                        continue  # would leave an empty petal
                else:
                    new_kernel = None
            else:
                if any(sets[i] & sets[cand] != kernel for i in chosen):
                    continue
                if kernel == sets[cand]:
                    continue
                new_kernel = kernel
            chosen.append(cand)
            found = extend(chosen, new_kernel)
            if found is not None:
                return found
            chosen.pop()
        return None

    return extend([], None)


def max_matching_at_least(h: Hypergraph, p: int) -> bool:
    """True iff h contains p pairwise-disjoint edges."""
    if p <= 0:
        return True
    sets = h.edge_sets()
    m = len(sets)

    def search(start: int, used: frozenset[int], count: int) -> bool:
        if count == p:
            return True
        if count + (m - start) < p:
            return False
        for i in range(start, m):
            if not (sets[i] & used):
                if search(i + 1, used | sets[i], count + 1):
                    return True
        return False

    return search(0, frozenset(), 0)


# --- JSON interchange -------------------------------------------------------

def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [sorted(e) for e in sorted(h.edges)]}


def hypergraph_from_dict(data: object) -> Hypergraph:
    """Parse the {"n": ..., "edges": [[...]]} interchange form; normalises order."""
    if not isinstance(data, dict):
        raise ValueError("hypergraph JSON must be an object")
    if set(data) != {"n", "edges"}:
        raise ValueError('hypergraph JSON needs exactly the keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError('"n" must be a non-negative integer')
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ValueError('"edges" must be a list of vertex lists')
    for e in edges:
        if not isinstance(e, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in e):
            raise ValueError("every edge must be a list of integers")
    h = Hypergraph.from_edges(n, edges)
    validate(h)
    return h
