"""Colourings, strength certificates, and exact chromatic oracles.

A colouring here is a total assignment of colour indices 0..k-1 to the
vertices of a host hypergraph. A colouring is c-strong when every edge e
carries at least min(c, |e|) distinct colours.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .hypergraph import Hypergraph, Link, SizeGuardExceeded, link

BRUTE_FORCE_GUARD = 10**8


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.colours and not (0 <= min(self.colours) and max(self.colours) < self.k):
            raise ValueError("colour indices must lie in 0..k-1")
        if self.colours and self.k < 1:
            raise ValueError("k must be at least 1 when vertices exist")

    @property
    def n(self) -> int:
        return len(self.colours)


def constant_colouring(n: int, colour: int = 0, k: int = 1) -> Colouring:
    return Colouring(colours=(colour,) * n, k=k)


def rainbow_colouring(n: int) -> Colouring:
    return Colouring(colours=tuple(range(n)), k=max(n, 1)) if n else Colouring((), 0)


@dataclass(frozen=True)
class StrongColourCert:
    """Witness that a colouring is c-strong, with the distinct-colour count per edge."""

    c: int
    edge_colour_counts: tuple[int, ...]


@dataclass(frozen=True)
class FailingEdge:
    index: int
    edge: tuple[int, ...]
    colours_seen: int
    colours_required: int


def is_c_strong(
    h: Hypergraph, col: Colouring, c: int
) -> Union[StrongColourCert, FailingEdge]:
    """Certificate, or the lowest-index edge seeing fewer than min(c, |e|) colours."""
    if c < 1:
        raise ValueError("c must be at least 1")
    if col.n != h.n:
        raise ValueError(f"colouring covers {col.n} vertices, hypergraph has {h.n}")
    counts = []
    for i, e in enumerate(h.edges):
        seen = len({col.colours[v] for v in e})
        required = min(c, len(e))
        if seen < required:
            return FailingEdge(index=i, edge=e, colours_seen=seen, colours_required=required)
        counts.append(seen)
    return StrongColourCert(c=c, edge_colour_counts=tuple(counts))


def product_colouring(cols: Sequence[Colouring]) -> Colouring:
    """Vertex-wise tuple of the inputs, re-indexed densely in first-occurrence order."""
    if not cols:
        raise ValueError("product of an empty list of colourings")
    n = cols[0].n
    if any(c.n != n for c in cols):
        raise ValueError("all colourings must cover the same vertex set")
    index: dict[tuple[int, ...], int] = {}
    out = []
    for v in range(n):
        key = tuple(c.colours[v] for c in cols)
        if key not in index:
            index[key] = len(index)
        out.append(index[key])
    k = len(index) if n else 0
    return Colouring(colours=tuple(out), k=k)


def _search_k_colouring(h: Hypergraph, c: int, k: int) -> Optional[tuple[int, ...]]:
    """Backtracking search for a c-strong k-colouring; None when none exists.

    Vertices are processed in descending-degree order (ties by index). Vertex
    number i in that order may use a colour at most one above the largest
    colour used so far, which removes colour-permutation symmetry. An edge
    prunes the branch as soon as its distinct colours plus its uncoloured
    vertices cannot reach min(c, |e|).
    """
    n = h.n
    degree = [0] * n
    for e in h.edges:
        for v in e:
            degree[v] += 1
    order = sorted(range(n), key=lambda v: (-degree[v], v))
    position = {v: i for i, v in enumerate(order)}

    m = len(h.edges)
    need = [min(c, len(e)) for e in h.edges]
    if any(need[i] > k for i in range(m)):
        return None
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(h.edges):
        for v in e:
            incident[position[v]].append(i)

    colour_of = [-1] * n  # indexed by order position
    counts = [[0] * k for _ in range(m)]
    distinct = [0] * m
    uncoloured = [len(e) for e in h.edges]

    def assign(pos: int, col: int) -> bool:
        ok = True
        for ei in incident[pos]:
            uncoloured[ei] -= 1
            counts[ei][col] += 1
            if counts[ei][col] == 1:
                distinct[ei] += 1
            if distinct[ei] + uncoloured[ei] < need[ei]:
                ok = False
        return ok

    def unassign(pos: int, col: int) -> None:
        for ei in incident[pos]:
            uncoloured[ei] += 1
            counts[ei][col] -= 1
            if counts[ei][col] == 0:
                distinct[ei] -= 1

    def dfs(pos: int, max_used: int) -> bool:
        if pos == n:
            return True
        limit = min(k - 1, max_used + 1)
        for col in range(limit + 1):
            colour_of[pos] = col
            feasible = assign(pos, col)
            if feasible and dfs(pos + 1, max(max_used, col)):
                return True
            unassign(pos, col)
            colour_of[pos] = -1
        return False

    if not dfs(0, -1):
        return None
    result = [0] * n
    for pos, v in enumerate(order):
        result[v] = colour_of[pos]
    return tuple(result)


def chi_strong(h: Hypergraph, c: int) -> tuple[int, Colouring]:
    """Exact c-strong chromatic number with a witness colouring.

    Iterative deepening on the colour count k: each k is either certified
    unreachable by an exhausted symmetric search or yields the witness. The
    rainbow colouring shows k = n always suffices, so the loop terminates.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    if h.n == 0:
        return 0, Colouring((), 0)
    if not h.edges:
        return 1, constant_colouring(h.n)
    lower = max(min(c, len(e)) for e in h.edges)
    for k in range(max(1, lower), h.n + 1):
        found = _search_k_colouring(h, c, k)
        if found is not None:
            return k, Colouring(colours=found, k=k)
    raise AssertionError("rainbow colouring must succeed at k = n")


def chi_strong_bruteforce(h: Hypergraph, c: int, k: int) -> bool:
    """True iff some k-colouring is c-strong, by plain exhaustive enumeration.

    Deliberately unoptimised (no pruning, no symmetry breaking) so it can act
    as an independent oracle for chi_strong. Guarded to k**n <= 10**8.
    """
    if c < 1 or k < 0:
        raise ValueError("need c >= 1 and k >= 0")
    if h.n == 0:
        return True
    if k == 0:
        return False
    if k**h.n > BRUTE_FORCE_GUARD:
        raise SizeGuardExceeded(f"{k}**{h.n} assignments exceed {BRUTE_FORCE_GUARD}")
    needs = [(e, min(c, len(e))) for e in h.edges]
    for assignment in itertools.product(range(k), repeat=h.n):
        if all(len({assignment[v] for v in e}) >= need for e, need in needs):
            return True
    return False


def chi_link(h: Hypergraph, t: int, ell: int) -> tuple[int, tuple[int, ...]]:
    """max(1, max over t-subsets S of chi_strong of the link at S), with the
    lexicographically smallest maximising S."""
    if not (0 <= t <= h.n):
        raise ValueError("need 0 <= t <= n")
    best = 1
    best_s: tuple[int, ...] = tuple(range(t))
    for s in itertools.combinations(range(h.n), t):
        value, _ = chi_strong(link(h, s).hyp, ell)
        if value > best:
            best = value
            best_s = s
    return best, best_s


def rainbow_forced(h: Hypergraph, c: int) -> bool:
    """True iff every pair of distinct vertices shares an edge of size at most c.

    Edges of size at most c must be rainbow under any c-strong colouring, so a
    true result forces chi_strong(h, c) = n; this certifies instances far past
    brute-force range.
    """
    if h.n <= 1:
        return True
    uncovered = {(u, v) for u in range(h.n) for v in range(u + 1, h.n)}
    for e in h.edges:
        if len(e) <= c:
            for pair in itertools.combinations(e, 2):
                uncovered.discard(pair)
    return not uncovered


# --- JSON interchange -------------------------------------------------------

def colouring_to_dict(col: Colouring) -> dict:
    return {"k": col.k, "colours": list(col.colours)}


def colouring_from_dict(data: object) -> Colouring:
    if not isinstance(data, dict) or set(data) != {"k", "colours"}:
        raise ValueError('colouring JSON needs exactly the keys "k" and "colours"')
    k = data["k"]
    colours = data["colours"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError('"k" must be an integer')
    if not isinstance(colours, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in colours
    ):
        raise ValueError('"colours" must be a list of integers')
    return Colouring(colours=tuple(colours), k=k)
