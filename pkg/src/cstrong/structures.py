"""Region partitions, split-degenerate sequences, and bromeliads.

A sequence of edges e1..eL partitions the vertex set into regions: the
non-empty fibres of the membership signature v -> {i : v in ei}. Signatures
are serialised as sorted 1-based index tuples.

A bromeliad is an edge sequence (e1..eb) admitting cores C1 > C2 > ... > Cb
(strictly nested, Cb non-empty, C1 = e1) and petals Pi = ei \\ Ci that are
pairwise disjoint and disjoint from C1. The witness is unique: Cj = ei & ej
for every i < j, so it can be computed from the first edge and validated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .hypergraph import Hypergraph, PropertyViolation

Edge = tuple[int, ...]


def _as_edge(edge: Iterable[int]) -> Edge:
    return tuple(sorted(set(edge)))


@dataclass(frozen=True)
class RegionPartition:
    """Blocks keyed by signature: block(I) = (all ei, i in I) minus (all ei, i not in I)."""

    edge_seq: tuple[Edge, ...]
    blocks: dict[tuple[int, ...], tuple[int, ...]]

    def block_of(self, vertex: int) -> tuple[int, ...]:
        for block in self.blocks.values():
            if vertex in block:
                return block
        raise KeyError(vertex)

    def sorted_items(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return sorted(self.blocks.items())

    def to_dict(self) -> dict:
        return {
            "blocks": [
                {"signature": list(sig), "block": list(block)}
                for sig, block in self.sorted_items()
            ]
        }


def regions(h: Hypergraph, seq: Sequence[Iterable[int]]) -> RegionPartition:
    """Region partition of V(h) induced by an edge sequence of h."""
    edges = [_as_edge(e) for e in seq]
    known = set(h.edges)
    for e in edges:
        if e not in known:
            raise ValueError(f"unknown edge {list(e)}")
    fibres: dict[tuple[int, ...], list[int]] = {}
    edge_sets = [set(e) for e in edges]
    for v in range(h.n):
        sig = tuple(i + 1 for i, es in enumerate(edge_sets) if v in es)
        fibres.setdefault(sig, []).append(v)
    return RegionPartition(
        edge_seq=tuple(edges),
        blocks={sig: tuple(vs) for sig, vs in fibres.items()},
    )


@dataclass(frozen=True)
class SplitCheck:
    ok: bool
    failing_index: Optional[int] = None  # 1-based position in the sequence
    reason: Optional[str] = None  # "too-many-regions" | "contains-region"


def is_k_split_degenerate(h: Hypergraph, seq: Sequence[Iterable[int]], k: int) -> SplitCheck:
    """Check each edge against the regions of its prefix; first failure wins.

    Edge j may meet at most k regions of the partition induced by e1..e(j-1)
    and may contain none of them.
    """
    edges = [_as_edge(e) for e in seq]
    for j in range(1, len(edges) + 1):
        part = regions(h, edges[: j - 1])
        ej = set(edges[j - 1])
        met = [block for block in part.blocks.values() if ej & set(block)]
        if len(met) > k:
            return SplitCheck(ok=False, failing_index=j, reason="too-many-regions")
        if any(set(block) <= ej for block in part.blocks.values()):
            return SplitCheck(ok=False, failing_index=j, reason="contains-region")
    return SplitCheck(ok=True)


@dataclass(frozen=True)
class SplitDegenerateSeq:
    host: Hypergraph
    edges: tuple[Edge, ...]
    k: int

    def check(self) -> SplitCheck:
        return is_k_split_degenerate(self.host, self.edges, self.k)


def subsequence_check(
    h: Hypergraph, seq: Sequence[Iterable[int]], k: int, indices: Iterable[int]
) -> None:
    """Assert that the selected subsequence of a k-split-degenerate sequence is one too.

    A failure here is an implementation bug (the closure property is a
    theorem), hence PropertyViolation rather than a value error.
    """
    edges = [_as_edge(e) for e in seq]
    base = is_k_split_degenerate(h, edges, k)
    if not base.ok:
        raise ValueError(f"sequence is not {k}-split-degenerate: {base}")
    chosen = [edges[i] for i in sorted(set(indices))]
    result = is_k_split_degenerate(h, chosen, k)
    if not result.ok:
        raise PropertyViolation(
            f"subsequence closure failed at position {result.failing_index} ({result.reason})"
        )


def compatible_with(h: Hypergraph, seq: Sequence[Iterable[int]], edge: Iterable[int], k: int) -> bool:
    """True iff appending the edge keeps the sequence k-split-degenerate."""
    edges = [_as_edge(e) for e in seq] + [_as_edge(edge)]
    j = len(edges)
    part = regions(h, edges[: j - 1])
    ej = set(edges[-1])
    met = sum(1 for block in part.blocks.values() if ej & set(block))
    if met > k:
        return False
    return not any(set(block) <= ej for block in part.blocks.values())


@dataclass(frozen=True)
class Bromeliad:
    edges: tuple[Edge, ...]
    cores: tuple[Edge, ...]
    petals: tuple[Edge, ...]

    @property
    def b(self) -> int:
        return len(self.edges)

    @property
    def outer_edge(self) -> Edge:
        return self.edges[0]

    @property
    def crown(self) -> Edge:
        if self.b < 2:
            raise ValueError("a single-edge bromeliad has no crown")
        return self.cores[1]

    def to_dict(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "cores": [list(c) for c in self.cores],
            "petals": [list(p) for p in self.petals],
        }


@dataclass(frozen=True)
class BromeliadViolation:
    clause: str
    detail: str


def bromeliad_witness(seq: Sequence[Iterable[int]]) -> Union[Bromeliad, BromeliadViolation]:
    """Compute the unique core/petal witness of the sequence and validate it.

    Cores and petals come from the first edge (Ci = ei & e1, Pi = ei - e1);
    validation covers the strict core chain, petal disjointness, and the
    cross-pair identities Cj = ei & ej, Pj = ej - ei for all i < j.
    """
    edges = [_as_edge(e) for e in seq]
    if not edges:
        raise ValueError("a bromeliad needs at least one edge")
    sets = [frozenset(e) for e in edges]
    e1 = sets[0]
    cores = [e1] + [s & e1 for s in sets[1:]]
    petals = [frozenset()] + [s - e1 for s in sets[1:]]
    b = len(edges)
    for i in range(b - 1):
        if not cores[i + 1] < cores[i]:
            return BromeliadViolation(
                "core-chain",
                f"core {i + 2} is not a proper subset of core {i + 1}",
            )
    if not cores[-1]:
        return BromeliadViolation("empty-core", "the last core is empty")
    disjointness = petals[1:] + [e1]
    for a in range(len(disjointness)):
        for c in range(a + 1, len(disjointness)):
            if disjointness[a] & disjointness[c]:
                return BromeliadViolation(
                    "petal-overlap", "petals and the outer edge must be pairwise disjoint"
                )
    for i in range(b):
        for j in range(i + 1, b):
            if sets[i] & sets[j] != cores[j] or sets[j] - sets[i] != petals[j]:
                return BromeliadViolation(
                    "witness-inconsistent",
                    f"edges {i + 1},{j + 1} disagree with the unique witness",
                )
    return Bromeliad(
        edges=tuple(edges),
        cores=tuple(tuple(sorted(c)) for c in cores),
        petals=tuple(tuple(sorted(p)) for p in petals),
    )


def crown_compare(b1: Bromeliad, b2: Bromeliad) -> str:
    """Compare bromeliads by crown size: "less" | "equal-size" | "greater"."""
    s1, s2 = len(b1.crown), len(b2.crown)
    if s1 < s2:
        return "less"
    if s1 > s2:
        return "greater"
    return "equal-size"


def triple_classify(e1: Iterable[int], e2: Iterable[int], e3: Iterable[int]) -> str:
    """"blue" when the symmetric difference of the first two meets the third."""
    a, b, c = set(e1), set(e2), set(e3)
    return "blue" if (a ^ b) & c else "red"


def find_bromeliad(
    h: Hypergraph,
    pool: Sequence[Iterable[int]],
    b: int,
    compatible_seq: Optional[Sequence[Iterable[int]]] = None,
    k: Optional[int] = None,
) -> Optional[Bromeliad]:
    """Crown-minimal b-bromeliad among order-preserving subsequences of the pool.

    When a compatibility sequence is supplied (with its split parameter k),
    only pool edges whose individual append keeps the sequence
    k-split-degenerate are considered. Among all valid candidates the one
    with the smallest crown wins, ties broken by the lexicographically
    smallest index tuple; for b = 1 the first pool edge wins.
    """
    if b < 1:
        raise ValueError("b must be positive")
    edges = [_as_edge(e) for e in pool]
    known = set(h.edges)
    for e in edges:
        if e not in known:
            raise ValueError(f"pool edge {list(e)} is not an edge of the hypergraph")
    if compatible_seq is not None:
        if k is None:
            raise ValueError("compatibility filtering needs the split parameter k")
        allowed = [i for i, e in enumerate(edges) if compatible_with(h, compatible_seq, e, k)]
    else:
        allowed = list(range(len(edges)))

    best: Optional[Bromeliad] = None
    best_key: Optional[tuple] = None
    for combo in itertools.combinations(allowed, b):
        candidate = bromeliad_witness([edges[i] for i in combo])
        if isinstance(candidate, BromeliadViolation):
            continue
        if b == 1:
            return candidate
        key = (len(candidate.crown), combo)
        if best_key is None or key < best_key:
            best, best_key = candidate, key
    return best


def red_clique_to_bromeliad(
    h: Hypergraph,
    seq: Sequence[Iterable[int]],
    clique: Sequence[int],
    k: int,
) -> Bromeliad:
    """Bromeliad built from a red clique inside an intersecting split-degenerate sequence.

    Cores are Ci = e_a(i) & e_a(1), petals Pi = e_a(i) - e_a(1). Under the
    preconditions (all triples among the selected edges red, selected edges
    pairwise intersecting, host sequence k-split-degenerate) the result is
    always a valid bromeliad; a validation failure is reported as a bug.
    """
    edges = [_as_edge(e) for e in seq]
    indices = list(clique)
    if indices != sorted(set(indices)) or any(not (0 <= i < len(edges)) for i in indices):
        raise ValueError("clique indices must be strictly increasing positions in the sequence")
    check = is_k_split_degenerate(h, edges, k)
    if not check.ok:
        raise ValueError(f"host sequence is not {k}-split-degenerate: {check}")
    chosen = [set(edges[i]) for i in indices]
    for a in range(len(chosen)):
        for c in range(a + 1, len(chosen)):
            if not (chosen[a] & chosen[c]):
                raise ValueError("selected edges must pairwise intersect")
    for x, y, z in itertools.combinations(range(len(indices)), 3):
        if triple_classify(chosen[x], chosen[y], chosen[z]) == "blue":
            raise ValueError("every triple among the selected edges must be red")
    witness = bromeliad_witness([edges[i] for i in indices])
    if isinstance(witness, BromeliadViolation):
        raise PropertyViolation(
            f"red clique failed to produce a bromeliad: {witness.clause} ({witness.detail})"
        )
    return witness
