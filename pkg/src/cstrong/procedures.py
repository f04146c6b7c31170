"""Constructive colouring procedures and the iterated bromeliad-pruning trace.

Each procedure here either produces a colouring certificate (re-checked by
the strength validator before being returned) or a structural witness for why
the colouring route is blocked. Runtime guards replace asymptotic
"sufficiently large" constants: every branch condition is an exact chromatic
computation, so the procedures are total on desk-scale inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .colouring import (
    Colouring,
    FailingEdge,
    chi_strong,
    is_c_strong,
    product_colouring,
)
from .hypergraph import (
    Hypergraph,
    PropertyViolation,
    Sunflower,
    find_sunflower,
    is_t_intersecting,
    link,
)
from .structures import (
    Bromeliad,
    BromeliadViolation,
    bromeliad_witness,
    crown_compare,
    find_bromeliad,
    is_k_split_degenerate,
    regions,
)

Edge = tuple[int, ...]


def regional_colouring(h: Hypergraph, seq: Sequence[Iterable[int]], c: int) -> Colouring:
    """Fresh-palette colouring of the regions induced by an edge sequence.

    Regions of size below c are rainbow; larger regions are split into exactly
    c non-empty colour classes (vertices ascending, contiguous chunks as equal
    as possible). Distinct regions never share a colour, so the total count is
    at most c * 2**len(seq).
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    part = regions(h, seq)
    colours = [0] * h.n
    next_colour = 0
    for _, block in part.sorted_items():
        size = len(block)
        if size < c:
            for v in block:
                colours[v] = next_colour
                next_colour += 1
        else:
            q, r = divmod(size, c)
            start = 0
            for chunk in range(c):
                width = q + 1 if chunk < r else q
                for v in block[start : start + width]:
                    colours[v] = next_colour
                start += width
                next_colour += 1
    return Colouring(colours=tuple(colours), k=max(next_colour, 1) if h.n else 0)


@dataclass(frozen=True)
class ExtensionOutcome:
    """Either an edge extending the split-degenerate sequence, or a strong certificate."""

    edge: Optional[Edge]
    extended_seq: Optional[tuple[Edge, ...]]
    certificate: Optional[Colouring]
    product_colours: int
    link_colour_bound: int

    @property
    def is_extension(self) -> bool:
        return self.edge is not None


def _link_colouring_for_vertex(h: Hypergraph, v: int, strength: int) -> Colouring:
    lk = link(h, (v,))
    _, witness = chi_strong(lk.hyp, strength)
    colours = [0] * h.n
    for i, host in enumerate(lk.host_vertices):
        colours[host] = witness.colours[i]
    return Colouring(colours=tuple(colours), k=max(witness.k, 1))


def _restrict_to_link(col: Colouring, lk) -> Colouring:
    return Colouring(
        colours=tuple(col.colours[host] for host in lk.host_vertices),
        k=max(col.k, 1),
    )


def extend_split_degenerate(
    h: Hypergraph,
    seq: Sequence[Iterable[int]],
    t: int,
    l: int,
    link_colourings: Optional[dict[int, Colouring]] = None,
) -> ExtensionOutcome:
    """One step of the sequence-growing dichotomy at strength t+l.

    Builds the product of the regional colouring with one colouring per
    vertex of a small region (each of whose restrictions to that vertex's
    link must be (t+l-1)-strong; they are generated by the exact solver when
    not supplied). If the product is (t+l)-strong it is returned as the
    certificate; otherwise the lowest-index edge witnessing failure provably
    extends the (t+l-1)-split-degenerate sequence, and is returned after that
    extension has been re-checked.
    """
    c = t + l
    k = c - 1
    if c < 2:
        raise ValueError("need t + l >= 2")
    seq_edges = [tuple(sorted(set(e))) for e in seq]
    pre = is_k_split_degenerate(h, seq_edges, k)
    if not pre.ok:
        raise ValueError(f"sequence is not {k}-split-degenerate: {pre}")

    part = regions(h, seq_edges)
    small_vertices = sorted(
        v for _, block in part.sorted_items() if len(block) < c for v in block
    )
    supplied = link_colourings or {}
    per_vertex: list[Colouring] = []
    for v in small_vertices:
        if v in supplied:
            col = supplied[v]
            lk = link(h, (v,))
            check = is_c_strong(lk.hyp, _restrict_to_link(col, lk), k)
            if isinstance(check, FailingEdge):
                raise ValueError(
                    f"supplied colouring for vertex {v} is not {k}-strong on its link "
                    f"(edge {check.edge} sees {check.colours_seen} colours)"
                )
            per_vertex.append(col)
        else:
            per_vertex.append(_link_colouring_for_vertex(h, v, k))

    regional = regional_colouring(h, seq_edges, c)
    product = product_colouring([regional] + per_vertex)
    link_bound = max((col.k for col in per_vertex), default=1)

    verdict = is_c_strong(h, product, c)
    if not isinstance(verdict, FailingEdge):
        return ExtensionOutcome(
            edge=None,
            extended_seq=None,
            certificate=product,
            product_colours=product.k,
            link_colour_bound=link_bound,
        )
    new_edge = verdict.edge
    extended = tuple(seq_edges) + (new_edge,)
    post = is_k_split_degenerate(h, extended, k)
    if not post.ok:
        raise PropertyViolation(
            f"failing edge {new_edge} did not extend the sequence: {post.reason}"
        )
    return ExtensionOutcome(
        edge=new_edge,
        extended_seq=extended,
        certificate=None,
        product_colours=product.k,
        link_colour_bound=link_bound,
    )


@dataclass(frozen=True)
class PruneOutcome:
    """Petal index and surviving sub-hypergraph, or a (b-1)-strong certificate."""

    j: Optional[int]
    sub: Optional[Hypergraph]
    sub_indices: Optional[tuple[int, ...]]
    chi_sub: Optional[int]
    certificate: Optional[Colouring]

    @property
    def is_subhypergraph(self) -> bool:
        return self.j is not None


def prune(h: Hypergraph, brom: Bromeliad, r: int) -> PruneOutcome:
    """Keep only edges missing one petal, or colour everything with few colours.

    For j = 2..b let H_j be the edges of h disjoint from petal j. The first j
    whose H_j still needs r colours at strength b-1 is returned together with
    H_j. When no petal works, the product of the petal colouring (petal j
    takes colour j, everything else colour 1) with optimal (b-1)-strong
    colourings of every H_j is (b-1)-strong on all of h, which is certified
    before returning; it uses at most b * (r-1)**(b-1) colours.
    """
    b = brom.b
    if b < 2:
        raise ValueError("pruning needs a bromeliad with at least two edges")
    if h.n == 0:
        raise ValueError("empty host")
    sets = h.edge_sets()
    witnesses: list[Colouring] = []
    for j in range(2, b + 1):
        petal = frozenset(brom.petals[j - 1])
        kept = tuple(i for i in range(h.m) if not (sets[i] & petal))
        sub = h.subhypergraph(kept)
        value, witness = chi_strong(sub, b - 1)
        if value >= r:
            return PruneOutcome(j=j, sub=sub, sub_indices=kept, chi_sub=value, certificate=None)
        witnesses.append(witness)

    petal_colours = [0] * h.n
    for j in range(2, b + 1):
        for v in brom.petals[j - 1]:
            petal_colours[v] = j - 1
    petal_colouring = Colouring(colours=tuple(petal_colours), k=b)
    combined = product_colouring([petal_colouring] + witnesses)
    verdict = is_c_strong(h, combined, b - 1)
    if isinstance(verdict, FailingEdge):
        raise PropertyViolation(
            f"pruning product failed to be {b - 1}-strong on edge {verdict.edge}"
        )
    return PruneOutcome(j=None, sub=None, sub_indices=None, chi_sub=None, certificate=combined)


@dataclass(frozen=True)
class LinkExtensionResult:
    colouring: Colouring
    s: tuple[int, ...]
    link_chi: int


def best_link_extension_colouring(h: Hypergraph, c: int) -> Optional[LinkExtensionResult]:
    """Extend an optimal weak colouring of the richest (c-2)-set link.

    Scans all (c-2)-subsets S for the largest weak chromatic number of the
    link, keeping the lexicographically smallest maximiser. Below the 2c
    guard the large-chromatic regime does not hold and None is returned.
    Otherwise the optimal weak colouring of that link, extended by c-2 fresh
    colours on S, is certified c-strong; it uses chi(link) + c - 2 colours.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    t = c - 2
    if h.n < t:
        raise ValueError("fewer vertices than the link set size")
    if not is_t_intersecting(h, t):
        raise ValueError(f"host is not {t}-intersecting")
    best_value = -1
    best_s: Optional[tuple[int, ...]] = None
    for s in itertools.combinations(range(h.n), t):
        value, _ = chi_strong(link(h, s).hyp, 2)
        if value > best_value:
            best_value = value
            best_s = s
    assert best_s is not None
    if best_value < 2 * c:
        return None
    lk = link(h, best_s)
    value, witness = chi_strong(lk.hyp, 2)
    colours = [0] * h.n
    for i, host in enumerate(lk.host_vertices):
        colours[host] = witness.colours[i]
    for offset, v in enumerate(sorted(best_s)):
        colours[v] = value + offset
    theta = Colouring(colours=tuple(colours), k=value + t)
    verdict = is_c_strong(h, theta, c)
    if isinstance(verdict, FailingEdge):
        raise PropertyViolation(
            f"link extension colouring failed to be {c}-strong on edge {verdict.edge}"
        )
    return LinkExtensionResult(colouring=theta, s=best_s, link_chi=value)


@dataclass(frozen=True)
class PetalColouringResult:
    colouring: Colouring
    sunflower: Sunflower
    link_values: tuple[int, ...]


def sunflower_petal_colouring(h: Hypergraph, t: int, l: int) -> Optional[PetalColouringResult]:
    """Colour a t-intersecting host through a (t+l)-petal sunflower.

    Searches for a sunflower with t+l petals and kernel of size at most
    t+l-2, preferring smaller kernels; without one the host is already in the
    bounded regime and None is returned. With one, the petal colouring
    (petal i takes colour i, colour 1 elsewhere) is multiplied with exact
    l-strong link colourings for every t-subset of the kernel, and the kernel
    itself receives fresh colours. The result is certified (t+l)-strong.
    """
    if t < 1 or l < 1:
        raise ValueError("need t >= 1 and l >= 1")
    if not is_t_intersecting(h, t):
        raise ValueError(f"host is not {t}-intersecting")
    p = t + l
    sf: Optional[Sunflower] = None
    for kernel_bound in range(0, t + l - 1):
        sf = find_sunflower(h, p, kernel_bound)
        if sf is not None:
            break
    if sf is None:
        return None
    kernel = set(sf.kernel)

    petal_colours = [0] * h.n
    for idx, petal in enumerate(sf.petals):
        for v in petal:
            petal_colours[v] = idx
    base = Colouring(colours=tuple(petal_colours), k=p)

    link_cols: list[Colouring] = []
    link_values: list[int] = []
    for s_prime in itertools.combinations(sorted(kernel), t):
        lk = link(h, s_prime)
        value, witness = chi_strong(lk.hyp, l)
        colours = [0] * h.n
        for i, host in enumerate(lk.host_vertices):
            colours[host] = witness.colours[i]
        link_cols.append(Colouring(colours=tuple(colours), k=max(witness.k, 1)))
        link_values.append(value)

    combined = product_colouring([base] + link_cols)
    dense: dict[object, int] = {}
    final = []
    for v in range(h.n):
        key: object = ("kernel", v) if v in kernel else ("product", combined.colours[v])
        if key not in dense:
            dense[key] = len(dense)
        final.append(dense[key])
    result = Colouring(colours=tuple(final), k=max(len(dense), 1) if h.n else 0)
    verdict = is_c_strong(h, result, p)
    if isinstance(verdict, FailingEdge):
        raise PropertyViolation(
            f"sunflower petal colouring failed to be {p}-strong on edge {verdict.edge}"
        )
    return PetalColouringResult(
        colouring=result, sunflower=sf, link_values=tuple(link_values)
    )


@dataclass(frozen=True)
class TraceParams:
    """Knobs for the pruning trace; thresholds stand in for the proof's constants."""

    t: int
    l: int
    p: int
    thresholds: tuple[int, ...]
    step_cap: Optional[int] = None

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if self.t < 0 or self.l < 0 or self.t + self.l < 2:
            raise ValueError("need t, l >= 0 with t + l >= 2")
        if len(self.thresholds) < 1:
            raise ValueError("at least one threshold required")
        if any(a <= b for a, b in zip(self.thresholds, self.thresholds[1:])):
            raise ValueError("thresholds must be strictly decreasing")
        if self.step_cap is not None and self.step_cap < 0:
            raise ValueError("step cap must be non-negative")

    @property
    def b(self) -> int:
        return self.t + self.l + 1

    @property
    def k(self) -> int:
        return self.t + self.l - 1

    @property
    def c(self) -> int:
        return self.t + self.l


@dataclass(frozen=True)
class TraceStep:
    index: int  # 1-based loop counter
    bromeliad: Bromeliad
    pruned_position: int  # position of the pruned edge inside the bromeliad (1-based)
    pruned_edge: Edge
    petal: Edge
    sub_edge_indices: tuple[int, ...]  # indices into the original edge list
    chi_sub: int
    threshold: int


@dataclass(frozen=True)
class DiagonalContradiction:
    """A later diagonal bromeliad strictly below an earlier chosen one."""

    positions: tuple[int, ...]  # 1-based positions in the pruned-edge sequence
    diagonal: Bromeliad
    reduced: Bromeliad
    base_step: int
    comparison: str


@dataclass(frozen=True)
class TraceResult:
    steps: tuple[TraceStep, ...]
    initial_chi: int
    certificate: Optional[Colouring]
    certificate_edge_indices: Optional[tuple[int, ...]]
    failure: Optional[tuple[str, int]]
    contradiction: Optional[DiagonalContradiction]


def prune_trace(h: Hypergraph, params: TraceParams) -> TraceResult:
    """Iterate bromeliad selection and pruning until a certificate or contradiction.

    Step j finds the crown-minimal b-bromeliad of the current sub-hypergraph
    compatible with the pruned edges so far, then prunes it demanding
    strength-(b-1) chromatic number above threshold j. When every step
    succeeds, a (b+1)-bromeliad is extracted from the pruned-edge sequence;
    dropping its first edge yields a bromeliad that the checks certify as
    strictly crown-smaller than the one chosen when its base step ran, which
    is the terminal contradiction. Failures report their step and, where one
    exists, a bounded colouring certificate for the sub-hypergraph at hand.
    """
    b, k, c = params.b, params.k, params.c
    initial_chi, initial_witness = chi_strong(h, c)
    if initial_chi <= params.thresholds[0]:
        return TraceResult(
            steps=(),
            initial_chi=initial_chi,
            certificate=initial_witness,
            certificate_edge_indices=tuple(range(h.m)),
            failure=None,
            contradiction=None,
        )
    max_steps = len(params.thresholds) - 1
    if params.step_cap is not None:
        max_steps = min(max_steps, params.step_cap)

    current = h
    current_indices = tuple(range(h.m))
    seq: list[Edge] = []
    steps: list[TraceStep] = []
    for j in range(1, max_steps + 1):
        # Regions and membership are taken over the original host: earlier
        # pruned edges stay in the compatibility sequence even after they have
        # left the current sub-hypergraph.
        brom = find_bromeliad(h, current.edges, b, compatible_seq=seq, k=k)
        if brom is None:
            _, witness = chi_strong(current, c)
            return TraceResult(
                steps=tuple(steps),
                initial_chi=initial_chi,
                certificate=witness,
                certificate_edge_indices=current_indices,
                failure=("no-bromeliad", j),
                contradiction=None,
            )
        outcome = prune(current, brom, r=params.thresholds[j] + 1)
        if not outcome.is_subhypergraph:
            return TraceResult(
                steps=tuple(steps),
                initial_chi=initial_chi,
                certificate=outcome.certificate,
                certificate_edge_indices=current_indices,
                failure=("threshold-unmet", j),
                contradiction=None,
            )
        pruned_edge = brom.edges[outcome.j - 1]
        petal = brom.petals[outcome.j - 1]
        extended = seq + [pruned_edge]
        check = is_k_split_degenerate(h, extended, k)
        if not check.ok:
            raise PropertyViolation(
                f"pruned edge broke the split-degenerate sequence at step {j}: {check.reason}"
            )
        assert outcome.sub is not None and outcome.sub_indices is not None
        original_indices = tuple(current_indices[i] for i in outcome.sub_indices)
        steps.append(
            TraceStep(
                index=j,
                bromeliad=brom,
                pruned_position=outcome.j,
                pruned_edge=pruned_edge,
                petal=petal,
                sub_edge_indices=original_indices,
                chi_sub=outcome.chi_sub,
                threshold=params.thresholds[j],
            )
        )
        current = outcome.sub
        current_indices = original_indices
        seq = extended

    diagonal = None
    combo_found: Optional[tuple[int, ...]] = None
    for combo in itertools.combinations(range(len(seq)), b + 1):
        candidate = bromeliad_witness([seq[i] for i in combo])
        if not isinstance(candidate, BromeliadViolation):
            diagonal = candidate
            combo_found = combo
            break
    if diagonal is None:
        return TraceResult(
            steps=tuple(steps),
            initial_chi=initial_chi,
            certificate=None,
            certificate_edge_indices=None,
            failure=("no-diagonal-bromeliad", max_steps),
            contradiction=None,
        )
    assert combo_found is not None
    base_pos = combo_found[0]
    base_step = steps[base_pos]
    if set(diagonal.cores[2]) >= set(diagonal.cores[1]):
        raise PropertyViolation("diagonal cores are not strictly nested")
    reduced = bromeliad_witness(diagonal.edges[1:])
    if isinstance(reduced, BromeliadViolation):
        raise PropertyViolation(f"diagonal lost bromeliad structure: {reduced.clause}")
    base_core = set(base_step.bromeliad.cores[base_step.pruned_position - 1])
    overlap = set(diagonal.edges[0]) & set(diagonal.edges[1])
    if not overlap <= base_core:
        raise PropertyViolation("pruned-edge overlap escapes the recorded core")
    comparison = crown_compare(reduced, base_step.bromeliad)
    if comparison != "less":
        raise PropertyViolation(f"diagonal bromeliad is not crown-smaller: {comparison}")
    return TraceResult(
        steps=tuple(steps),
        initial_chi=initial_chi,
        certificate=None,
        certificate_edge_indices=None,
        failure=None,
        contradiction=DiagonalContradiction(
            positions=tuple(i + 1 for i in combo_found),
            diagonal=diagonal,
            reduced=reduced,
            base_step=base_step.index,
            comparison=comparison,
        ),
    )
