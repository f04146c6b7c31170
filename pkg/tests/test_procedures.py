import itertools
import random

import pytest

from cstrong.colouring import (
    Colouring,
    FailingEdge,
    chi_link,
    chi_strong,
    is_c_strong,
)
from cstrong.generators import complete_uniform, sunflower_gen
from cstrong.hypergraph import Hypergraph, PropertyViolation, is_t_intersecting, link
from cstrong.procedures import (
    TraceParams,
    best_link_extension_colouring,
    extend_split_degenerate,
    prune,
    prune_trace,
    regional_colouring,
    sunflower_petal_colouring,
)
from cstrong.structures import (
    Bromeliad,
    bromeliad_witness,
    compatible_with,
    crown_compare,
    is_k_split_degenerate,
    regions,
)
from cstrong.acceptance import _trace_contradiction_fixture


def hg(n, edges):
    return Hypergraph.from_edges(n, edges)


def random_hypergraph(rng, n, m, min_size=1):
    edges = {
        tuple(sorted(rng.sample(range(n), rng.randint(min_size, n)))) for _ in range(m)
    }
    return hg(n, sorted(edges))


def grow_sequence(rng, h, k, max_len):
    seq = []
    pool = list(h.edges)
    rng.shuffle(pool)
    for e in pool:
        if len(seq) >= max_len:
            break
        if compatible_with(h, seq, e, k):
            seq.append(e)
    return seq


class TestRegionalColouring:
    def test_single_region_split_evenly(self):
        h = hg(6, [[0, 1, 2]])
        col = regional_colouring(h, [], 3)
        assert col.colours == (0, 0, 1, 1, 2, 2)
        assert col.k == 3

    def test_small_region_rainbow(self):
        h = hg(4, [[0, 1, 2]])
        col = regional_colouring(h, [(0, 1, 2)], 4)
        # both regions are small: every vertex gets its own colour
        assert len(set(col.colours)) == 4

    def test_fresh_palettes_per_region(self):
        h = hg(6, [[0, 1, 2]])
        col = regional_colouring(h, [(0, 1, 2)], 2)
        inside = {col.colours[v] for v in (0, 1, 2)}
        outside = {col.colours[v] for v in (3, 4, 5)}
        assert not inside & outside

    def test_colour_count_bound_fuzz(self):
        rng = random.Random(19)
        for _ in range(100):
            n = rng.randint(2, 8)
            h = random_hypergraph(rng, n, rng.randint(1, 5))
            c = rng.randint(1, 4)
            seq = [h.edges[rng.randrange(h.m)] for _ in range(rng.randint(0, 3))]
            col = regional_colouring(h, seq, c)
            assert col.k <= c * 2 ** len(seq)
            part = regions(h, seq)
            for block in part.blocks.values():
                seen = {col.colours[v] for v in block}
                assert len(seen) == min(c, len(block))


class TestExtendSplitDegenerate:
    def test_certificate_branch(self):
        # an edgeless-but-for-one-triangle host is easily strong
        h = hg(6, [[0, 2, 4]])
        outcome = extend_split_degenerate(h, [], 1, 2)
        assert not outcome.is_extension
        assert not isinstance(is_c_strong(h, outcome.certificate, 3), FailingEdge)

    def test_extension_branch(self):
        # a pair inside one colour class of the single large region fails and
        # must extend the empty sequence
        h = hg(5, [[0, 1], [1, 2], [2, 3]])
        outcome = extend_split_degenerate(h, [], 1, 1)
        assert outcome.is_extension
        assert outcome.edge == (0, 1)
        assert is_k_split_degenerate(h, outcome.extended_seq, 1).ok

    def test_requires_valid_sequence(self):
        h = hg(4, [[0, 1]])
        with pytest.raises(ValueError):
            extend_split_degenerate(h, [(0, 1), (0, 1)], 1, 1)

    def test_supplied_colourings_are_validated(self):
        h = hg(4, [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]])
        seq = [(0, 1)]
        assert is_k_split_degenerate(h, seq, 1).ok
        part = regions(h, seq)
        smalls = [v for _, b in part.sorted_items() if len(b) < 2 for v in b]
        bad = {v: Colouring((0,) * 4, 1) for v in smalls}
        if smalls:
            with pytest.raises(ValueError):
                extend_split_degenerate(h, seq, 1, 1, link_colourings=bad)

    def test_supplied_valid_colourings_accepted(self):
        h = hg(5, [[0, 1], [1, 2], [2, 3]])
        seq = []
        outcome = extend_split_degenerate(h, seq, 1, 1, link_colourings={})
        assert outcome.is_extension or outcome.certificate is not None

    def test_dichotomy_fuzz(self):
        rng = random.Random(29)
        extensions = certificates = 0
        for _ in range(120):
            t = rng.randint(0, 2)
            l = rng.randint(1, 2)
            if t + l < 2:
                continue
            n = rng.randint(3, 7)
            h = random_hypergraph(rng, n, rng.randint(1, 5))
            seq = grow_sequence(rng, h, t + l - 1, rng.randint(0, 2))
            outcome = extend_split_degenerate(h, seq, t, l)
            if outcome.is_extension:
                extensions += 1
                assert is_k_split_degenerate(h, outcome.extended_seq, t + l - 1).ok
            else:
                certificates += 1
                assert not isinstance(
                    is_c_strong(h, outcome.certificate, t + l), FailingEdge
                )
                bound = (t + l) * 2 ** len(seq) * outcome.link_colour_bound ** (
                    (t + l - 1) * 2 ** len(seq)
                )
                assert outcome.product_colours <= bound
        assert extensions and certificates


class TestPrune:
    def outer_only_fixture(self):
        brom = bromeliad_witness([(0, 1), (1, 2)])
        assert isinstance(brom, Bromeliad)
        return hg(3, [[0, 1]]), brom

    def test_trivial_certificate(self):
        h, brom = self.outer_only_fixture()
        outcome = prune(h, brom, 2)
        assert not outcome.is_subhypergraph
        assert not isinstance(is_c_strong(h, outcome.certificate, 1), FailingEdge)
        assert len(set(outcome.certificate.colours)) <= 2

    def test_subhypergraph_branch(self):
        # K5 survives the removal of the first petal, so chi stays at 5
        edges = [(0, 1, 2), (0, 1, 5), (0, 6)]
        edges += [tuple(sorted(p)) for p in itertools.combinations(range(5), 2)]
        h = hg(7, sorted(set(edges)))
        brom = bromeliad_witness([(0, 1, 2), (0, 1, 5), (0, 6)])
        outcome = prune(h, brom, 2)
        assert outcome.is_subhypergraph
        assert outcome.j == 2
        assert outcome.chi_sub >= 2
        petal = set(brom.petals[outcome.j - 1])
        assert all(not (set(e) & petal) for e in outcome.sub.edges)

    def test_requires_two_edges(self):
        brom = bromeliad_witness([(0, 1)])
        with pytest.raises(ValueError):
            prune(hg(2, [[0, 1]]), brom, 2)

    def test_threshold_law_fuzz(self):
        rng = random.Random(37)
        for _ in range(60):
            n = 8
            e1, e2, e3 = (0, 1, 2), (0, 1, 3), (0, 4)
            brom = bromeliad_witness([e1, e2, e3])
            edges = {e1, e2, e3}
            for _ in range(rng.randint(0, 5)):
                edges.add(tuple(sorted(rng.sample(range(n), rng.randint(2, 4)))))
            h = hg(n, sorted(edges))
            b, r = 3, rng.randint(2, 3)
            value, _ = chi_strong(h, b - 1)
            outcome = prune(h, brom, r)
            if value >= b * (r - 1) ** (b - 1) + 1:
                assert outcome.is_subhypergraph
            if not outcome.is_subhypergraph:
                assert len(set(outcome.certificate.colours)) <= b * (r - 1) ** (b - 1)


class TestBestLinkExtension:
    def apex_host(self, graph_edges, m):
        return hg(m + 1, [tuple(sorted((0,) + tuple(e))) for e in graph_edges])

    def test_guard_failure_returns_none(self):
        h = self.apex_host([(1, 2), (2, 3)], 3)
        assert best_link_extension_colouring(h, 3) is None

    def test_apex_clique_equality(self):
        h = self.apex_host(itertools.combinations(range(1, 7), 2), 6)
        result = best_link_extension_colouring(h, 3)
        assert result is not None
        assert result.s == (0,)
        assert result.link_chi == 6
        assert result.colouring.k == 7
        assert chi_strong(h, 3)[0] == 7

    def test_requires_intersecting_host(self):
        h = hg(4, [[0, 1], [2, 3]])
        with pytest.raises(ValueError):
            best_link_extension_colouring(h, 3)

    def test_lower_bound_direction(self):
        rng = random.Random(41)
        for _ in range(20):
            m = rng.randint(4, 6)
            graph = {
                tuple(sorted(rng.sample(range(1, m + 1), 2)))
                for _ in range(rng.randint(3, 9))
            }
            h = self.apex_host(sorted(graph), m)
            value, s = chi_link(h, 1, 2)
            if value < 2:
                continue
            keep = [i for i, e in enumerate(h.edges) if set(s) <= set(e)]
            assert chi_strong(h.subhypergraph(keep), 3)[0] >= value + 1

    def test_c2_uses_empty_set(self):
        h = hg(4, [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2], [1, 3]])
        result = best_link_extension_colouring(h, 2)
        assert result is not None
        assert result.s == ()
        assert result.colouring.k == result.link_chi == chi_strong(h, 2)[0]


class TestSunflowerPetalColouring:
    def test_no_sunflower_not_applicable(self):
        h = hg(4, [[0, 1, 2], [0, 1, 3]])
        assert sunflower_petal_colouring(h, 1, 2) is None

    def test_requires_intersecting(self):
        h = hg(4, [[0, 1], [2, 3]])
        with pytest.raises(ValueError):
            sunflower_petal_colouring(h, 1, 2)

    @pytest.mark.parametrize("t,l", [(1, 2), (2, 2)])
    def test_seeded_hosts_certified_within_bound(self, t, l):
        import math

        host = sunflower_gen(t + l, t + l - 2, 1)
        result = sunflower_petal_colouring(host, t, l)
        assert result is not None
        assert not isinstance(is_c_strong(host, result.colouring, t + l), FailingEdge)
        value, _ = chi_link(host, t, l)
        bound = (t + l) * value ** math.comb(t + l - 2, t) + len(result.sunflower.kernel)
        assert len(set(result.colouring.colours)) <= bound

    def test_l1_regime_never_applicable(self):
        # a t-intersecting host cannot carry a sunflower with kernel below t
        for t in (1, 2):
            host = hg(6, [tuple(sorted(set(range(t)) | {v})) for v in range(t, 6)])
            assert is_t_intersecting(host, t)
            assert sunflower_petal_colouring(host, t, 1) is None


class TestTrace:
    def test_params_validation(self):
        with pytest.raises(ValueError):
            TraceParams(t=1, l=1, p=1, thresholds=(3, 2))
        with pytest.raises(ValueError):
            TraceParams(t=1, l=1, p=2, thresholds=(2, 2))
        with pytest.raises(ValueError):
            TraceParams(t=0, l=1, p=2, thresholds=(2, 1))
        params = TraceParams(t=1, l=2, p=2, thresholds=(5, 4))
        assert (params.b, params.k, params.c) == (4, 2, 3)

    def test_immediate_certificate(self):
        h = hg(4, [[0, 1], [1, 2]])
        res = prune_trace(h, TraceParams(t=1, l=1, p=2, thresholds=(5, 4)))
        assert res.steps == ()
        assert res.failure is None
        assert res.initial_chi <= 5
        assert not isinstance(is_c_strong(h, res.certificate, 2), FailingEdge)

    def test_no_bromeliad_failure_carries_certificate(self):
        h = hg(4, [[0, 1], [1, 2], [2, 3]])
        res = prune_trace(h, TraceParams(t=1, l=1, p=2, thresholds=(1, 0)))
        assert res.failure == ("no-bromeliad", 1)
        assert res.certificate is not None

    def test_step_cap(self):
        h = _trace_contradiction_fixture()
        params = TraceParams(t=1, l=2, p=2, thresholds=(2, 1, 0, -1, -2, -3), step_cap=2)
        res = prune_trace(h, params)
        assert len(res.steps) == 2
        assert res.failure == ("no-diagonal-bromeliad", 2)

    def test_contradiction_fixture(self):
        h = _trace_contradiction_fixture()
        params = TraceParams(t=1, l=2, p=2, thresholds=(2, 1, 0, -1, -2, -3))
        res = prune_trace(h, params)
        assert res.failure is None
        assert len(res.steps) == 5
        c = res.contradiction
        assert c is not None
        assert c.positions == (1, 2, 3, 4, 5)
        assert c.comparison == "less"
        # every recorded invariant holds
        previous = set(range(h.m))
        seq = []
        for step in res.steps:
            assert step.pruned_position >= 2
            assert step.pruned_edge in step.bromeliad.edges
            assert step.chi_sub > step.threshold
            current = set(step.sub_edge_indices)
            assert current <= previous
            petal = set(step.petal)
            assert all(not (set(h.edges[i]) & petal) for i in current)
            previous = current
            seq.append(step.pruned_edge)
        assert is_k_split_degenerate(h, seq, params.k).ok
        base = res.steps[c.base_step - 1]
        assert crown_compare(c.reduced, base.bromeliad) == "less"
        assert set(c.diagonal.cores[2]) < set(c.diagonal.cores[1])
        core = set(base.bromeliad.cores[base.pruned_position - 1])
        assert set(c.diagonal.edges[0]) & set(c.diagonal.edges[1]) <= core
