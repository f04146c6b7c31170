import itertools
import random

import pytest

from cstrong.hypergraph import Hypergraph, PropertyViolation
from cstrong.structures import (
    Bromeliad,
    BromeliadViolation,
    SplitDegenerateSeq,
    bromeliad_witness,
    compatible_with,
    crown_compare,
    find_bromeliad,
    is_k_split_degenerate,
    red_clique_to_bromeliad,
    regions,
    subsequence_check,
    triple_classify,
)


def hg(n, edges):
    return Hypergraph.from_edges(n, edges)


def grow_split_sequence(rng, h, k, max_len):
    seq = []
    candidates = list(h.edges)
    rng.shuffle(candidates)
    for e in candidates:
        if len(seq) >= max_len:
            break
        if compatible_with(h, seq, e, k):
            seq.append(e)
    return seq


class TestRegions:
    def test_two_edges(self):
        h = hg(5, [[0, 1, 2], [1, 2, 3]])
        part = regions(h, [(0, 1, 2), (1, 2, 3)])
        assert part.blocks == {
            (1,): (0,),
            (1, 2): (1, 2),
            (2,): (3,),
            (): (4,),
        }

    def test_empty_sequence(self):
        part = regions(hg(3, [[0, 1]]), [])
        assert part.blocks == {(): (0, 1, 2)}

    def test_full_edge(self):
        part = regions(hg(2, [[0, 1]]), [(0, 1)])
        assert part.blocks == {(1,): (0, 1)}

    def test_unknown_edge_rejected(self):
        with pytest.raises(ValueError):
            regions(hg(3, [[0, 1]]), [(1, 2)])

    def test_partition_fuzz(self):
        rng = random.Random(2)
        for _ in range(120):
            n = rng.randint(2, 8)
            edges = {
                tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
                for _ in range(rng.randint(1, 5))
            }
            h = hg(n, sorted(edges))
            seq = [h.edges[rng.randrange(h.m)] for _ in range(rng.randint(0, 3))]
            part = regions(h, seq)
            everything = sorted(v for block in part.blocks.values() for v in block)
            assert everything == list(range(n))
            assert all(part.blocks.values())

    def test_json_form_sorted_by_signature(self):
        h = hg(5, [[0, 1, 2], [1, 2, 3]])
        data = regions(h, [(0, 1, 2), (1, 2, 3)]).to_dict()
        assert [entry["signature"] for entry in data["blocks"]] == [[], [1], [1, 2], [2]]


class TestSplitDegenerate:
    def test_ok_sequence(self):
        h = hg(6, [[0, 1, 2], [1, 2, 3]])
        assert is_k_split_degenerate(h, [(0, 1, 2), (1, 2, 3)], 2).ok

    def test_repeated_edge_contains_region(self):
        h = hg(4, [[0, 1]])
        res = is_k_split_degenerate(h, [(0, 1), (0, 1)], 3)
        assert (res.ok, res.failing_index, res.reason) == (False, 2, "contains-region")

    def test_contains_region_beats_nothing_else(self):
        h = hg(4, [[0, 1], [2, 3]])
        res = is_k_split_degenerate(h, [(0, 1), (2, 3)], 1)
        assert (res.failing_index, res.reason) == (2, "contains-region")

    def test_too_many_regions(self):
        h = hg(5, [[0, 1], [1, 2]])
        res = is_k_split_degenerate(h, [(0, 1), (1, 2)], 1)
        assert (res.failing_index, res.reason) == (2, "too-many-regions")

    def test_seq_type_wrapper(self):
        h = hg(6, [[0, 1, 2], [1, 2, 3]])
        seq = SplitDegenerateSeq(h, ((0, 1, 2), (1, 2, 3)), 2)
        assert seq.check().ok

    def test_subsequence_closure_fuzz(self):
        rng = random.Random(7)
        for _ in range(150):
            n = rng.randint(3, 8)
            edges = {
                tuple(sorted(rng.sample(range(n), rng.randint(1, n - 1))))
                for _ in range(rng.randint(2, 6))
            }
            h = hg(n, sorted(edges))
            k = rng.randint(1, 3)
            seq = grow_split_sequence(rng, h, k, 4)
            if not seq:
                continue
            indices = [i for i in range(len(seq)) if rng.getrandbits(1)]
            subsequence_check(h, seq, k, indices)

    def test_subsequence_check_needs_valid_input(self):
        h = hg(4, [[0, 1]])
        with pytest.raises(ValueError):
            subsequence_check(h, [(0, 1), (0, 1)], 3, [0])


class TestBromeliadWitness:
    def test_three_edge_example(self):
        witness = bromeliad_witness([(1, 2, 3), (2, 3, 4), (3, 5)])
        assert isinstance(witness, Bromeliad)
        assert witness.cores == ((1, 2, 3), (2, 3), (3,))
        assert witness.petals == ((), (4,), (5,))

    def test_repeated_edge(self):
        violation = bromeliad_witness([(1, 2), (1, 2)])
        assert violation.clause == "core-chain"

    def test_disjoint_pair(self):
        violation = bromeliad_witness([(1, 2), (3, 4)])
        assert violation.clause == "empty-core"

    def test_petal_overlap(self):
        violation = bromeliad_witness([(1, 2, 3), (2, 3, 4), (3, 4)])
        assert violation.clause == "petal-overlap"

    def test_cross_pair_consistency(self):
        # e2 and e3 overlap outside the shared core chain
        violation = bromeliad_witness([(1, 2, 3), (2, 3, 4, 6), (3, 5, 6)])
        assert violation.clause in ("petal-overlap", "witness-inconsistent")

    def test_single_edge(self):
        witness = bromeliad_witness([(0, 1)])
        assert witness.cores == ((0, 1),)
        assert witness.petals == ((),)

    def test_uniqueness_by_enumeration(self):
        rng = random.Random(17)
        for _ in range(60):
            base = sorted(rng.sample(range(8), rng.randint(3, 5)))
            c2 = base[: rng.randint(2, len(base) - 1)]
            c3 = c2[: rng.randint(1, len(c2) - 1)]
            spare = [v for v in range(12) if v not in base]
            e2 = tuple(sorted(c2 + [spare[0]]))
            e3 = tuple(sorted(c3 + [spare[1]]))
            edges = [tuple(base), e2, e3]
            witness = bromeliad_witness(edges)
            assert isinstance(witness, Bromeliad)
            sets = [set(e) for e in edges]
            found = []
            for cores2 in _subsets(sets[1]):
                for cores3 in _subsets(sets[2]):
                    cores = [sets[0], set(cores2), set(cores3)]
                    petals = [sets[i] - cores[i] for i in range(3)]
                    if not (cores[2] and cores[2] < cores[1] < cores[0]):
                        continue
                    pieces = petals[1:] + [sets[0]]
                    if any(
                        a & b for a, b in itertools.combinations(pieces, 2)
                    ):
                        continue
                    found.append(tuple(tuple(sorted(c)) for c in cores))
            assert found == [witness.cores]


def _subsets(s):
    items = sorted(s)
    for bits in range(1 << len(items)):
        yield [x for i, x in enumerate(items) if bits >> i & 1]


class TestCrownCompare:
    def brom(self, edges):
        witness = bromeliad_witness(edges)
        assert isinstance(witness, Bromeliad)
        return witness

    def test_less(self):
        b1 = self.brom([(0, 1, 2), (2, 3)])
        b2 = self.brom([(0, 1, 2), (1, 2, 4)])
        assert crown_compare(b1, b2) == "less"
        assert crown_compare(b2, b1) == "greater"

    def test_equal_size(self):
        b1 = self.brom([(0, 1, 2), (2, 3)])
        b2 = self.brom([(0, 1, 2), (0, 4)])
        assert crown_compare(b1, b2) == "equal-size"

    def test_single_edge_has_no_crown(self):
        with pytest.raises(ValueError):
            crown_compare(self.brom([(0, 1)]), self.brom([(0, 1, 2), (2, 3)]))


class TestTripleClassify:
    def test_blue(self):
        assert triple_classify((1, 2), (1, 3), (2, 4)) == "blue"

    def test_red(self):
        assert triple_classify((1, 2), (1, 3), (1, 5)) == "red"

    def test_equal_first_two(self):
        assert triple_classify((1, 2), (1, 2), (3, 4)) == "red"


class TestFindBromeliad:
    def test_direct_hit(self):
        h = hg(6, [[1, 2, 3], [2, 3, 4], [3, 5]])
        brom = find_bromeliad(h, h.edges, 3)
        assert brom is not None
        assert brom.edges == ((1, 2, 3), (2, 3, 4), (3, 5))

    def test_disjoint_pool(self):
        h = hg(4, [[0, 1], [2, 3]])
        assert find_bromeliad(h, h.edges, 2) is None

    def test_crown_minimal_wins(self):
        # two 2-bromeliads: crowns of size 2 and 1; the size-1 crown wins
        h = hg(6, [[0, 1, 2], [0, 1, 3], [2, 5]])
        brom = find_bromeliad(h, h.edges, 2)
        assert brom.crown == (2,)

    def test_compatibility_filter(self):
        h = hg(6, [[0, 1, 2], [0, 1, 3], [0, 1], [2, 5]])
        # appending (0,1) to the sequence ((0,1,2),) stays inside one region
        # but (0,1,3) straddles two; with k=1 only subsets of regions survive
        brom = find_bromeliad(h, h.edges, 2, compatible_seq=[(0, 1, 2)], k=1)
        assert brom is None or all(
            compatible_with(h, [(0, 1, 2)], e, 1) for e in brom.edges
        )

    def test_pool_must_be_edges(self):
        with pytest.raises(ValueError):
            find_bromeliad(hg(3, [[0, 1]]), [(1, 2)], 1)

    def test_b1_returns_first_pool_edge(self):
        h = hg(4, [[0, 1], [2, 3]])
        assert find_bromeliad(h, h.edges, 1).edges == ((0, 1),)

    def test_fuzz_results_validate(self):
        rng = random.Random(23)
        for _ in range(120):
            n = rng.randint(3, 8)
            edges = {
                tuple(sorted(rng.sample(range(n), rng.randint(1, n - 1))))
                for _ in range(rng.randint(2, 7))
            }
            h = hg(n, sorted(edges))
            b = rng.randint(1, 3)
            brom = find_bromeliad(h, h.edges, b)
            if brom is not None:
                rebuilt = bromeliad_witness(brom.edges)
                assert isinstance(rebuilt, Bromeliad)
                assert rebuilt == brom


class TestRedClique:
    def test_single_edge_clique(self):
        h = hg(4, [[0, 1, 2]])
        brom = red_clique_to_bromeliad(h, [(0, 1, 2)], [0], 3)
        assert brom.edges == ((0, 1, 2),)

    def test_matches_direct_witness(self):
        h = hg(6, [[1, 2, 3], [2, 3, 4], [3, 5]])
        seq = [(1, 2, 3), (2, 3, 4), (3, 5)]
        assert is_k_split_degenerate(h, seq, 3).ok
        brom = red_clique_to_bromeliad(h, seq, [0, 1, 2], 3)
        assert brom == bromeliad_witness(seq)

    def test_blue_triple_rejected(self):
        h = hg(5, [[1, 2], [1, 3], [2, 4]])
        seq = [(1, 2), (1, 3), (2, 4)]
        if is_k_split_degenerate(h, seq, 3).ok:
            with pytest.raises(ValueError):
                red_clique_to_bromeliad(h, seq, [0, 1, 2], 3)

    def test_disjoint_pair_rejected(self):
        h = hg(5, [[0, 1], [2, 3]])
        with pytest.raises(ValueError):
            red_clique_to_bromeliad(h, [(0, 1), (2, 3)], [0, 1], 3)

    def test_fuzz_always_valid(self):
        rng = random.Random(31)
        produced = 0
        attempts = 0
        while produced < 80 and attempts < 4000:
            attempts += 1
            n = rng.randint(5, 8)
            k = rng.randint(2, 3)
            edges = {
                tuple(sorted({0} | set(rng.sample(range(1, n), rng.randint(1, n - 2)))))
                for _ in range(rng.randint(4, 8))
            }
            h = hg(n, sorted(edges))
            seq = grow_split_sequence(rng, h, k, 6)
            if len(seq) < 3:
                continue
            sets = [set(e) for e in seq]
            reds = [
                combo
                for combo in itertools.combinations(range(len(seq)), 3)
                if triple_classify(*[sets[i] for i in combo]) == "red"
            ]
            if not reds:
                continue
            produced += 1
            clique = list(reds[rng.randrange(len(reds))])
            brom = red_clique_to_bromeliad(h, seq, clique, k)
            assert isinstance(brom, Bromeliad)
        assert produced >= 50
