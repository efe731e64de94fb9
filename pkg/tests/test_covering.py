"""Code <-> bipartite covering correspondence."""

import pytest

from neighborly.covering import (
    BipartiteCovering,
    code_to_covering,
    covering_to_code,
    verify_covering,
)
from neighborly.strings import CodeList, dist, pairwise_distances
from neighborly.triples import generate_code, zaks_code

of = CodeList.of


def edge_multiplicities(cov):
    counts = {}
    for x, y in cov.cliques:
        for i in x:
            for j in y:
                e = (min(i, j), max(i, j))
                counts[e] = counts.get(e, 0) + 1
    return counts


class TestStructure:
    def test_rejects_empty_side(self):
        with pytest.raises(ValueError):
            BipartiteCovering(3, ((frozenset({1}), frozenset()),))

    def test_rejects_overlapping_sides(self):
        with pytest.raises(ValueError):
            BipartiteCovering(3, ((frozenset({1, 2}), frozenset({2, 3})),))

    def test_rejects_foreign_vertices(self):
        with pytest.raises(ValueError):
            BipartiteCovering(2, ((frozenset({1}), frozenset({5})),))


class TestCodeToCovering:
    def test_zaks_3_partitions_k4(self):
        cov = code_to_covering(zaks_code(3))
        assert cov.n_vertices == 4
        assert len(cov.cliques) == 3  # Graham-Pollak count: 4 - 1
        counts = edge_multiplicities(cov)
        assert len(counts) == 6 and set(counts.values()) == {1}
        sizes = sorted(len(x) * len(y) for x, y in cov.cliques)
        assert sizes == [1, 2, 3]

    def test_generated_width_7_covers_k21_with_at_most_7_cliques(self):
        cov = code_to_covering(generate_code(7))
        assert cov.n_vertices == 21
        assert len(cov.cliques) <= 7
        assert verify_covering(cov, 2)

    def test_single_string_code(self):
        cov = code_to_covering(of("01*"))
        assert cov.n_vertices == 1 and cov.cliques == ()

    def test_distance_zero_pair_is_an_error(self):
        with pytest.raises(ValueError):
            code_to_covering(of("0*", "00"))

    def test_check_flag_can_be_disabled(self):
        cov = code_to_covering(of("0*", "00"), check=False)
        assert not verify_covering(cov, 1)

    def test_multiplicity_equals_distance(self):
        code = generate_code(6)
        cov = code_to_covering(code)
        counts = edge_multiplicities(cov)
        d = pairwise_distances(code)
        for i in range(len(code)):
            for j in range(i + 1, len(code)):
                assert counts.get((i + 1, j + 1), 0) == d[i, j]


class TestVerify:
    def test_zaks_codes_give_exact_partitions(self):
        for d in range(1, 9):
            cov = code_to_covering(zaks_code(d))
            assert len(cov.cliques) == d
            assert verify_covering(cov, 1)

    def test_uncovered_edge_reported(self):
        cov = BipartiteCovering(3, ((frozenset({1}), frozenset({2})),))
        verdict = verify_covering(cov, 1)
        assert not verdict
        assert verdict.edge == (1, 3) and verdict.count == 0

    def test_overcovered_edge_reported(self):
        clique = (frozenset({1}), frozenset({2}))
        cov = BipartiteCovering(2, (clique, clique))
        verdict = verify_covering(cov, 1)
        assert not verdict and verdict.count == 2
        assert verify_covering(cov, 2)

    @pytest.mark.parametrize("d", [4, 8, 12, 16, 20])
    def test_generated_codes_give_2_coverings(self, d):
        cov = code_to_covering(generate_code(d))
        assert cov.n_vertices == len(generate_code(d))
        assert verify_covering(cov, 2)


class TestCoveringToCode:
    def test_round_trip_on_zaks_4(self):
        code = zaks_code(4)
        back = covering_to_code(code_to_covering(code))
        assert sorted(back.texts()) == sorted(code.texts())

    def test_zero_cliques_rejected(self):
        with pytest.raises(ValueError):
            covering_to_code(BipartiteCovering(1, ()))
        with pytest.raises(ValueError):
            covering_to_code(BipartiteCovering(2, ()))

    def test_star_decomposition_of_k5(self):
        # stars {i} x {i+1..5} form the classic partition of K_5
        stars = tuple(
            (frozenset({i}), frozenset(range(i + 1, 6))) for i in range(1, 5)
        )
        cov = BipartiteCovering(5, stars)
        code = covering_to_code(cov)
        assert len(code) == 5 and code.width == 4
        for i in range(5):
            for j in range(i + 1, 5):
                assert dist(code[i], code[j]) == 1

    def test_round_trip_preserves_distances(self):
        for code in (zaks_code(4), generate_code(5)):
            back = covering_to_code(code_to_covering(code))
            d_before = pairwise_distances(code)
            d_after = pairwise_distances(back)
            assert (d_before == d_after).all()
