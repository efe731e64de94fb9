"""Nice triples, compounding, planning, and the code generator."""

import random
from itertools import product

import pytest

from neighborly.algebra import block, pairing
from neighborly.sequences import b, distribution_bounds
from neighborly.strings import CodeList, dist, is_k_neighborly
from neighborly.triples import (
    SEED_ORDER,
    DecompositionPlan,
    Seed,
    Triple,
    build_triple,
    compound,
    enumerate_plans,
    generate_code,
    is_concordant,
    is_nice,
    plan_decomposition,
    plan_from_multiset,
    power,
    seed,
    seed_stats,
    triple_stats,
    zaks_code,
)

of = CodeList.of

SEED_PARAMS = {
    Seed.FLAT: (2, 2, 4, 3, 9),
    Seed.DAGGER: (2, 3, 5, 4, 12),
    Seed.DOUBLE_DAGGER: (2, 4, 6, 5, 16),
    Seed.SHARP: (2, 5, 7, 6, 21),
}


def extremal_blocks():
    """The four extremal codes assembled cell by cell in block form,
    independently of the seed construction."""
    h, g = of("00", "01", "1*"), of("0", "1")
    el = of("000", "001", "01*", "1**")
    f4 = block([[h, h]])
    f5 = block([[h, el]])
    f6 = block(
        [
            [of("0"), g, of("0"), g, of("**")],
            [of("0"), g, of("1"), of("*"), h],
            [of("1"), of("*"), of("*"), g, h],
        ]
    )
    f7 = block(
        [
            [of("0"), g, of("0"), h, of("**")],
            [of("0"), g, of("1"), of("**"), h],
            [of("1"), of("*"), of("*"), h, h],
        ]
    )
    return {Seed.FLAT: f4, Seed.DAGGER: f5, Seed.DOUBLE_DAGGER: f6, Seed.SHARP: f7}


class TestSeeds:
    def test_all_nice_with_expected_parameters(self):
        for which, params in SEED_PARAMS.items():
            t = seed(which)
            assert is_nice(t), which
            assert t.params() == params, which

    def test_paired_codes_match_the_block_forms(self):
        blocks = extremal_blocks()
        for which in SEED_ORDER:
            paired = seed(which).paired()
            assert paired.texts() == blocks[which].texts(), which

    def test_paired_sizes_are_extremal(self):
        sizes = {Seed.FLAT: 9, Seed.DAGGER: 12, Seed.DOUBLE_DAGGER: 16, Seed.SHARP: 21}
        for which, n in sizes.items():
            code = seed(which).paired()
            assert len(code) == n
            assert is_k_neighborly(code, 2)

    def test_all_ordered_pairs_concordant(self):
        for x, y in product(SEED_ORDER, repeat=2):
            assert is_concordant(seed(x), seed(y)), (x, y)

    def test_alpha_mismatch_not_concordant(self):
        grown = power(seed(Seed.FLAT), 1)  # alpha 3
        assert not is_concordant(seed(Seed.FLAT), grown)


class TestIsNice:
    def test_far_a_pair_fails_condition_1(self):
        t = Triple(a=of("00", "11"), b=of("00", "01"), c=of("00"))
        verdict = is_nice(t)
        assert not verdict and verdict.condition == 1

    def test_bad_c_fails_condition_3(self):
        flat = seed(Seed.FLAT)
        t = Triple(a=flat.a, b=flat.b, c=of("00", "11"))
        verdict = is_nice(t)
        assert not verdict and verdict.condition == 3

    def test_c_exceeding_b_multiplicity_fails_condition_3(self):
        flat = seed(Seed.FLAT)
        c = CodeList(flat.b.strings + (flat.b.strings[0],) * 3)
        verdict = is_nice(Triple(a=flat.a, b=flat.b, c=c))
        assert not verdict and verdict.condition == 3

    def test_non_neighborly_pairing_fails_condition_2(self):
        t = Triple(a=of("00", "00"), b=of("00", "00"), c=CodeList.empty(2))
        verdict = is_nice(t)
        assert not verdict and verdict.condition == 2


class TestCompound:
    def test_parameters_match_recurrences_for_all_16_pairs(self):
        for x, y in product(SEED_ORDER, repeat=2):
            t, u = seed(x), seed(y)
            out = compound(t, u)
            assert out.alpha == t.alpha + 1
            assert out.beta == t.beta + u.beta + 1
            assert out.delta == t.delta + u.delta - t.alpha + 2
            assert out.g == t.g + u.g
            assert out.n == t.n + u.n + t.g * u.g
            assert is_nice(out)

    def test_flat_flat_parameters(self):
        assert compound(seed(Seed.FLAT), seed(Seed.FLAT)).params() == (3, 5, 8, 6, 27)

    def test_flat_dagger_reaches_b9(self):
        out = compound(seed(Seed.FLAT), seed(Seed.DAGGER))
        assert out.params() == (3, 6, 9, 7, 33)
        assert out.n == b(9)

    def test_sharp_sharp_reaches_b14(self):
        assert compound(seed(Seed.SHARP), seed(Seed.SHARP)).n == 78 == b(14)

    def test_pairing_identity_for_all_16_pairs(self):
        # the paired compound equals the sum of the three row pairings
        star = of("*")
        zero, one = of("0"), of("1")
        for x, y in product(SEED_ORDER, repeat=2):
            t, u = seed(x), seed(y)
            jt = of("*" * t.beta)
            ju = of("*" * u.beta)
            ja = of("*" * t.alpha)
            out = compound(t, u)
            rows = (
                pairing(block([[zero, t.a]]), block([[zero, t.b, ju]]))
                + pairing(block([[zero, u.a]]), block([[one, jt, u.b]]))
                + pairing(
                    block([[(t.g * u.g) * block([[one, ja]])]]),
                    block([[star, t.c, u.c]]),
                )
            )
            assert out.paired().texts() == rows.texts(), (x, y)

    def test_both_orders_congruent(self):
        for x, y in product(SEED_ORDER, repeat=2):
            st_, ts = compound(seed(x), seed(y)), compound(seed(y), seed(x))
            assert (st_.alpha, st_.beta, st_.n, st_.g) == (ts.alpha, ts.beta, ts.n, ts.g)
            assert is_concordant(st_, ts)

    def test_non_concordant_pair_is_an_error(self):
        with pytest.raises(ValueError):
            compound(seed(Seed.FLAT), power(seed(Seed.FLAT), 1))


class TestPower:
    def test_k0_is_identity(self):
        t = seed(Seed.DAGGER)
        assert power(t, 0) is t

    @pytest.mark.parametrize("k", range(5))
    def test_flat_closed_forms(self, k):
        t = power(seed(Seed.FLAT), k)
        assert t.alpha == k + 2
        assert t.beta == 3 * 2**k - 1
        assert t.delta == 3 * 2**k + k + 1
        assert t.g == 3 * 2**k
        assert t.n == 9 * (4**k + 2**k) // 2

    @pytest.mark.parametrize("k", range(5))
    def test_sharp_closed_forms(self, k):
        t = power(seed(Seed.SHARP), k)
        assert t.delta == 6 * 2**k + k + 1
        assert t.g == 6 * 2**k
        assert t.n == 18 * 4**k + 3 * 2**k

    def test_frozen_values(self):
        assert power(seed(Seed.FLAT), 3).n == 324
        assert power(seed(Seed.SHARP), 2).n == 300


class TestPlanning:
    def test_width_7_single_sharp(self):
        plan = plan_decomposition(7)
        assert plan.k == 0
        assert plan.leaves == (Seed.SHARP,)
        assert plan.case_tag == "single-seed-k0"

    def test_width_9_flat_dagger(self):
        plan = plan_decomposition(9)
        assert plan.k == 1
        assert plan.case_tag == "a"
        assert plan.leaves == (Seed.FLAT, Seed.DAGGER)

    def test_width_12_double_daggers(self):
        plan = plan_decomposition(12)
        assert plan.case_tag == "a''"
        assert plan.leaves == (Seed.DOUBLE_DAGGER, Seed.DOUBLE_DAGGER)
        assert build_triple(plan).n == 57 == b(12)

    def test_below_4_is_an_error(self):
        with pytest.raises(ValueError):
            plan_decomposition(3)

    def test_lower_seed_copies_first(self):
        plan = plan_decomposition(10)
        names = [s for s in plan.leaves]
        assert names == sorted(names, key=lambda s: list(Seed).index(s))

    def test_plan_widths_consistent_to_130(self):
        for d in range(4, 131):
            plan = plan_decomposition(d)
            assert plan.predicted_delta() == d
            assert len(plan.leaves) == 2**plan.k

    def test_inconsistent_plan_rejected(self):
        with pytest.raises(ValueError):
            DecompositionPlan(d=9, k=1, leaves=(Seed.FLAT, Seed.FLAT), case_tag="a")

    def test_every_width_hit_by_some_general_plan(self):
        for d in range(4, 60):
            solutions = enumerate_plans(d)
            assert solutions, d
            canonical = plan_decomposition(d)
            counts = (
                canonical.leaves.count(Seed.FLAT),
                canonical.leaves.count(Seed.DAGGER),
                canonical.leaves.count(Seed.DOUBLE_DAGGER),
                canonical.leaves.count(Seed.SHARP),
            )
            assert counts in solutions

    def test_general_plans_are_congruent(self):
        # all decompositions of one width agree on (alpha, beta, n, g)
        for d in (9, 13, 17):
            built = [
                build_triple(plan_from_multiset(d, *counts))
                for counts in enumerate_plans(d)
            ]
            reference = built[0]
            for t in built[1:]:
                assert (t.alpha, t.beta, t.n, t.g) == (
                    reference.alpha,
                    reference.beta,
                    reference.n,
                    reference.g,
                )


class TestBuild:
    @pytest.mark.parametrize("d,expected", [(4, 9), (9, 33), (20, 160)])
    def test_sizes(self, d, expected):
        assert build_triple(plan_decomposition(d)).n == expected

    def test_structure_identities_to_64(self):
        flats = {k: power(seed(Seed.FLAT), k) for k in range(5)}
        for d in range(4, 65):
            plan = plan_decomposition(d)
            t = build_triple(plan)
            k = plan.k
            assert t.delta == d
            assert t.n == b(d)
            assert t.g == d - k - 1
            assert t.g == t.beta + 1
            flat = flats[k]
            offset = d - flat.delta
            assert t.n == flat.n + flat.g * offset + offset * (offset - 1) // 2

    def test_random_leaf_multisets_stay_in_level_range(self):
        rng = random.Random(7)
        for k in range(4):
            lo = 3 * 2**k + k + 1
            hi = 6 * 2**k + k + 1
            for _ in range(3):
                leaves = tuple(rng.choice(SEED_ORDER) for _ in range(2**k))
                level = [seed(s) for s in leaves]
                while len(level) > 1:
                    level = [
                        compound(level[i], level[i + 1]) for i in range(0, len(level), 2)
                    ]
                assert lo <= level[0].delta <= hi


class TestGenerateCode:
    def test_width_2(self):
        assert generate_code(2).texts() == ["00", "01", "10", "11"]

    def test_width_3_matches_figure_line_replay(self):
        # replay the worked splitting line and compare multisets
        from neighborly.game import Move, replay

        line = [Move(0, 1), Move(0, 2), Move(1, 3), Move(1, 3), Move(0, 2)]
        final = replay(2, 3, line)
        assert sorted(final.code.texts()) == sorted(generate_code(3).texts())
        assert len(generate_code(3)) == 6 == b(3)

    def test_width_7_is_the_block_form_code(self):
        blocks = extremal_blocks()
        assert sorted(generate_code(7).texts()) == sorted(blocks[Seed.SHARP].texts())

    def test_below_2_is_an_error(self):
        with pytest.raises(ValueError):
            generate_code(1)

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 9, 16, 33, 64])
    def test_two_neighborly_of_size_b(self, d):
        code = generate_code(d)
        assert code.width == d
        assert len(code) == b(d)
        assert is_k_neighborly(code, 2)


class TestZaksCode:
    def test_width_3_layout(self):
        assert zaks_code(3).texts() == ["1**", "01*", "001", "000"]

    def test_width_1(self):
        assert zaks_code(1).texts() == ["1", "0"]

    @pytest.mark.parametrize("d", range(1, 11))
    def test_size_and_pairwise_distance_exactly_one(self, d):
        code = zaks_code(d)
        assert len(code) == d + 1
        for i in range(len(code)):
            for j in range(i + 1, len(code)):
                assert dist(code[i], code[j]) == 1


class TestStats:
    def test_seed_statistics(self):
        assert seed_stats() == (2, 5, 1, 3)

    def test_flat_powers_within_distribution_bounds(self):
        mu0, m0, k0, kk0 = seed_stats()
        for k in range(4):
            lo, hi = distribution_bounds(mu0, m0, k0, kk0, k)
            mu, big_m, _, _ = triple_stats(power(seed(Seed.FLAT), k))
            assert lo <= mu <= big_m <= hi

    def test_all_joker_degenerate_list(self):
        t = Triple(a=of("*"), b=of("*"), c=CodeList.empty(1))
        mu, big_m, kappa, big_k = triple_stats(t)
        assert (mu, big_m) == (0, 0)
        assert (kappa, big_k) == (0, 0)
