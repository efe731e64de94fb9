"""Ternary strings: distance, neighborliness verdicts, box view."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neighborly.strings import (
    CodeList,
    NormalizedBox,
    TernaryString,
    boxes_to_code,
    dist,
    is_k_neighborly,
    pairwise_distances,
    to_boxes,
)

T = TernaryString.parse


def texts(*items):
    return CodeList.of(*items)


ternary_texts = st.text(alphabet="01*", min_size=1, max_size=12)


def paired_texts(max_size=12):
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda d: st.tuples(
            st.text(alphabet="01*", min_size=d, max_size=d),
            st.text(alphabet="01*", min_size=d, max_size=d),
        )
    )


class TestParse:
    def test_round_trip(self):
        assert T("01*10").text == "01*10"

    def test_symbols_accessible(self):
        s = T("0*1")
        assert (s[0], s[1], s[2]) == ("0", "*", "1")
        assert list(s) == ["0", "*", "1"]

    def test_rejects_other_characters(self):
        with pytest.raises(ValueError):
            T("01x")
        with pytest.raises(ValueError):
            T("0 1")

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            T("")

    def test_equality_and_hash(self):
        assert T("0*1") == T("0*1")
        assert T("0*1") != T("0*0")
        assert len({T("0*1"), T("0*1")}) == 1


class TestDist:
    def test_jokers_never_count(self):
        assert dist(T("0*1*"), T("*1*0")) == 0

    def test_identical_strings(self):
        for t in ("0", "***", "0101", "1*0"):
            assert dist(T(t), T(t)) == 0

    def test_forced_small_cases(self):
        assert dist(T("00"), T("01")) == 1
        assert dist(T("11*"), T("000")) == 2

    def test_length_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            dist(T("00"), T("000"))

    @given(paired_texts())
    def test_symmetric_and_bounded(self, pair):
        u, v = T(pair[0]), T(pair[1])
        d = dist(u, v)
        assert d == dist(v, u)
        assert 0 <= d <= u.width

    @given(paired_texts(), st.data())
    def test_joker_replacement_never_increases(self, pair, data):
        u, v = T(pair[0]), T(pair[1])
        i = data.draw(st.integers(min_value=1, max_value=u.width))
        weakened = u.with_symbol(i, "*")
        assert dist(weakened, v) <= dist(u, v)


class TestIsKNeighborly:
    def test_canonical_1_neighborly_list(self):
        assert is_k_neighborly(texts("00", "01", "1*"), 1)

    def test_single_string_vacuous(self):
        assert is_k_neighborly(texts("***"), 1)

    def test_fail_reports_first_pair(self):
        verdict = is_k_neighborly(texts("00", "11"), 1)
        assert not verdict
        assert verdict.pair == (0, 1)
        assert verdict.distance == 2

    def test_zero_distance_fails(self):
        verdict = is_k_neighborly(texts("0*", "00"), 1)
        assert not verdict
        assert verdict.distance == 0

    def test_empty_code_is_an_error(self):
        with pytest.raises(ValueError):
            is_k_neighborly(CodeList.empty(3), 1)

    def test_monotone_in_k(self):
        code = texts("000", "001", "010", "011", "10*", "11*")
        assert is_k_neighborly(code, 2)
        assert is_k_neighborly(code, 3)

    def test_first_violation_is_row_major(self):
        # pairs (0,2) and (1,2) both violate; (0,2) must be reported
        verdict = is_k_neighborly(texts("00", "01", "0*"), 1)
        assert verdict.pair == (0, 2)

    def test_wide_codes_use_multiple_words(self):
        base = "01" * 40  # width 80 > one 64-bit word
        code = texts(base, base[:-1] + "0")
        verdict = is_k_neighborly(code, 1)
        assert verdict
        far = texts(base, "10" + base[2:])
        assert not is_k_neighborly(far, 1)

    def test_pairwise_distances_matrix(self):
        code = texts("00", "01", "1*")
        m = pairwise_distances(code)
        assert m.tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


class TestBoxes:
    def test_all_joker_box(self):
        (box,) = to_boxes(texts("**"))
        assert box.factors == ((0.0, 1.0), (0.0, 1.0))

    def test_forced_identification(self):
        (box,) = to_boxes(texts("01"))
        assert box.factors == ((0.0, 0.5), (0.5, 1.0))

    def test_round_trip(self):
        code = texts("01*", "1*0", "***")
        assert boxes_to_code(to_boxes(code)).texts() == code.texts()

    def test_rejects_non_normalized_factors(self):
        with pytest.raises(ValueError):
            NormalizedBox(((0.0, 0.7),))

    def test_intersection_dimension_matches_dist_exhaustively(self):
        # Independent oracle over all of S^3: interval arithmetic on boxes
        # must see exactly dist(u, v) degenerate dimensions.
        all_strings = ["".join(p) for p in product("01*", repeat=3)]
        for ut in all_strings:
            for vt in all_strings:
                u, v = T(ut), T(vt)
                (bu,) = to_boxes(CodeList((u,)))
                (bv,) = to_boxes(CodeList((v,)))
                overlap = bu.intersection_dimension(bv)
                assert 3 - overlap == dist(u, v), (ut, vt)
