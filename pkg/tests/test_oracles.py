"""Exact combinatorics against independent brute-force oracles.

The oracles in this file are deliberately written with different
algorithms than the library (recursive LCS, pointer-walk subsequence
test, generate-and-filter ball enumeration) so agreement is meaningful.
"""

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from insdel_bounds import (
    BallSpec,
    BudgetError,
    DomainError,
    SmallCode,
    Word,
    alphabet_reduction,
    check_list_decodable,
    containment_probability,
    enumerate_ball,
    lcs,
    reachable,
    supersequence_count_exact_length,
    two_segment_reduction,
)
from insdel_bounds.oracles import (
    EXACT_FINAL_LENGTH,
    _containment_dp,
    _containment_leftmost_sum,
    corruption_radii,
    decode_list,
    iter_words,
)


def W(text: str, q: int = 2) -> Word:
    return Word.parse(text, q)


def brute_is_subsequence(a: tuple, b: tuple) -> bool:
    i = 0
    for sym in b:
        if i < len(a) and a[i] == sym:
            i += 1
    return i == len(a)


@lru_cache(maxsize=None)
def brute_lcs(a: tuple, b: tuple) -> int:
    if not a or not b:
        return 0
    if a[-1] == b[-1]:
        return brute_lcs(a[:-1], b[:-1]) + 1
    return max(brute_lcs(a[:-1], b), brute_lcs(a, b[:-1]))


def brute_deletions(word: tuple, budget: int) -> set:
    out = {word}
    frontier = {word}
    for _ in range(budget):
        frontier = {
            w[:i] + w[i + 1 :] for w in frontier for i in range(len(w))
        }
        out |= frontier
    return out


def brute_insertions(words: set, budget: int, q: int) -> set:
    out = set(words)
    frontier = set(words)
    for _ in range(budget):
        frontier = {
            w[:i] + (s,) + w[i:]
            for w in frontier
            for i in range(len(w) + 1)
            for s in range(q)
        }
        out |= frontier
    return out


def brute_ball(center: tuple, q: int, dels: int, ins: int) -> set:
    return brute_insertions(brute_deletions(center, dels), ins, q)


class TestWord:
    def test_parse_and_text_roundtrip(self):
        w = Word.parse("0a9", 11)
        assert w.symbols == (0, 10, 9)
        assert w.text() == "0a9"

    def test_large_alphabet_comma_format(self):
        w = Word.parse("0,41,7", 50)
        assert w.symbols == (0, 41, 7)
        assert w.text() == "0,41,7"

    def test_empty(self):
        assert Word.parse("", 2).symbols == ()

    def test_rejects_out_of_range_symbol(self):
        with pytest.raises(DomainError):
            Word((2,), 2)
        with pytest.raises(DomainError):
            Word.parse("3", 3)


class TestLcs:
    def test_spec_examples(self):
        assert lcs(W("0101"), W("11")) == 2
        a = W("011010")
        assert lcs(a, a) == len(a)
        assert lcs(W("012", 3), W("210", 3)) == 1

    def test_exhaustive_small_words(self):
        for q, n in ((2, 4), (3, 3)):
            for a in iter_words(q, [n]):
                for b in iter_words(q, [n - 1]):
                    assert lcs(Word(a, q), Word(b, q)) == brute_lcs(a, b)

    def test_alphabet_mismatch(self):
        with pytest.raises(DomainError):
            lcs(W("01", 2), W("01", 3))


class TestReachable:
    def test_identity(self):
        assert reachable(W("0110"), W("0110"), 0, 0)

    def test_single_deletion(self):
        assert reachable(W("000"), W("00"), 1, 0)
        assert not reachable(W("111"), W("00"), 1, 0)

    def test_swap_needs_one_of_each(self):
        assert reachable(W("01"), W("10"), 1, 1)
        assert not reachable(W("01"), W("10"), 1, 0)

    def test_against_brute_ball(self):
        # every <=1-deletion, <=1-insertion output of "01", and nothing else
        ball = brute_ball((0, 1), 2, 1, 1)
        for length in range(0, 4):
            for w in iter_words(2, [length]):
                assert reachable(W("01"), Word(w, 2), 1, 1) == (w in ball)

    @given(
        q=st.integers(2, 3),
        x=st.lists(st.integers(0, 2), max_size=6),
        w=st.lists(st.integers(0, 2), max_size=6),
        dels=st.integers(0, 4),
        ins=st.integers(0, 4),
    )
    def test_monotone_in_budgets(self, q, x, w, dels, ins):
        xs = tuple(min(s, q - 1) for s in x)
        ws = tuple(min(s, q - 1) for s in w)
        base = reachable(Word(xs, q), Word(ws, q), dels, ins)
        if base:
            assert reachable(Word(xs, q), Word(ws, q), dels + 1, ins)
            assert reachable(Word(xs, q), Word(ws, q), dels, ins + 1)

    def test_negative_budget_rejected(self):
        with pytest.raises(DomainError):
            reachable(W("01"), W("01"), -1, 0)


class TestSupersequenceCount:
    def test_zero_insertions(self):
        for n, q in ((0, 2), (3, 2), (5, 7)):
            assert supersequence_count_exact_length(n, 0, q) == 1

    def test_binary_example_with_enumeration(self):
        supers = {w for w in iter_words(2, [3]) if brute_is_subsequence((0, 1), w)}
        assert supers == {(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 1)}
        assert supersequence_count_exact_length(2, 1, 2) == len(supers) == 4

    def test_ternary_example_with_enumeration(self):
        supers = {w for w in iter_words(3, [3]) if brute_is_subsequence((1,), w)}
        assert supersequence_count_exact_length(1, 2, 3) == len(supers) == 19

    def test_center_independent_exhaustive(self):
        for q, n, t in ((2, 4, 2), (3, 3, 2)):
            expected = supersequence_count_exact_length(n, t, q)
            for center in iter_words(q, [n]):
                count = sum(
                    1
                    for w in iter_words(q, [n + t])
                    if brute_is_subsequence(center, w)
                )
                assert count == expected

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            supersequence_count_exact_length(-1, 0, 2)


class TestEnumerateBall:
    def test_radius_zero(self):
        ball = enumerate_ball(BallSpec(W("010"), insertions=0, deletions=0))
        assert ball == frozenset({W("010")})

    def test_spec_insertion_example(self):
        ball = enumerate_ball(BallSpec(W("01"), insertions=1, deletions=0))
        assert {w.text() for w in ball} == {"01", "001", "010", "011", "101"}
        exact = enumerate_ball(
            BallSpec(W("01"), insertions=1, deletions=0, length_mode=EXACT_FINAL_LENGTH)
        )
        # cumulative ball (5 words) vs exact-length slice (4): the two
        # readings of the insertion-ball count, both supported
        assert len(ball) == 5 and len(exact) == 4

    def test_exact_length_matches_formula(self):
        for q, n, t in ((2, 4, 2), (3, 3, 2)):
            for center in iter_words(q, [n]):
                ball = enumerate_ball(
                    BallSpec(
                        Word(center, q),
                        insertions=t,
                        deletions=0,
                        length_mode=EXACT_FINAL_LENGTH,
                    )
                )
                assert len(ball) == supersequence_count_exact_length(n, t, q)

    def test_against_brute_ball_and_reachable(self):
        rng = random.Random(11)
        center = W("0102", 3)
        ball = enumerate_ball(BallSpec(center, insertions=1, deletions=1))
        brute = brute_ball(center.symbols, 3, 1, 1)
        assert {w.symbols for w in ball} == brute
        for w in ball:
            assert reachable(center, w, 1, 1)
        outside = 0
        while outside < 100:
            length = rng.randint(0, 6)
            symbols = tuple(rng.randrange(3) for _ in range(length))
            if symbols in brute:
                continue
            assert not reachable(center, Word(symbols, 3), 1, 1)
            outside += 1

    def test_exact_slice_of_mixed_ball(self):
        center = W("0011")
        exact = enumerate_ball(
            BallSpec(center, insertions=2, deletions=1, length_mode=EXACT_FINAL_LENGTH)
        )
        brute = {w for w in brute_ball(center.symbols, 2, 1, 2) if len(w) == 5}
        assert {w.symbols for w in exact} == brute

    def test_deletion_balls_depend_on_center(self):
        flat = enumerate_ball(BallSpec(W("0000"), insertions=0, deletions=2))
        alternating = enumerate_ball(BallSpec(W("0101"), insertions=0, deletions=2))
        assert len(flat) != len(alternating)
        assert len(flat) == 3  # 0000, 000, 00

    def test_budget_error_reports_requirement(self):
        spec = BallSpec(Word(tuple([0] * 20), 3), insertions=5, deletions=0)
        with pytest.raises(BudgetError) as err:
            enumerate_ball(spec)
        assert err.value.required == 3**25

    def test_cap_override(self, monkeypatch):
        monkeypatch.setenv("INSDEL_BOUNDS_ENUM_CAP", "4")
        with pytest.raises(BudgetError):
            enumerate_ball(BallSpec(W("01"), insertions=1, deletions=0))

    def test_deletions_beyond_length_rejected(self):
        with pytest.raises(DomainError):
            BallSpec(W("01"), insertions=0, deletions=3)


class TestContainmentProbability:
    def test_exact_length_is_point_mass(self):
        for q in (2, 3):
            for k in (1, 2, 3):
                for symbols in iter_words(q, [k]):
                    assert containment_probability(Word(symbols, q), k) == Fraction(
                        1, q**k
                    )

    def test_binary_spec_examples(self):
        assert containment_probability(W("01"), 3) == Fraction(1, 2)
        assert containment_probability(W("00"), 3) == Fraction(1, 2)
        holders = {
            w for w in iter_words(2, [3]) if brute_is_subsequence((0, 0), w)
        }
        assert holders == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)}

    def test_matches_enumeration(self):
        for q in (2, 3):
            for k in range(0, 4):
                for symbols in iter_words(q, [k]):
                    y = Word(symbols, q)
                    for m in range(k, 7 - q + k):
                        count = sum(
                            1
                            for w in iter_words(q, [m])
                            if brute_is_subsequence(symbols, w)
                        )
                        assert containment_probability(y, m) == Fraction(count, q**m)

    def test_dual_oracles_agree(self):
        for q in (2, 3):
            for k in range(0, 5):
                for symbols in iter_words(q, [k]):
                    y = Word(symbols, q)
                    for m in range(k, 8):
                        assert _containment_dp(y, m) == _containment_leftmost_sum(
                            k, m, q
                        )

    def test_length_error(self):
        with pytest.raises(DomainError):
            containment_probability(W("010"), 2)


class TestCheckListDecodable:
    def test_repetition_code_one_deletion(self):
        code = SmallCode.from_texts(["000", "111"], 2)
        assert check_list_decodable(code, 0.0, 1 / 3, 1).ok

    def test_two_deletions_verdict_derived_by_enumeration(self):
        # gamma=0 means received words must be subsequences; the nonempty
        # subsequences of 000 and 111 are disjoint, so L=1 still holds
        code = SmallCode.from_texts(["000", "111"], 2)
        for length in (1, 2, 3):
            for w in iter_words(2, [length]):
                owners = [
                    c
                    for c in ((0, 0, 0), (1, 1, 1))
                    if brute_is_subsequence(w, c)
                ]
                assert len(owners) <= 1
        assert check_list_decodable(code, 0.0, 2 / 3, 1).ok

    def test_total_deletion_violates(self):
        code = SmallCode.from_texts(["000", "111"], 2)
        verdict = check_list_decodable(code, 0.0, 1.0, 1)
        assert not verdict.ok
        assert verdict.witness.symbols == ()
        assert len(verdict.decoded_list) == 2

    def test_list_cap_at_code_size_trivially_ok(self):
        code = SmallCode.from_texts(["00", "01", "10"], 2)
        assert check_list_decodable(code, 1.0, 1.0, 3).ok

    def test_witness_is_first_in_scan_order(self):
        code = SmallCode.from_texts(["00", "11"], 2)
        verdict = check_list_decodable(code, 0.0, 1.0, 1)
        assert not verdict.ok and verdict.witness.symbols == ()

    def test_permutation_invariance_random_codes(self):
        rng = random.Random(7)
        for _ in range(15):
            q = rng.choice((2, 3))
            n = rng.randint(3, 5)
            size = rng.randint(2, 3)
            words = set()
            while len(words) < size:
                words.add(tuple(rng.randrange(q) for _ in range(n)))
            code = SmallCode(q, n, tuple(Word(w, q) for w in sorted(words)))
            gamma, delta = rng.choice(((0.0, 1 / n), (1 / n, 0.0), (1 / n, 1 / n)))
            cap = rng.randint(1, 2)
            base = check_list_decodable(code, gamma, delta, cap)
            perm = list(range(q))
            rng.shuffle(perm)
            relabeled = SmallCode(
                q,
                n,
                tuple(
                    Word(tuple(perm[s] for s in w.symbols), q)
                    for w in code.codewords
                ),
            )
            relabeled_verdict = check_list_decodable(relabeled, gamma, delta, cap)
            assert base.ok == relabeled_verdict.ok
            if not base.ok:
                max_del, max_ins = corruption_radii(n, gamma, delta)
                permuted = Word(tuple(perm[s] for s in base.witness.symbols), q)
                lst = decode_list(relabeled, permuted, min(max_del, n), max_ins)
                assert len(lst) == len(base.decoded_list) > cap

    def test_budget_error(self):
        code = SmallCode.from_texts(["0" * 30, "1" * 30], 2)
        with pytest.raises(BudgetError):
            check_list_decodable(code, 1.0, 0.0, 1)

    def test_rejects_bad_code(self):
        with pytest.raises(DomainError):
            SmallCode.from_texts(["00", "00"], 2)
        with pytest.raises(DomainError):
            SmallCode.from_texts(["00", "111"], 2)
        with pytest.raises(DomainError):
            SmallCode(2, 2, ())


class TestAlphabetReduction:
    def test_zero_is_identity(self):
        w = W("01101")
        assert alphabet_reduction(w, 0) == w

    def test_removes_least_frequent(self):
        assert alphabet_reduction(W("00011"), 1) == W("000")

    def test_tie_breaks_toward_smaller_symbol(self):
        # both symbols occur twice; 0 is removed first
        assert alphabet_reduction(W("0101"), 1).symbols == (1, 1)

    def test_absent_symbols_removed_first(self):
        # symbol 2 never occurs, so it is the cheapest removal
        reduced = alphabet_reduction(W("0101", 3), 1)
        assert reduced.symbols == (0, 1, 0)  # trimmed to ceil(4 * 2/3) = 3

    def test_output_length_is_exact_ceiling(self):
        for q, n in ((2, 6), (3, 5)):
            for d in range(q):
                target = math.ceil(n * (q - d) / q)
                for symbols in iter_words(q, [n]):
                    out = alphabet_reduction(Word(symbols, q), d)
                    assert len(out) == target

    def test_image_size_within_counting_bound(self):
        for q, n in ((2, 6), (3, 6)):
            for d in range(1, q):
                outputs = {
                    alphabet_reduction(Word(symbols, q), d).symbols
                    for symbols in iter_words(q, [n])
                }
                target = math.ceil(n * (q - d) / q)
                assert len(outputs) <= math.comb(q, d) * (q - d) ** target


class TestTwoSegmentReduction:
    def test_alpha_one_matches_single_reduction(self):
        w = W("0110100")
        result = two_segment_reduction(w, 0, 1.0)
        assert result.word == alphabet_reduction(w, 0)
        assert result.sigma0 == (0, 1)

    def test_sigma_sizes(self):
        result = two_segment_reduction(W("0120120", 3), 1, 0.5)
        assert len(result.sigma0) == 2 and len(result.sigma1) == 1

    def test_segment_symbols_stay_in_sigma(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(2, 9)
            symbols = tuple(rng.randrange(3) for _ in range(n))
            alpha = rng.uniform(0.2, 1.0)
            result = two_segment_reduction(Word(symbols, 3), 1, alpha)
            head_len = math.ceil(alpha * n)
            r0_len = math.ceil(head_len * 2 / 3)
            head, tail = result.word.symbols[:r0_len], result.word.symbols[r0_len:]
            assert set(head) <= set(result.sigma0)
            assert set(tail) <= set(result.sigma1)

    def test_deletion_budget(self):
        # deletions used <= ceil(n (alpha d/q + (1-alpha)(d+1)/q)) + 2
        q, d = 3, 1
        for n in range(1, 11):
            for alpha in (0.3, 0.5, 1.0):
                budget = math.ceil(n * (alpha * d / q + (1 - alpha) * (d + 1) / q)) + 2
                for symbols in itertools.product(range(q), repeat=min(n, 7)):
                    padded = symbols + (0,) * (n - len(symbols))
                    out = two_segment_reduction(Word(padded, q), d, alpha)
                    assert n - len(out.word) <= budget

    def test_image_size_within_counting_bound(self):
        q, d, alpha = 3, 1, 0.5
        for n in (4, 6, 8):
            head_len = math.ceil(alpha * n)
            n0 = math.ceil(head_len * (q - d) / q)
            n1 = math.ceil((n - head_len) * (q - d - 1) / q)
            outputs = {
                two_segment_reduction(Word(symbols, q), d, alpha).word.symbols
                for symbols in iter_words(q, [n])
            }
            cap = (
                math.comb(q, d)
                * math.comb(q, d + 1)
                * (q - d) ** n0
                * (q - d - 1) ** n1
            )
            assert len(outputs) <= cap

    def test_rejects_bad_parameters(self):
        with pytest.raises(DomainError):
            two_segment_reduction(W("0101"), 1, 0.5)  # d+1 == q
        with pytest.raises(DomainError):
            two_segment_reduction(W("0101", 3), 1, 0.0)
