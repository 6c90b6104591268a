"""Exact small-scale combinatorics: the ground truth behind the formulas.

Everything here is integer- or rational-exact, which is what makes these
routines usable as oracles for the closed-form bounds.

Run:  python demos/04_exact_combinatorics.py
"""

from insdel_bounds import (
    BallSpec,
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

# ---------------------------------------------------------------------------
# Insertion balls of a fixed final length have a size that does not depend
# on the center word, only on its length.
print("exact-length supersequence counts (center-independent):")
for n, t, q in ((2, 1, 2), (1, 2, 3), (4, 3, 2)):
    print(f"  n={n}, t={t}, q={q}: {supersequence_count_exact_length(n, t, q)}")

center = Word.parse("01", 2)
cumulative = enumerate_ball(BallSpec(center, insertions=1, deletions=0))
exact = enumerate_ball(
    BallSpec(center, insertions=1, deletions=0, length_mode="exact-final-length")
)
print(f"\nball around '01' with one insertion:")
print(f"  all lengths:  {sorted(w.text() for w in cumulative)}")
print(f"  length 3 only: {sorted(w.text() for w in exact)}")

# Deletion balls are NOT center-independent: a constant word shrinks to
# almost nothing, an alternating one scatters widely.
flat = enumerate_ball(BallSpec(Word.parse("0000", 2), insertions=0, deletions=2))
alt = enumerate_ball(BallSpec(Word.parse("0101", 2), insertions=0, deletions=2))
print(f"\ntwo deletions from 0000: {len(flat)} words; from 0101: {len(alt)} words")

# ---------------------------------------------------------------------------
# Reachability under corruption budgets reduces to one LCS computation.
x, w = Word.parse("01", 2), Word.parse("10", 2)
print(f"\nlcs(0101, 11) = {lcs(Word.parse('0101', 2), Word.parse('11', 2))}")
print(f"'01' -> '10' with 1 del + 1 ins: {reachable(x, w, 1, 1)}")
print(f"'01' -> '10' with 1 del only:    {reachable(x, w, 1, 0)}")

# ---------------------------------------------------------------------------
# Probability that a random length-m word contains y as a subsequence,
# computed two independent ways that must agree exactly.
for text, m in (("01", 3), ("00", 3), ("010", 6)):
    p = containment_probability(Word.parse(text, 2), m)
    print(f"P(random length-{m} binary word contains {text}) = {p}")

# ---------------------------------------------------------------------------
# The list-decodability checker scans every possible received word.
code = SmallCode.from_texts(["000", "111"], 2)
print("\nrepetition code {000, 111}:")
for delta in (1 / 3, 2 / 3, 1.0):
    verdict = check_list_decodable(code, 0.0, delta, 1)
    if verdict.ok:
        print(f"  delta={delta:.2f}: list size stays at 1")
    else:
        offenders = ",".join(w.text() for w in verdict.decoded_list)
        print(
            f"  delta={delta:.2f}: violated by {verdict.witness.text()!r} -> [{offenders}]"
        )

# ---------------------------------------------------------------------------
# The adversary strategies behind the deletion bounds, made concrete.
word = Word.parse("0120120", 3)
print(f"\nalphabet reduction of {word.text()} by d=1: {alphabet_reduction(word, 1).text()}")
two = two_segment_reduction(word, 1, 0.5)
print(
    f"two-segment reduction: {two.word.text()} "
    f"(alphabets {set(two.sigma0)} then {set(two.sigma1)})"
)
