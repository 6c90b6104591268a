"""Exact combinatorial ground truth at desk scale.

Everything in this module is integer- or rational-exact: ball sizes are
big integers, probabilities are :class:`fractions.Fraction`.  These
routines exist to verify the closed-form bounds on small instances, so a
floating-point error here would poison every downstream test.

Enumerations are guarded by a state cap (default 10**7, overridable via
the ``INSDEL_BOUNDS_ENUM_CAP`` environment variable) and raise
:class:`BudgetError` with the required budget when exceeded.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .bounds import check_alphabet, snap_floor
from .errors import BudgetError, DomainError, InsdelBoundsError

DEFAULT_ENUM_CAP = 10_000_000
ENUM_CAP_ENV = "INSDEL_BOUNDS_ENUM_CAP"

ALL_LENGTHS = "all-lengths"
EXACT_FINAL_LENGTH = "exact-final-length"

_BASE36 = "0123456789abcdefghijklmnopqrstuvwxyz"


def enumeration_cap() -> int:
    """Current enumeration state cap (environment override wins)."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise DomainError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class Word:
    """A finite string over the alphabet ``{0, ..., q-1}``."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", check_alphabet(self.q))
        syms = tuple(int(s) for s in self.symbols)
        for s in syms:
            if not 0 <= s < self.q:
                raise DomainError(f"symbol {s} out of range for alphabet size {self.q}")
        object.__setattr__(self, "symbols", syms)

    def __len__(self) -> int:
        return len(self.symbols)

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        """Parse a word: base-36 digits for q <= 36, comma-separated ints above."""
        q = check_alphabet(q)
        text = text.strip()
        if q <= 36:
            syms = []
            for ch in text:
                value = _BASE36.find(ch.lower())
                if value < 0:
                    raise DomainError(f"invalid symbol character {ch!r}")
                syms.append(value)
            return cls(tuple(syms), q)
        if not text:
            return cls((), q)
        return cls(tuple(int(part) for part in text.split(",")), q)

    def text(self) -> str:
        """Inverse of :meth:`parse`."""
        if self.q <= 36:
            return "".join(_BASE36[s] for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class SmallCode:
    """A finite set of equal-length codewords over one alphabet."""

    q: int
    n: int
    codewords: tuple[Word, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", check_alphabet(self.q))
        if len(self.codewords) < 1:
            raise DomainError("a code needs at least one codeword")
        seen = set()
        for w in self.codewords:
            if w.q != self.q:
                raise DomainError("codeword alphabet does not match the code")
            if len(w) != self.n:
                raise DomainError(f"codeword length {len(w)} != block length {self.n}")
            if w.symbols in seen:
                raise DomainError(f"duplicate codeword {w.text()}")
            seen.add(w.symbols)

    @classmethod
    def from_texts(cls, texts: Iterable[str], q: int) -> "SmallCode":
        words = tuple(Word.parse(t, q) for t in texts)
        if not words:
            raise DomainError("a code needs at least one codeword")
        return cls(q=q, n=len(words[0]), codewords=words)


@dataclass(frozen=True)
class BallSpec:
    """An insertion-deletion ball around a center word.

    ``length_mode`` selects between the cumulative ball (every word
    reachable with at most the given budgets) and the exact-final-length
    slice ``|w| = n - deletions + insertions``.
    """

    center: Word
    insertions: int
    deletions: int
    length_mode: str = ALL_LENGTHS

    def __post_init__(self) -> None:
        if self.insertions < 0 or self.deletions < 0:
            raise DomainError("ball radii must be nonnegative")
        if self.deletions > len(self.center):
            raise DomainError(
                f"cannot delete {self.deletions} symbols from a length-{len(self.center)} word"
            )
        if self.length_mode not in (ALL_LENGTHS, EXACT_FINAL_LENGTH):
            raise DomainError(f"unknown length mode {self.length_mode!r}")


def _check_same_alphabet(a: Word, b: Word) -> int:
    if a.q != b.q:
        raise DomainError(f"alphabet mismatch: {a.q} vs {b.q}")
    return a.q


def lcs(a: Word, b: Word) -> int:
    """Length of the longest common subsequence, by dynamic programming."""
    _check_same_alphabet(a, b)
    return _lcs_tuples(a.symbols, b.symbols)


def _lcs_tuples(xs: tuple[int, ...], ys: tuple[int, ...]) -> int:
    if not xs or not ys:
        return 0
    prev = [0] * (len(ys) + 1)
    for x in xs:
        cur = [0] * (len(ys) + 1)
        for j, y in enumerate(ys, start=1):
            if x == y:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def _is_subsequence(xs: tuple[int, ...], ys: tuple[int, ...]) -> bool:
    it = iter(ys)
    return all(x in it for x in xs)


def _reachable_tuples(
    xs: tuple[int, ...], ws: tuple[int, ...], max_del: int, max_ins: int
) -> bool:
    if len(ws) < len(xs) - max_del or len(ws) > len(xs) + max_ins:
        return False
    if max_ins == 0:
        return len(xs) - len(ws) <= max_del and _is_subsequence(ws, xs)
    if max_del == 0:
        return len(ws) - len(xs) <= max_ins and _is_subsequence(xs, ws)
    common = _lcs_tuples(xs, ws)
    return len(xs) - common <= max_del and len(ws) - common <= max_ins


def reachable(x: Word, w: Word, max_del: int, max_ins: int) -> bool:
    """Can ``w`` be produced from ``x`` with the given corruption budgets?

    Holds exactly when some common subsequence covers both gaps:
    ``|x| - lcs(x, w) <= max_del`` and ``|w| - lcs(x, w) <= max_ins``.
    """
    _check_same_alphabet(x, w)
    if max_del < 0 or max_ins < 0:
        raise DomainError("corruption budgets must be nonnegative")
    return _reachable_tuples(x.symbols, w.symbols, max_del, max_ins)


def supersequence_count_exact_length(n: int, t: int, q: int) -> int:
    """Number of length ``n+t`` supersequences of any fixed length-``n`` word.

    Equals ``sum_{i=0}^{t} C(n+t, i) (q-1)^i`` regardless of the word,
    which is exactly what the enumeration tests verify.  Exact integer.
    """
    q = check_alphabet(q)
    if n < 0 or t < 0:
        raise DomainError("lengths must be nonnegative")
    return sum(math.comb(n + t, i) * (q - 1) ** i for i in range(t + 1))


def _insertion_neighbours(word: tuple[int, ...], q: int) -> set[tuple[int, ...]]:
    out = set()
    for i in range(len(word) + 1):
        head, tail = word[:i], word[i:]
        for s in range(q):
            out.add(head + (s,) + tail)
    return out


def _deletion_neighbours(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {word[:i] + word[i + 1 :] for i in range(len(word))}


def enumerate_ball(spec: BallSpec) -> frozenset[Word]:
    """Exact ball contents: up to ``deletions`` deletions, then insertions.

    In exact-final-length mode only words of length
    ``n - deletions + insertions`` are returned (equivalently: exactly
    the full budgets are spent).  Guarded by the enumeration cap on the
    candidate space ``q ** (n + insertions)``.
    """
    q = spec.center.q
    n = len(spec.center)
    budget = q ** (n + spec.insertions)
    cap = enumeration_cap()
    if budget > cap:
        raise BudgetError(budget, cap, what="ball enumeration")

    exact = spec.length_mode == EXACT_FINAL_LENGTH
    level = {spec.center.symbols}
    deleted: set[tuple[int, ...]] = set(level)
    for _ in range(spec.deletions):
        level = set().union(*(_deletion_neighbours(w) for w in level)) if level else set()
        deleted |= level
    start = level if exact else deleted

    level = set(start)
    grown: set[tuple[int, ...]] = set(level)
    for _ in range(spec.insertions):
        level = set().union(*(_insertion_neighbours(w, q) for w in level)) if level else set()
        grown |= level
    result = level if exact else grown
    return frozenset(Word(symbols, q) for symbols in result)


def _containment_dp(y: Word, m: int) -> Fraction:
    # Count length-m words containing y, walking the greedy prefix-match
    # automaton of y over every alphabet symbol; exact integer counts.
    k, q = len(y), y.q
    counts = [0] * (k + 1)
    counts[0] = 1
    for _ in range(m):
        nxt = [0] * (k + 1)
        for state, ways in enumerate(counts):
            if ways == 0:
                continue
            if state == k:
                nxt[k] += ways * q
                continue
            for sym in range(q):
                if sym == y.symbols[state]:
                    nxt[state + 1] += ways
                else:
                    nxt[state] += ways
        counts = nxt
    return Fraction(counts[k], q**m)


def _containment_leftmost_sum(k: int, m: int, q: int) -> Fraction:
    # Sum over the last index of the leftmost occurrence: the occurrence
    # ends at position j with C(j-1, k-1) placements of the earlier
    # indices, each weighted (1/q)^k (1 - 1/q)^(j-k).
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(k, m + 1):
        total += Fraction(math.comb(j - 1, k - 1) * (q - 1) ** (j - k), q**j)
    return total


def containment_probability(y: Word, m: int) -> Fraction:
    """Probability that a uniform random length-``m`` word contains ``y``.

    Computed two independent ways (prefix-automaton DP and the
    leftmost-occurrence sum) that must agree as exact rationals; their
    common value is returned.
    """
    if m < len(y):
        raise DomainError(f"target length {m} shorter than the word ({len(y)})")
    via_dp = _containment_dp(y, m)
    via_sum = _containment_leftmost_sum(len(y), m, y.q)
    if via_dp != via_sum:
        raise InsdelBoundsError(
            f"containment oracles disagree: dp={via_dp} sum={via_sum} for |y|={len(y)}, m={m}"
        )
    return via_dp


def iter_words(q: int, lengths: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """All words of the given lengths, shortest first, lexicographic within."""
    for length in lengths:
        yield from itertools.product(range(q), repeat=length)


@dataclass(frozen=True)
class ListDecodabilityVerdict:
    """Outcome of an exhaustive list-decodability check."""

    ok: bool
    witness: Word | None = None
    decoded_list: tuple[Word, ...] | None = None


def decode_list(code: SmallCode, w: Word, max_del: int, max_ins: int) -> tuple[Word, ...]:
    """All codewords that could have produced ``w`` within the budgets."""
    return tuple(
        x
        for x in code.codewords
        if _reachable_tuples(x.symbols, w.symbols, max_del, max_ins)
    )


def corruption_radii(n: int, gamma: float, delta: float) -> tuple[int, int]:
    """Integer budgets ``(max_del, max_ins) = (floor(delta*n), floor(gamma*n))``."""
    if gamma < 0 or delta < 0:
        raise DomainError("error rates must be nonnegative")
    max_del, _ = snap_floor(delta * n)
    max_ins, _ = snap_floor(gamma * n)
    return max_del, max_ins


def check_list_decodable(
    code: SmallCode, gamma: float, delta: float, list_cap: int
) -> ListDecodabilityVerdict:
    """Exhaustively test whether every received word decodes to <= ``list_cap`` codewords.

    Scans every word with length in ``[n - max_del, n + max_ins]`` in
    (length, lexicographic) order and returns the first violator with
    its decoded list, or an ok verdict.
    """
    if list_cap < 1:
        raise DomainError(f"list size cap must be >= 1, got {list_cap}")
    n, q = code.n, code.q
    max_del, max_ins = corruption_radii(n, gamma, delta)
    max_del = min(max_del, n)
    lengths = range(n - max_del, n + max_ins + 1)
    total = sum(q**length for length in lengths)
    cap = enumeration_cap()
    if total > cap:
        raise BudgetError(total, cap, what="received-word scan")
    if len(code.codewords) <= list_cap:
        return ListDecodabilityVerdict(ok=True)
    for ws in iter_words(q, lengths):
        hits = tuple(
            x for x in code.codewords if _reachable_tuples(x.symbols, ws, max_del, max_ins)
        )
        if len(hits) > list_cap:
            return ListDecodabilityVerdict(
                ok=False, witness=Word(ws, q), decoded_list=hits
            )
    return ListDecodabilityVerdict(ok=True)


def _reduction_plan(symbols: tuple[int, ...], q: int, d: int) -> tuple[int, ...]:
    # The d symbols to remove: least frequent first, ties broken by
    # smaller symbol value (removed first).
    counts = [0] * q
    for s in symbols:
        counts[s] += 1
    order = sorted(range(q), key=lambda s: (counts[s], s))
    return tuple(order[:d])


def alphabet_reduction(x: Word, d: int) -> Word:
    """Delete every occurrence of the ``d`` least frequent symbols of ``x``.

    Ties are broken toward smaller symbol values.  The survivor is then
    trimmed from the end to length ``ceil(n (1 - d/q))``, the length the
    deletion budget ``d n / q`` always suffices to reach.
    """
    if not 0 <= d < x.q:
        raise DomainError(f"reduction parameter must be in [0, q-1], got {d}")
    removed = set(_reduction_plan(x.symbols, x.q, d))
    kept = tuple(s for s in x.symbols if s not in removed)
    n = len(x)
    target = -((-n * (x.q - d)) // x.q)  # ceil(n (q - d) / q)
    return Word(kept[:target], x.q)


@dataclass(frozen=True)
class TwoSegmentReduction:
    """Result of reducing a word segment-wise, with the surviving alphabets."""

    word: Word
    sigma0: tuple[int, ...]
    sigma1: tuple[int, ...]


def two_segment_reduction(x: Word, d: int, alpha: float) -> TwoSegmentReduction:
    """Reduce the first ``ceil(alpha n)`` symbols by ``d``, the rest by ``d+1``.

    Returns the concatenated survivor together with the surviving
    sub-alphabets of the two segments.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"segment fraction must be in (0, 1], got {alpha}")
    if not 0 <= d < x.q - 1:
        raise DomainError(f"need d + 1 < q for the second segment, got d={d}, q={x.q}")
    head_len, _ = snap_floor(alpha * len(x))
    if head_len < alpha * len(x) - 1e-9:
        head_len += 1  # ceil
    head = Word(x.symbols[:head_len], x.q)
    tail = Word(x.symbols[head_len:], x.q)
    removed0 = set(_reduction_plan(head.symbols, x.q, d))
    removed1 = set(_reduction_plan(tail.symbols, x.q, d + 1))
    reduced0 = alphabet_reduction(head, d)
    reduced1 = alphabet_reduction(tail, d + 1)
    return TwoSegmentReduction(
        word=Word(reduced0.symbols + reduced1.symbols, x.q),
        sigma0=tuple(s for s in range(x.q) if s not in removed0),
        sigma1=tuple(s for s in range(x.q) if s not in removed1),
    )
