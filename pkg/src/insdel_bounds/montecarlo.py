"""Seeded random-code experiments against the list-decodability checker.

Randomness contract: the generator is numpy's Philox (a named,
counter-based, splittable algorithm).  A run derives one
``numpy.random.SeedSequence(seed)`` root and spawns one child sequence
per trial, so trial streams are independent and a parallel driver that
assigns ``spawn(trials)[i]`` to trial ``i`` reproduces the serial run
bit for bit.  Every report is a pure function of its config.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import check_alphabet
from .errors import BudgetError, DomainError
from .oracles import SmallCode, Word, corruption_radii, decode_list, enumeration_cap, iter_words


@dataclass(frozen=True)
class McConfig:
    """Parameters of one reproducible random-code experiment.

    The sampled code has ``q ** ceil(rate_target * n)`` distinct uniform
    codewords of length ``n``; each trial scans received words (all of
    them when the space fits the enumeration cap, otherwise
    ``sample_words`` random corruptions per trial) and records list
    sizes under ``max_del = floor(delta*n)``, ``max_ins = floor(gamma*n)``.
    """

    q: int
    n: int
    gamma: float
    delta: float
    rate_target: float
    list_cap: int
    trials: int
    seed: int
    sample_words: int = 2000

    def __post_init__(self) -> None:
        check_alphabet(self.q)
        if self.n < 1:
            raise DomainError(f"block length must be >= 1, got {self.n}")
        if self.rate_target < 0:
            raise DomainError(f"rate target must be >= 0, got {self.rate_target}")
        if self.list_cap < 1:
            raise DomainError(f"list cap must be >= 1, got {self.list_cap}")
        if self.trials < 1:
            raise DomainError(f"trial count must be >= 1, got {self.trials}")
        if self.gamma < 0 or self.delta < 0 or self.delta > 1:
            raise DomainError(f"bad error rates ({self.gamma}, {self.delta})")

    def code_size(self) -> int:
        exponent = math.ceil(self.rate_target * self.n - 1e-9)
        return self.q ** max(exponent, 0)


@dataclass(frozen=True)
class McReport:
    """Aggregate outcome; equal configs produce equal reports."""

    violations: int
    max_list_size: int
    words_sampled: int
    trial_max_list_sizes: tuple[int, ...]


def _sample_code(cfg: McConfig, rng: np.random.Generator) -> SmallCode:
    size = cfg.code_size()
    if size > cfg.q**cfg.n:
        raise DomainError(
            f"rate target {cfg.rate_target} asks for {size} codewords, "
            f"only {cfg.q ** cfg.n} exist"
        )
    seen: dict[tuple[int, ...], None] = {}
    while len(seen) < size:
        candidate = tuple(int(s) for s in rng.integers(0, cfg.q, size=cfg.n))
        seen.setdefault(candidate, None)
    words = tuple(Word(symbols, cfg.q) for symbols in seen)
    return SmallCode(q=cfg.q, n=cfg.n, codewords=words)


def _corrupt(
    word: tuple[int, ...], max_del: int, max_ins: int, q: int, rng: np.random.Generator
) -> tuple[int, ...]:
    out = list(word)
    for _ in range(min(max_del, len(out))):
        del out[int(rng.integers(0, len(out)))]
    for _ in range(max_ins):
        out.insert(int(rng.integers(0, len(out) + 1)), int(rng.integers(0, q)))
    return tuple(out)


def run_inner_bound_mc(cfg: McConfig) -> McReport:
    """Sample random codes at the target rate and measure worst list sizes.

    A violation is a received word whose decoded list exceeds the cap.
    Deterministic given the config; see the module docstring for the
    seeding and splitting rule.
    """
    cap = enumeration_cap()
    if cfg.code_size() > cap:
        raise BudgetError(cfg.code_size(), cap, what="code sampling")
    max_del, max_ins = corruption_radii(cfg.n, cfg.gamma, cfg.delta)
    max_del = min(max_del, cfg.n)
    lengths = range(cfg.n - max_del, cfg.n + max_ins + 1)
    space = sum(cfg.q**length for length in lengths)
    exhaustive = space <= cap

    children = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    violations = 0
    words_sampled = 0
    trial_maxima = []
    for child in children:
        rng = np.random.Generator(np.random.Philox(child))
        code = _sample_code(cfg, rng)
        worst = 0
        if exhaustive:
            for ws in iter_words(cfg.q, lengths):
                size = len(decode_list(code, Word(ws, cfg.q), max_del, max_ins))
                worst = max(worst, size)
                if size > cfg.list_cap:
                    violations += 1
                words_sampled += 1
        else:
            for _ in range(cfg.sample_words):
                base = code.codewords[int(rng.integers(0, len(code.codewords)))]
                ws = _corrupt(base.symbols, max_del, max_ins, cfg.q, rng)
                size = len(decode_list(code, Word(ws, cfg.q), max_del, max_ins))
                worst = max(worst, size)
                if size > cfg.list_cap:
                    violations += 1
                words_sampled += 1
        trial_maxima.append(worst)
    return McReport(
        violations=violations,
        max_list_size=max(trial_maxima),
        words_sampled=words_sampled,
        trial_max_list_sizes=tuple(trial_maxima),
    )
