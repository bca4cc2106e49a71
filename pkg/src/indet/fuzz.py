"""Seeded random generators and the property sweep behind ``indet fuzz``."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .core import Alphabet, IndetString, Letter, format_text
from .oracles import oracle_is_regular, oracle_mp
from .palindrome import (PalindromeArray, any_string_from_mp, construct,
                         format_mp, is_feasible, manacher_probes, mp_array)
from .regularity import regular_check


def random_feasible_mp(rng: random.Random, m: int) -> PalindromeArray:
    """Uniform over the allowed values at each position independently."""
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and >= 3")
    mp = [0] * m
    for j in range(2, m):
        lo, hi = 1 - j % 2, min(j - 1, m - j)
        mp[j - 1] = rng.choice(range(lo, hi + 1, 2))
    return PalindromeArray(tuple(mp))


def random_scope1(rng: random.Random, n: int, sigma: int) -> IndetString:
    alphabet = Alphabet.integers(sigma)
    return IndetString(tuple(Letter((rng.randint(1, sigma),)) for _ in range(n)), alphabet)


def random_regular_mp(rng: random.Random, n: int, sigma: int = 3) -> PalindromeArray:
    return mp_array(random_scope1(rng, n, sigma))


def random_letters(rng: random.Random, n: int, sigma: int = 3,
                   p_indet: float = 0.4, p_hole: float = 0.05) -> IndetString:
    alphabet = Alphabet.integers(sigma)
    letters = []
    for _ in range(n):
        u = rng.random()
        if u < p_hole:
            letters.append(Letter(()))
        elif u < p_hole + p_indet and sigma > 1:
            k = rng.randint(2, sigma)
            letters.append(Letter.of(rng.sample(range(1, sigma + 1), k)))
        else:
            letters.append(Letter((rng.randint(1, sigma),)))
    return IndetString(tuple(letters), alphabet)


def _check_differs(x) -> bool:
    return regular_check(x)[0] != oracle_is_regular(x)


def _mp_differs(x) -> bool:
    return tuple(mp_array(x)) != oracle_mp(x)


def shrink(x: IndetString, fails) -> IndetString:
    """Drop letters one at a time while `fails` keeps holding."""
    letters = list(x.letters)
    changed = True
    while changed and len(letters) > 1:
        changed = False
        for i in range(len(letters)):
            trial = IndetString(tuple(letters[:i] + letters[i + 1:]), x.alphabet)
            if fails(trial):
                letters = list(trial.letters)
                changed = True
                break
    return IndetString(tuple(letters), x.alphabet)


@dataclass
class FuzzReport:
    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _mp_case(mp) -> list[str]:
    problems = []
    if not is_feasible(mp):
        problems.append("generator produced an infeasible array")
        return problems
    if tuple(mp_array(any_string_from_mp(mp))) != tuple(mp):
        problems.append("any_string_from_mp round trip")
    res = construct(mp)
    if tuple(mp_array(res.xs)) != tuple(mp):
        problems.append("construct round trip")
    if res.regular != all(ok for _, _, ok in manacher_probes(mp)):
        problems.append("regular flag disagrees with Manacher probes")
    return problems


def run_fuzz(seed: int, count: int = 100, max_m: int = 25, max_n: int = 10,
             curve: tuple[int, ...] = (), timing: bool = False) -> FuzzReport:
    """Round trips on feasible MP arrays and oracle agreement on random strings.

    Half the MP arrays come from random scope-1 strings so the regular branch
    is exercised; the rest are uniform feasible arrays.
    """
    rng = random.Random(seed)
    rep = FuzzReport()

    passed = 0
    for t in range(count):
        m = rng.randrange(3, max_m + 1, 2)
        if t % 2:
            mp = random_regular_mp(rng, (m - 1) // 2, rng.randint(1, 4))
        else:
            mp = random_feasible_mp(rng, m)
        problems = _mp_case(mp)
        if problems:
            rep.failures.append(f"reverse {format_mp(mp)!r}: {'; '.join(problems)}")
        else:
            passed += 1
    rep.lines.append(f"{passed}/{count} round-trip OK")

    bad = 0
    for _ in range(count):
        x = random_scope1(rng, rng.randint(1, max_n), rng.randint(1, 4))
        if _mp_differs(x):
            bad += 1
            rep.failures.append(f"mp {format_text(shrink(x, _mp_differs))!r}: mp_array != oracle_mp")
    rep.lines.append("mp_array = oracle_mp on all" if not bad
                     else f"mp_array != oracle_mp on {bad}/{count}")

    bad = 0
    for _ in range(count):
        x = random_letters(rng, rng.randint(1, max_n), rng.randint(1, 4))
        if _check_differs(x):
            bad += 1
            rep.failures.append(f"check {format_text(shrink(x, _check_differs))!r}: "
                                "regular_check != oracle_is_regular")
        if _mp_differs(x):
            bad += 1
            rep.failures.append(f"mp {format_text(shrink(x, _mp_differs))!r}: "
                                "mp_array != oracle_mp")
    rep.lines.append("regular_check = oracle_is_regular on all" if not bad
                     else f"{bad} disagreements on random indeterminate strings")

    for n in curve:
        mp = random_feasible_mp(rng, 2 * n + 1)
        t0 = time.perf_counter()
        res = construct(mp)
        dt = time.perf_counter() - t0
        line = (f"curve n={n} regular={res.regular} centres={res.centres_evaluated} "
                f"fallback={res.fallback}")
        rep.lines.append(line + (f" seconds={dt:.4f}" if timing else ""))
    return rep
