"""Brute-force reference implementations.

Everything here is written straight from the definitions and shares no code
with the fast paths, so agreement between the two means something.  Letters
are compared as Python sets of characters; the don't-care is the whole
alphabet.  Costs are polynomial with large exponents or outright exponential.
"""
from __future__ import annotations

import itertools

from .core import Alphabet, IndetString, Letter, RegularWitness

__all__ = [
    "oracle_is_regular", "oracle_mp", "oracle_lex_least",
    "oracle_lex_least_by_mp", "oracle_closure",
]


def _charsets(letters, sigma):
    everything = frozenset(range(1, sigma + 1))
    return [frozenset(lt.ranks) if lt.ranks else everything for lt in letters]


def oracle_is_regular(x: IndetString) -> bool:
    """Every triple (i, j1, j2) of distinct positions with x[j1]~x[i]~x[j2] has x[j1]~x[j2]."""
    sets = _charsets(x.letters, x.alphabet.sigma)
    n = len(sets)
    match = [[bool(sets[i] & sets[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j1 in range(n):
            if j1 == i or not match[i][j1]:
                continue
            for j2 in range(n):
                if j2 != i and j2 != j1 and match[i][j2] and not match[j1][j2]:
                    return False
    return True


def oracle_mp(xs) -> tuple[int, ...]:
    """Radius at every centre of x* by plain outward expansion.

    Accepts a StarString or an IndetString (which is expanded first).
    """
    if isinstance(xs, IndetString):
        letters = list(xs.letters)
    else:
        letters = [lt for lt in xs.letters if lt != "#"]
    sets = _charsets(letters, xs.alphabet.sigma)
    seq: list = ["#"]
    for s in sets:
        seq += [s, "#"]

    def same(a, b):
        if a == "#" or b == "#":
            return a == b
        return bool(a & b)

    m = len(seq)
    out = []
    for c in range(m):
        r = 0
        while c - r - 1 >= 0 and c + r + 1 < m and same(seq[c - r - 1], seq[c + r + 1]):
            r += 1
        out.append(r)
    return tuple(out)


def oracle_lex_least(x: IndetString) -> RegularWitness:
    """Smallest scope-1 integer string with the same match relation, by enumeration.

    Tries every assignment of values 1..d to the d distinct letters.
    """
    if not oracle_is_regular(x):
        raise ValueError("string is not regular")
    distinct = sorted(set(x.letters))
    d = len(distinct)
    if d > 6:
        raise ValueError(f"{d} distinct letters; the enumeration is limited to 6")
    sets = _charsets(distinct, x.alphabet.sigma)
    index = {lt: i for i, lt in enumerate(distinct)}
    pos = [index[lt] for lt in x.letters]
    best = None
    for values in itertools.product(range(1, d + 1), repeat=d):
        ok = all((values[a] == values[b]) == bool(sets[a] & sets[b])
                 for a in range(d) for b in range(a + 1, d))
        if not ok:
            continue
        y = tuple(values[p] for p in pos)
        if best is None or y < best:
            best = y
    return RegularWitness(best, max(best))


def oracle_lex_least_by_mp(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Map every MP array of a length-n scope-1 string to its least such string.

    Walks all of {1..n}^n in lexicographic order, so the first string seen
    for an MP array is the minimum.
    """
    alphabet = Alphabet.integers(n)
    letters = [Letter((h,)) for h in range(1, n + 1)]
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for y in itertools.product(range(1, n + 1), repeat=n):
        mp = oracle_mp(IndetString(tuple(letters[h - 1] for h in y), alphabet))
        if mp not in out:
            out[mp] = y
    return out


def oracle_closure(bits) -> tuple[int, ...]:
    """Class ids of the transitive closure via Warshall reachability.

    Ids are numbered by first occurrence.
    """
    m = len(bits)
    reach = [[bool(bits[i][j]) for j in range(m)] for i in range(m)]
    for k in range(m):
        rk = reach[k]
        for i in range(m):
            if reach[i][k]:
                ri = reach[i]
                for j in range(m):
                    if rk[j]:
                        ri[j] = True
    ids = [0] * m
    nxt = 0
    for i in range(m):
        if ids[i]:
            continue
        nxt += 1
        for j in range(m):
            if reach[i][j]:
                ids[j] = nxt
    return tuple(ids)
