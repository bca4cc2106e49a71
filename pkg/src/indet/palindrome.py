"""Maximal palindrome arrays and their reverse engineering.

Positions are 1-based throughout, matching how MP arrays are usually
written.  ``x*`` interleaves ``#`` with the letters of ``x``::

    x  =  a a b a c
    x* = #a#a#b#a#c#        MP = 0 1 2 1 0 3 0 1 0 1 0

``MP[c]`` is the radius of the maximal palindrome centred at ``c`` in ``x*``,
where letters compare with the match relation and positions ``0`` and
``m+1`` match nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (Alphabet, IndetString, Letter, ParseError, format_letter,
                   letters_match, parse_text)

__all__ = [
    "SEP", "StarString", "PalindromeArray", "ForbiddenPair", "ConstructResult",
    "InfeasibleError", "expand", "strip", "parse_star", "mp_array",
    "is_feasible", "feasibility_violation", "forbidden_pairs",
    "any_string_from_mp", "manacher_condition", "manacher_probes", "construct",
    "parse_mp", "format_mp",
]

SEP = "#"


class InfeasibleError(ValueError):
    def __init__(self, condition: str, j: int):
        super().__init__(f"infeasible MP array: condition {condition} at j={j}")
        self.condition = condition
        self.j = j


@dataclass(frozen=True)
class StarString:
    """``#x1#x2#...#xn#``; odd positions hold :data:`SEP`, even ones letters."""

    letters: tuple
    alphabet: Alphabet

    def __post_init__(self):
        items = tuple(self.letters)
        object.__setattr__(self, "letters", items)
        m = len(items)
        if m < 3 or m % 2 == 0:
            raise ValueError(f"x* must have odd length >= 3, got {m}")
        for p, item in enumerate(items, 1):
            if p % 2:
                if item != SEP:
                    raise ValueError(f"position {p} must hold '#'")
            elif not isinstance(item, Letter):
                raise ValueError(f"position {p} must hold a letter")

    @property
    def m(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, p: int):
        """1-based access; 0 and m+1 give None (the empty letter)."""
        if p < 1 or p > len(self.letters):
            return None
        return self.letters[p - 1]

    def __str__(self) -> str:
        return "".join(SEP if p % 2 else format_letter(lt, self.alphabet)
                       for p, lt in enumerate(self.letters, 1))


@dataclass(frozen=True)
class PalindromeArray:
    mp: tuple[int, ...]

    def __post_init__(self):
        mp = tuple(int(v) for v in self.mp)
        object.__setattr__(self, "mp", mp)
        if not mp or len(mp) % 2 == 0:
            raise ValueError(f"MP arrays have odd length, got {len(mp)}")
        if min(mp) < 0:
            raise ValueError("MP entries are non-negative")

    @property
    def m(self) -> int:
        return len(self.mp)

    def __getitem__(self, c: int) -> int:
        """1-based radius lookup."""
        if c < 1:
            raise IndexError(c)
        return self.mp[c - 1]

    def __len__(self) -> int:
        return len(self.mp)

    def __iter__(self):
        return iter(self.mp)

    def __str__(self) -> str:
        return format_mp(self)


@dataclass(frozen=True)
class ForbiddenPair:
    centre: int
    left: int
    right: int
    effective: bool


@dataclass(frozen=True)
class ConstructResult:
    xs: StarString
    sigma: int
    regular: bool
    fs: tuple[tuple[int, ...], ...]
    centres_evaluated: int
    failure: tuple[int, int] | None
    fallback: bool = False

    def fs_at(self, p: int) -> frozenset:
        """Positions whose characters are forbidden at 1-based position `p`."""
        return frozenset(self.fs[p - 1])


def _as_mp(mp) -> PalindromeArray:
    return mp if isinstance(mp, PalindromeArray) else PalindromeArray(tuple(mp))


def parse_mp(line: str) -> PalindromeArray:
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ValueError(f"MP line must hold integers: {exc}") from None
    return PalindromeArray(tuple(values))


def format_mp(mp) -> str:
    return " ".join(str(v) for v in mp)


# -- x* ---------------------------------------------------------------------

def expand(x: IndetString) -> StarString:
    items: list = [SEP]
    for lt in x.letters:
        items += [lt, SEP]
    return StarString(tuple(items), x.alphabet)


def strip(xs: StarString) -> IndetString:
    return IndetString(xs.letters[1::2], xs.alphabet)


def parse_star(text: str, alphabet: Alphabet | None = None) -> StarString:
    """Parse ``#a#{a,b}#`` style text."""
    text = "".join(text.split())
    parts = text.split(SEP)
    if len(parts) < 3 or parts[0] or parts[-1]:
        raise ParseError("x* must start and end with '#'", 0 if not text.startswith(SEP) else len(text) - 1)
    if alphabet is None:
        alphabet = Alphabet.infer(text.replace(SEP, ""))
    letters = []
    offset = 1
    for part in parts[1:-1]:
        try:
            piece = parse_text(part, alphabet)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at position", 1)[0], offset + exc.position) from None
        if len(piece) != 1:
            raise ParseError("exactly one letter expected between separators", offset)
        letters.append(piece.letters[0])
        offset += len(part) + 1
    return expand(IndetString(tuple(letters), alphabet))


# -- MP computation ---------------------------------------------------------

def _manacher(codes: Sequence[int]) -> list[int]:
    # codes over x*, separators encoded as 0; odd-length palindromes only
    m = len(codes)
    p = [0] * m
    centre = right = 0
    for i in range(m):
        r = min(right - i, p[2 * centre - i]) if i < right else 0
        while i - r - 1 >= 0 and i + r + 1 < m and codes[i - r - 1] == codes[i + r + 1]:
            r += 1
        p[i] = r
        if i + r > right:
            centre, right = i, i + r
    return p


def _expand_centres(letters: Sequence[Letter]) -> list[int]:
    n = len(letters)
    m = 2 * n + 1
    out = []
    for c in range(1, m + 1):
        r = 0
        while True:
            i, j = c - r - 1, c + r + 1
            if i < 1 or j > m:
                break
            if i % 2 == 0 and not letters_match(letters[i // 2 - 1], letters[j // 2 - 1]):
                break
            r += 1
        out.append(r)
    return out


def mp_array(xs: StarString | IndetString) -> PalindromeArray:
    """Maximal palindrome radii of x*.

    Scope-1 input uses Manacher's linear scan.  Otherwise every centre is
    expanded explicitly: with intransitive matching a palindrome's mirror
    image tells nothing about the radius at the mirrored centre.
    """
    if isinstance(xs, IndetString):
        letters = xs.letters
    else:
        letters = xs.letters[1::2]
    if all(lt.is_regular for lt in letters):
        codes = [0]
        for lt in letters:
            codes += [lt.ranks[0], 0]
        return PalindromeArray(tuple(_manacher(codes)))
    return PalindromeArray(tuple(_expand_centres(letters)))


# -- feasibility, forbidden pairs, Manacher's condition ---------------------

def feasibility_violation(mp) -> tuple[str, int] | None:
    """First violated condition as ``(name, j)``, or None when feasible.

    ``"(0)"`` flags a nonzero end entry, ``"(b)"`` a parity error and
    ``"(a)"`` a radius outside its bounds.  Parity is reported first.
    """
    mp = _as_mp(mp)
    m = mp.m
    v = mp.mp
    if v[0] != 0:
        return "(0)", 1
    if v[-1] != 0:
        return "(0)", m
    for j in range(2, m):
        r = v[j - 1]
        if (r % 2 == 1) != (j % 2 == 0):
            return "(b)", j
        if not (1 - j % 2) <= r <= min(j - 1, m - j):
            return "(a)", j
    return None


def is_feasible(mp) -> bool:
    return feasibility_violation(mp) is None


def forbidden_pairs(mp) -> list[ForbiddenPair]:
    mp = _as_mp(mp)
    m = mp.m
    out = []
    for c, r in enumerate(mp.mp, 1):
        i, j = c - r - 1, c + r + 1
        out.append(ForbiddenPair(c, i, j, 0 < i and j < m + 1))
    return out


def _mc(r_l: int, r_r: int, span: int) -> bool:
    # span = r - k
    if r_l != span:
        if r_r != min(r_l, span):
            return False
    elif r_r < r_l:
        return False
    if r_r != span:
        return r_l == min(r_r, span)
    return r_l >= r_r


def manacher_condition(mp, c: int, k: int) -> bool:
    """Check Manacher's condition for centre `c` and range `k`."""
    mp = _as_mp(mp)
    m = mp.m
    if not 1 <= c <= m:
        raise ValueError(f"centre {c} outside 1..{m}")
    r = mp[c]
    if not 1 <= k <= r or c - k < 1 or c + k > m:
        raise ValueError(f"range k={k} invalid for centre {c} with radius {r}")
    return _mc(mp[c - k], mp[c + k], r - k)


def manacher_probes(mp):
    """Yield every in-range probe ``(c, k, holds)``."""
    mp = _as_mp(mp)
    for c in range(1, mp.m + 1):
        for k in range(1, mp[c] + 1):
            yield c, k, _mc(mp[c - k], mp[c + k], mp[c] - k)


# -- reverse engineering ----------------------------------------------------

def _star_from_sets(sets: Sequence, sigma: int) -> StarString:
    alphabet = Alphabet.integers(max(sigma, 1))
    cache: dict = {}
    items: list = []
    for p, s in enumerate(sets, 1):
        if p % 2:
            items.append(SEP)
        else:
            key = frozenset(s)
            lt = cache.get(key)
            if lt is None:
                lt = cache[key] = Letter.of(key)
            items.append(lt)
    return StarString(tuple(items), alphabet)


def _star_from_codes(codes: Sequence[int], sigma: int) -> StarString:
    alphabet = Alphabet.integers(max(sigma, 1))
    letters = [SEP] + [Letter((h,)) for h in range(1, sigma + 1)]
    return StarString(tuple(SEP if p % 2 else letters[codes[p - 1]]
                            for p in range(1, len(codes) + 1)), alphabet)


def any_string_from_mp(mp) -> StarString:
    """Some string, possibly indeterminate, whose MP array is `mp`.

    Every pair of positions that must match inside a palindrome gets its own
    fresh character; leftover positions get one fresh character each.
    """
    mp = _as_mp(mp)
    bad = feasibility_violation(mp)
    if bad:
        raise InfeasibleError(*bad)
    m = mp.m
    sets: list = [None] + [set() for _ in range(m)]
    sigma = 0
    for c in range(3, m - 1):
        r = mp[c]
        if r < 2:
            continue
        for k in range(2 - c % 2, r, 2):
            sigma += 1
            sets[c - k].add(sigma)
            sets[c + k].add(sigma)
    for p in range(2, m, 2):
        if not sets[p]:
            sigma += 1
            sets[p].add(sigma)
    return _star_from_sets(sets[1:], sigma)


def _forbidden_sets(MP, m) -> list:
    # fs[j] = left ends of effective forbidden pairs whose right end is j
    fs: list = [()] * (m + 2)
    for c in range(1, m + 1):
        i, j = c - MP[c] - 1, c + MP[c] + 1
        if 0 < i and j < m + 1:
            fs[j] = fs[j] + (i,)
    return fs


def _greedy_regular(MP, m, fs) -> tuple[list, int]:
    """Lex-least scope-1 candidate: mirror-copy inside palindromes, else least legal."""
    n = (m - 1) // 2
    x = [0] * (m + 2)
    taken = bytearray(n + 2)
    sigma = 0
    reach, owner = 0, 0
    for j in range(1, m + 1):
        if j % 2 == 0:
            if j <= reach:
                x[j] = x[2 * owner - j]
            else:
                marked = [x[i] for i in fs[j]]
                for h in marked:
                    taken[h] = 1
                h = 1
                while taken[h]:
                    h += 1
                for g in marked:
                    taken[g] = 0
                x[j] = h
                sigma = max(sigma, h)
        if j + MP[j] > reach:
            reach, owner = j + MP[j], j
    return x, sigma


def _copy_ok(x, fs, left, right) -> bool:
    # a scope-1 string must repeat x[left] at right; refuse if that clashes
    if right % 2:
        return True
    if x[right]:
        return x[right] == x[left]
    return not any(x[p] & x[left] for p in fs[right])


def _repair_construct(MP, m, strict=False, regular=True):
    """Manacher-driven construction with fresh-character repairs.

    While `regular` holds, centres inside an evaluated palindrome are skipped
    and letters are copied across the centre.  From the first failed probe on
    every centre is evaluated and each pair that must match but does not gets
    a new character added to both letters.  Starting with ``regular=False``
    gives the pure repair construction, whose only shared characters are
    those of required pairs.
    """
    n = (m - 1) // 2
    x: list = [None] * (m + 2)
    for p in range(2, m, 2):
        x[p] = set()
    fs: list = [set() for _ in range(m + 2)]
    empty = [True] * (m + 2)
    empty[1] = empty[2] = False
    sigma = 1
    x[2].add(1)
    failure = None
    taken = bytearray(n + 2)
    evaluated = 0

    def update_fs(c, r):
        if c - r - 1 != 0 and c + r + 1 != m + 1:
            fs[c + r + 1].add(c - r - 1)

    c, lo = 3, 0
    while c <= m - 1:
        evaluated += 1
        r = MP[c]
        if empty[c]:
            empty[c] = False
            update_fs(c, r)
        nextc, nextlo = c + 1, 0
        if r > 1:
            nextc = c + r + 1
            for k in range(r, lo, -1):
                left, right = c - k, c + k
                r_l, r_r = MP[left], MP[right]
                if regular and _mc(r_l, r_r, r - k) and _copy_ok(x, fs, left, right):
                    if empty[right]:
                        empty[right] = False
                        update_fs(right, r_r)
                    if right % 2 == 0 and not x[right]:
                        x[right] = set(x[left])
                    if r_l == r - k and r_r > r_l:
                        nextc, nextlo = right, r - k
                else:
                    if regular:
                        regular = False
                        failure = (c, k)
                    if right % 2 == 0 and x[left].isdisjoint(x[right]):
                        sigma += 1
                        x[left].add(sigma)
                        x[right].add(sigma)
        if c % 2 == 0 and not x[c]:
            if regular:
                marked = [h for p in fs[c] for h in x[p] if h <= n]
                for h in marked:
                    taken[h] = 1
                h = 1
                while taken[h]:
                    h += 1
                for g in marked:
                    taken[g] = 0
                x[c].add(h)
                sigma = max(sigma, h)
            else:
                sigma += 1
                x[c].add(sigma)
        if regular:
            c, lo = nextc, (0 if strict else nextlo)
        else:
            c, lo = c + 1, 0
    return x, sigma, regular, failure, evaluated


def _masks_match_mp(sets, MP, m) -> bool:
    masks = [0] * (m + 2)
    for p in range(2, m, 2):
        for h in sets[p]:
            masks[p] |= 1 << h
    for c in range(1, m + 1):
        r = MP[c]
        for k in range(2 - c % 2, r + 1, 2):
            if not masks[c - k] & masks[c + k]:
                return False
        i, j = c - r - 1, c + r + 1
        if 0 < i and j <= m and masks[i] & masks[j]:
            return False
    return True


def construct(mp, strict: bool = False) -> ConstructResult:
    """Lex-least regular string for `mp` if one exists, else an indeterminate one.

    The regular attempt copies each letter covered by an earlier palindrome
    from its mirror image and gives every other position the least character
    not forbidden by ``FS``; one Manacher scan then confirms it, so a regular
    array costs O(n).

    Otherwise the Manacher-driven repair construction runs: scope-1 copying
    until the first failed probe, then every centre is evaluated and each
    unmatched required pair gets a fresh character on both letters.  If the
    scope-1 prefix it kept already links a forbidden pair, the whole string is
    rebuilt by repairs alone (``fallback=True``).

    ``strict`` makes the repair construction re-check every probe at a
    skipped-to centre instead of only those beyond the overlap.
    """
    mp = _as_mp(mp)
    bad = feasibility_violation(mp)
    if bad:
        raise InfeasibleError(*bad)
    m = mp.m
    MP = (0,) + mp.mp + (0,)
    fs = _forbidden_sets(MP, m)
    fs_out = tuple(fs[1:m + 1])

    y, sigma = _greedy_regular(MP, m, fs)
    codes = [0 if p % 2 else y[p] for p in range(1, m + 1)]
    if _manacher(codes) == list(mp.mp):
        return ConstructResult(_star_from_codes(y[1:m + 1], sigma), sigma, True, fs_out,
                               (m - 1) // 2, None)

    x, sigma, regular, failure, evaluated = _repair_construct(MP, m, strict)
    fallback = regular or not _masks_match_mp(x, MP, m)
    if fallback:
        x, sigma, _, _, more = _repair_construct(MP, m, regular=False)
        evaluated += more
    return ConstructResult(_star_from_sets(x[1:m + 1], sigma), sigma, False, fs_out,
                           evaluated, failure, fallback)
