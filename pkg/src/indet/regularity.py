"""Regularity testing under the transitive-triples definition.

A string is regular when its match relation is transitive, i.e. the positions
split into cliques of mutually matching letters.  Only the ``m`` distinct
letters matter, so the work is one linear scan to reduce ``x`` plus an
``O(m^2)`` pass over the reduced string.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import IndetString, Letter, RegularWitness, letters_match

__all__ = [
    "ReducedString", "MatchMatrix", "Partition", "InvalidMatrixError",
    "reduce", "regular_min", "build_match_matrix", "regular_min_matrix",
    "regular_check", "quick_screen", "transitive_closure",
]


class InvalidMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class ReducedString:
    """Distinct letters in first-occurrence order and the 1-based map back."""

    letters_r: tuple[Letter, ...]
    pos_map: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.letters_r)


class MatchMatrix:
    """Reflexive symmetric boolean matrix, validated on construction."""

    def __init__(self, bits):
        a = np.asarray(bits)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise InvalidMatrixError(f"expected a nonempty square matrix, got shape {a.shape}")
        if a.dtype != bool:
            if not np.isin(a, (0, 1)).all():
                raise InvalidMatrixError("entries must be 0/1")
            a = a.astype(bool)
        if not a.diagonal().all():
            raise InvalidMatrixError("matrix is not reflexive")
        if not (a == a.T).all():
            raise InvalidMatrixError("matrix is not symmetric")
        a = a.copy()
        a.setflags(write=False)
        self.bits = a

    @property
    def m(self) -> int:
        return self.bits.shape[0]

    def __eq__(self, other):
        return isinstance(other, MatchMatrix) and np.array_equal(self.bits, other.bits)

    def __repr__(self):
        rows = ",".join("".join("1" if b else "0" for b in row) for row in self.bits)
        return f"MatchMatrix({rows})"


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.class_of, default=0)

    def classes(self) -> list[list[int]]:
        """Members of each class, 1-based item indices."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, c in enumerate(self.class_of, 1):
            out[c - 1].append(i)
        return out


def reduce(x: IndetString) -> ReducedString:
    index: dict[Letter, int] = {}
    letters_r = []
    pos_map = []
    for lt in x.letters:
        p = index.get(lt)
        if p is None:
            letters_r.append(lt)
            p = index[lt] = len(letters_r)
        pos_map.append(p)
    return ReducedString(tuple(letters_r), tuple(pos_map))


def _regular_min(m: int, match) -> RegularWitness | None:
    # match(i, j) over 0-based indices; y == 0 means unassigned
    y = [0] * m
    sigma = 0
    for i in range(m):
        if y[i] == 0:
            sigma += 1
            y[i] = sigma
            for j in range(i + 1, m):
                if match(i, j):
                    if y[j] == 0:
                        y[j] = sigma
                    else:
                        return None
        else:
            for j in range(i + 1, m):
                if y[j] == y[i]:
                    if not match(i, j):
                        return None
                elif match(i, j):
                    return None
    return RegularWitness(tuple(y), sigma)


def regular_min(xr: ReducedString) -> tuple[bool, RegularWitness | None]:
    """Transitivity test on the reduced string, emitting the canonical witness.

    Exits on the first violated class condition.
    """
    letters = xr.letters_r
    w = _regular_min(len(letters), lambda i, j: letters_match(letters[i], letters[j]))
    return w is not None, w


def build_match_matrix(xr: ReducedString) -> MatchMatrix:
    m = xr.m
    bits = np.eye(m, dtype=bool)
    letters = xr.letters_r
    for i in range(m):
        for j in range(i + 1, m):
            if letters_match(letters[i], letters[j]):
                bits[i, j] = bits[j, i] = True
    return MatchMatrix(bits)


def regular_min_matrix(M: MatchMatrix) -> tuple[bool, RegularWitness | None]:
    """Same contract as :func:`regular_min`, reading matches from the matrix."""
    if not isinstance(M, MatchMatrix):
        M = MatchMatrix(M)
    rows = M.bits.tolist()
    w = _regular_min(M.m, lambda i, j: rows[i][j])
    return w is not None, w


def regular_check(x: IndetString) -> tuple[bool, RegularWitness | None]:
    """Decide regularity of `x`; when regular also return the lex-least scope-1 twin."""
    if all(lt.is_regular for lt in x.letters):
        relabel: dict[Letter, int] = {}
        y = tuple(relabel.setdefault(lt, len(relabel) + 1) for lt in x.letters)
        return True, RegularWitness(y, len(relabel))
    xr = reduce(x)
    ok, wr = regular_min(xr)
    if not ok:
        return False, None
    yr = wr.y
    return True, RegularWitness(tuple(yr[p - 1] for p in xr.pos_map), wr.sigma_prime)


def quick_screen(x: IndetString) -> Literal["indeterminate"] | None:
    """Cheap sufficient conditions for indeterminacy; never claims regular.

    Fires when the string holds
      * every regular letter of the alphabet and some indeterminate letter,
      * a don't-care and at least two distinct regular letters, or
      * an indeterminate letter together with two of its characters as
        regular letters.
    """
    sigma = x.alphabet.sigma
    regular = [False] * (sigma + 1)
    n_regular = 0
    hole = False
    indets: set[Letter] = set()
    for lt in x.letters:
        if lt.is_dont_care:
            hole = True
        elif lt.is_regular:
            r = lt.ranks[0]
            if not regular[r]:
                regular[r] = True
                n_regular += 1
        else:
            indets.add(lt)
    if indets and n_regular == sigma:
        return "indeterminate"
    if hole and n_regular >= 2:
        return "indeterminate"
    for lt in indets:
        if sum(regular[r] for r in lt.ranks) >= 2:
            return "indeterminate"
    return None


def transitive_closure(M: MatchMatrix) -> Partition:
    """Classes of the transitive closure of a reflexive symmetric relation.

    For such relations the closure's classes are the connected components of
    the match graph; each row is scanned once, so the cost is O(m^2).
    """
    if not isinstance(M, MatchMatrix):
        M = MatchMatrix(M)
    m = M.m
    class_of = [0] * m
    k = 0
    for s in range(m):
        if class_of[s]:
            continue
        k += 1
        class_of[s] = k
        stack = [s]
        while stack:
            i = stack.pop()
            for j in np.flatnonzero(M.bits[i]):
                if not class_of[j]:
                    class_of[j] = k
                    stack.append(int(j))
    return Partition(tuple(class_of))
