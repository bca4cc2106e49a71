"""Letters, strings, matching and the integer-code byte encoding.

A letter is a nonempty set of alphabet characters, stored in normal form as a
strictly ascending tuple of 1-based character ranks.  The don't-care (hole) is
the letter with no explicit ranks; it matches everything.

Text syntax::

    a{a,c}b{a,d}bb      regular letters are single characters
    {a,c}               indeterminate letter
    *                   don't-care

Alphabet symbols longer than one character (e.g. ``10`` in an integer
alphabet) can only be written inside braces; ``{10}`` parses as the regular
letter ``10``.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Alphabet", "Letter", "DONT_CARE", "IndetString", "RegularWitness",
    "ParseError", "CapacityError", "DecodeError",
    "parse_text", "format_letter", "format_text", "letters_match",
    "string_scope", "encode", "decode", "to_bytes", "from_bytes",
]

RESERVED = frozenset("{},*#")
MAGIC = b"IDS1"


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CapacityError(ValueError):
    pass


class DecodeError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet; rank of ``characters[i]`` is ``i + 1``.

    ``sigma_star`` defaults to every code left over after the don't-care and
    the regular letters, i.e. ``2**code_width_bits - 1 - sigma``.
    """

    characters: tuple[str, ...]
    code_width_bits: int = 8
    sigma_star: int | None = None
    _rank: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        chars = tuple(self.characters)
        object.__setattr__(self, "characters", chars)
        if not chars:
            raise ValueError("alphabet must be nonempty")
        if len(set(chars)) != len(chars):
            raise ValueError("alphabet characters must be distinct")
        for ch in chars:
            if not ch or set(ch) & RESERVED or ch != ch.strip():
                raise ValueError(f"invalid alphabet symbol {ch!r}")
        if self.code_width_bits < 1:
            raise ValueError("code width must be positive")
        room = (1 << self.code_width_bits) - 1 - len(chars)
        if room < 0:
            raise CapacityError(
                f"{len(chars)} characters do not fit in {self.code_width_bits}-bit codes")
        if self.sigma_star is None:
            object.__setattr__(self, "sigma_star", room)
        elif not 0 <= self.sigma_star <= room:
            raise CapacityError(
                f"sigma_star={self.sigma_star} exceeds the {room} free "
                f"{self.code_width_bits}-bit codes")
        object.__setattr__(self, "_rank", {ch: i + 1 for i, ch in enumerate(chars)})

    @property
    def sigma(self) -> int:
        return len(self.characters)

    def rank(self, ch: str) -> int:
        return self._rank[ch]

    def __contains__(self, ch) -> bool:
        return ch in self._rank

    @classmethod
    def dna(cls) -> "Alphabet":
        # a half byte covers 0, the 4 bases and all 11 multi-base letters
        return cls(("a", "c", "g", "t"), code_width_bits=4)

    @classmethod
    def integers(cls, sigma: int, code_width_bits: int | None = None) -> "Alphabet":
        """The integer alphabet 1..sigma, widening codes until they fit."""
        if code_width_bits is None:
            code_width_bits = 8
            while (1 << code_width_bits) <= sigma:
                code_width_bits *= 2
        return cls(tuple(str(i) for i in range(1, sigma + 1)), code_width_bits)

    @classmethod
    def infer(cls, text: str) -> "Alphabet":
        """Alphabet of every symbol used in `text`, numeric symbols sorted as integers."""
        symbols: set[str] = set()
        depth = 0
        token = ""
        for ch in text:
            if ch == "{":
                depth, token = 1, ""
            elif ch == "}":
                symbols.add(token.strip())
                depth = 0
            elif depth:
                if ch == ",":
                    symbols.add(token.strip())
                    token = ""
                else:
                    token += ch
            elif ch not in RESERVED and not ch.isspace():
                symbols.add(ch)
        symbols.discard("")
        if not symbols:
            symbols = {"a"}
        if all(s.isdigit() for s in symbols):
            ordered = sorted(symbols, key=int)
        else:
            ordered = sorted(symbols)
        width = 8
        while (1 << width) <= len(ordered):
            width *= 2
        return cls(tuple(ordered), code_width_bits=width)


@dataclass(frozen=True, order=True)
class Letter:
    """A letter in normal form; ``ranks == ()`` is the don't-care."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        r = tuple(self.ranks)
        object.__setattr__(self, "ranks", r)
        if any(b <= a for a, b in zip(r, r[1:])):
            raise ValueError(f"letter ranks must be strictly ascending: {r}")
        if r and r[0] < 1:
            raise ValueError("ranks are 1-based")

    @classmethod
    def of(cls, ranks: Iterable[int]) -> "Letter":
        s = set(ranks)
        if not s:
            raise ValueError("a letter needs at least one character")
        return cls(tuple(sorted(s)))

    @property
    def is_dont_care(self) -> bool:
        return not self.ranks

    @property
    def is_regular(self) -> bool:
        return len(self.ranks) == 1

    def scope(self, sigma: int) -> int:
        return len(self.ranks) if self.ranks else sigma


DONT_CARE = Letter(())


def letters_match(l1: Letter, l2: Letter) -> bool:
    """True iff the character sets intersect; the don't-care matches anything."""
    a, b = l1.ranks, l2.ranks
    if not a or not b:
        return True
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return True
        if a[i] < b[j]:
            i += 1
        else:
            j += 1
    return False


@dataclass(frozen=True)
class IndetString:
    letters: tuple[Letter, ...]
    alphabet: Alphabet

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("strings must have length n >= 1")
        sigma = self.alphabet.sigma
        for lt in letters:
            if lt.ranks and lt.ranks[-1] > sigma:
                raise ValueError(f"rank {lt.ranks[-1]} outside alphabet of size {sigma}")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_text(self)

    @property
    def scope(self) -> int:
        return string_scope(self)

    @cached_property
    def _encoded(self):
        return encode(self)

    @property
    def codes(self) -> tuple[int, ...]:
        return self._encoded[0]

    @property
    def i_table(self) -> tuple[tuple[int, int], ...]:
        return self._encoded[1]

    @property
    def l_pool(self) -> tuple[int, ...]:
        return self._encoded[2]


@dataclass(frozen=True)
class RegularWitness:
    """Scope-1 string over 1..sigma_prime in first-occurrence canonical form."""

    y: tuple[int, ...]
    sigma_prime: int

    def __post_init__(self):
        top = 0
        for v in self.y:
            if v < 1 or v > top + 1:
                raise ValueError(f"{self.y} is not in first-occurrence form")
            top = max(top, v)
        if top != self.sigma_prime:
            raise ValueError("sigma_prime must equal max(y)")


# -- text format ------------------------------------------------------------

def parse_text(text: str, alphabet: Alphabet | None = None) -> IndetString:
    """Parse the brace syntax into an IndetString.

    With no alphabet, one is inferred from the symbols used.
    """
    if alphabet is None:
        alphabet = Alphabet.infer(text)
    letters = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "*":
            letters.append(DONT_CARE)
            i += 1
        elif ch == "{":
            end = text.find("}", i + 1)
            nested = text.find("{", i + 1)
            if end < 0 or (0 <= nested < end):
                raise ParseError("unbalanced '{'", i)
            body = text[i + 1:end]
            if not body.strip():
                raise ParseError("empty letter {}", i)
            ranks = []
            offset = i + 1
            for tok in body.split(","):
                sym = tok.strip()
                if sym not in alphabet:
                    raise ParseError(f"unknown character {sym!r}", offset)
                ranks.append(alphabet.rank(sym))
                offset += len(tok) + 1
            if len(set(ranks)) != len(ranks):
                raise ParseError("repeated character inside braces", i)
            letters.append(Letter.of(ranks))
            i = end + 1
        elif ch in "},":
            raise ParseError(f"unexpected {ch!r}", i)
        elif ch == "#":
            raise ParseError("'#' is reserved for separator strings", i)
        else:
            if ch not in alphabet:
                raise ParseError(f"unknown character {ch!r}", i)
            letters.append(Letter((alphabet.rank(ch),)))
            i += 1
    if not letters:
        raise ParseError("empty string", 0)
    return IndetString(tuple(letters), alphabet)


def format_letter(letter: Letter, alphabet: Alphabet) -> str:
    if letter.is_dont_care:
        return "*"
    syms = [alphabet.characters[r - 1] for r in letter.ranks]
    if len(syms) == 1 and len(syms[0]) == 1:
        return syms[0]
    return "{" + ",".join(syms) + "}"


def format_text(x: IndetString) -> str:
    return "".join(format_letter(lt, x.alphabet) for lt in x.letters)


def string_scope(x: IndetString) -> int:
    sigma = x.alphabet.sigma
    return max(lt.scope(sigma) for lt in x.letters)


# -- integer codes ----------------------------------------------------------

def encode(x: IndetString):
    """Integer codes plus the ``I`` (scope, loc) table and ``L`` rank pool.

    Indeterminate letters get codes sigma+1, sigma+2, ... in order of first
    occurrence; ``loc`` is 1-based into ``L``.
    """
    sigma = x.alphabet.sigma
    slot: dict[Letter, int] = {}
    codes, i_table, l_pool = [], [], []
    for lt in x.letters:
        if lt.is_dont_care:
            codes.append(0)
        elif lt.is_regular:
            codes.append(lt.ranks[0])
        else:
            code = slot.get(lt)
            if code is None:
                if len(slot) >= x.alphabet.sigma_star:
                    raise CapacityError(
                        f"more than sigma_star={x.alphabet.sigma_star} distinct "
                        "indeterminate letters")
                code = slot[lt] = sigma + len(slot) + 1
                i_table.append((len(lt.ranks), len(l_pool) + 1))
                l_pool.extend(lt.ranks)
            codes.append(code)
    return tuple(codes), tuple(i_table), tuple(l_pool)


def decode(codes: Sequence[int], i_table: Sequence[tuple[int, int]],
           l_pool: Sequence[int], alphabet: Alphabet) -> IndetString:
    sigma = alphabet.sigma
    if len(i_table) > alphabet.sigma_star:
        raise DecodeError("I table larger than sigma_star")
    table = []
    for idx, (scope, loc) in enumerate(i_table, 1):
        if scope < 2 or loc < 1 or loc + scope - 1 > len(l_pool):
            raise DecodeError(f"I[{idx}]=({scope},{loc}) does not fit in L")
        seg = tuple(l_pool[loc - 1:loc - 1 + scope])
        if any(r < 1 or r > sigma for r in seg) or any(b <= a for a, b in zip(seg, seg[1:])):
            raise DecodeError(f"L segment for I[{idx}] is not strictly ascending in 1..{sigma}")
        table.append(Letter(seg))
    letters = []
    for pos, code in enumerate(codes, 1):
        if code == 0:
            letters.append(DONT_CARE)
        elif 1 <= code <= sigma:
            letters.append(Letter((code,)))
        elif sigma < code <= sigma + len(table):
            letters.append(table[code - sigma - 1])
        else:
            raise DecodeError(f"dangling code {code} at position {pos}")
    if not letters:
        raise DecodeError("no codes")
    return IndetString(tuple(letters), alphabet)


# -- binary file format -----------------------------------------------------

def _pack(values: Sequence[int], width: int) -> bytes:
    acc = 0
    for v in values:
        if v >> width:
            raise CapacityError(f"value {v} does not fit in {width} bits")
        acc = (acc << width) | v
    nbits = width * len(values)
    pad = -nbits % 8
    return (acc << pad).to_bytes((nbits + pad) // 8, "big")


def _unpack(data: bytes, width: int, count: int) -> list[int]:
    nbits = width * count
    nbytes = (nbits + 7) // 8
    if len(data) < nbytes:
        raise DecodeError("truncated packed field")
    acc = int.from_bytes(data[:nbytes], "big") >> (nbytes * 8 - nbits)
    mask = (1 << width) - 1
    return [(acc >> (width * (count - 1 - i))) & mask for i in range(count)]


def to_bytes(x: IndetString) -> bytes:
    """Serialize to the binary layout described in ``docs/binary_format.md``."""
    a = x.alphabet
    codes, i_table, l_pool = x.codes, x.i_table, x.l_pool
    chars = ",".join(a.characters).encode()
    out = [MAGIC, struct.pack(">BHHI", a.code_width_bits, a.sigma, a.sigma_star, len(chars)),
           chars, struct.pack(">III", len(i_table), len(l_pool), len(codes))]
    for scope, loc in i_table:
        out.append(struct.pack(">II", scope, loc))
    out.append(_pack(l_pool, a.code_width_bits))
    out.append(_pack(codes, a.code_width_bits))
    return b"".join(out)


def from_bytes(data: bytes) -> IndetString:
    if data[:4] != MAGIC:
        raise DecodeError("bad magic")
    try:
        width, sigma, sigma_star, clen = struct.unpack_from(">BHHI", data, 4)
        pos = 4 + 9
        chars = data[pos:pos + clen].decode()
        pos += clen
        n_i, n_l, n = struct.unpack_from(">III", data, pos)
        pos += 12
        i_table = []
        for _ in range(n_i):
            i_table.append(struct.unpack_from(">II", data, pos))
            pos += 8
    except (struct.error, UnicodeDecodeError) as exc:
        raise DecodeError(f"malformed header: {exc}") from None
    alphabet = Alphabet(tuple(chars.split(",")), width, sigma_star)
    if alphabet.sigma != sigma:
        raise DecodeError("alphabet length disagrees with header")
    l_bytes = (width * n_l + 7) // 8
    l_pool = _unpack(data[pos:], width, n_l)
    pos += l_bytes
    codes = _unpack(data[pos:], width, n)
    if len(data) != pos + (width * n + 7) // 8:
        raise DecodeError("trailing bytes")
    return decode(codes, i_table, l_pool, alphabet)
