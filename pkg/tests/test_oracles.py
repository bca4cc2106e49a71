import pytest

from indet import Alphabet, parse_star, parse_text
from indet.oracles import (oracle_closure, oracle_is_regular, oracle_lex_least,
                           oracle_lex_least_by_mp, oracle_mp)

INT3 = Alphabet.integers(3)


def test_is_regular_examples():
    assert oracle_is_regular(parse_text("a{a,c}b{a,d}bb"))
    assert not oracle_is_regular(parse_text("1{2,3}{1,3}", INT3))
    assert oracle_is_regular(parse_text("aaa"))


@pytest.mark.parametrize("star, mp", [
    ("#a#a#b#a#c#", (0, 1, 2, 1, 0, 3, 0, 1, 0, 1, 0)),
    ("#a#", (0, 1, 0)),
    ("#1#{2,3}#{1,3}#", (0, 1, 0, 3, 2, 1, 0)),
])
def test_mp_examples(star, mp):
    assert oracle_mp(parse_star(star)) == mp


def test_lex_least_examples():
    assert oracle_lex_least(parse_text("{a,b}{b,c}{a,c}")).y == (1, 1, 1)
    assert oracle_lex_least(parse_text("abc")).y == (1, 2, 3)
    assert oracle_lex_least(parse_text("a{a,c}b{a,d}bb")).y == (1, 1, 2, 1, 2, 2)


def test_lex_least_preconditions():
    with pytest.raises(ValueError):
        oracle_lex_least(parse_text("a{a,c}c"))
    with pytest.raises(ValueError):
        oracle_lex_least(parse_text("abcdefg"))


def test_lex_least_by_mp_small():
    table = oracle_lex_least_by_mp(2)
    assert table == {(0, 1, 2, 1, 0): (1, 1), (0, 1, 0, 1, 0): (1, 2)}


def test_closure():
    assert oracle_closure([[1, 0, 1], [0, 1, 0], [1, 0, 1]]) == (1, 2, 1)
