import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indet import (DONT_CARE, Alphabet, CapacityError, DecodeError, IndetString, Letter,
                   ParseError, decode, encode, format_text, from_bytes, letters_match,
                   parse_text, string_scope, to_bytes)

ABCD = Alphabet(("a", "b", "c", "d"))
DNA = Alphabet.dna()
DNA_TEXT = "aac{a,c}gta{g,t}{a,c}{g,t}"


def L(*ranks):
    return Letter.of(ranks)


class TestParse:
    def test_running_example(self):
        x = parse_text("a{a,c}b{a,d}bb", ABCD)
        assert len(x) == 6
        assert [lt.is_regular for lt in x] == [True, False, True, False, True, True]
        assert string_scope(x) == 2

    def test_all_regular(self):
        x = parse_text("aaa")
        assert all(lt.is_regular for lt in x) and x.scope == 1

    def test_normal_form_sorts(self):
        x = parse_text("a{c,a}b", ABCD)
        assert x[1] == L(1, 3)
        assert format_text(x) == "a{a,c}b"

    def test_singleton_braces_become_regular(self):
        assert parse_text("{a}b", ABCD).letters == parse_text("ab", ABCD).letters

    def test_dont_care(self):
        x = parse_text("a*b", ABCD)
        assert x[1] == DONT_CARE and x[1].is_dont_care
        assert x[1].scope(ABCD.sigma) == 4

    @pytest.mark.parametrize("text, pos", [
        ("a{}b", 1), ("a{a,c", 1), ("ab}", 2), ("az", 1), ("{a,a}", 0),
        ("a{a,{c}}", 1), ("a#b", 1), ("", 0),
    ])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_text(text, ABCD)
        assert info.value.position == pos

    def test_inferred_integer_alphabet_orders_numerically(self):
        x = parse_text("1{2,10}")
        assert x.alphabet.characters[-1] == "10"
        assert format_text(x) == "1{2,10}"

    def test_multichar_regular_symbol_formats_in_braces(self):
        x = parse_text("{10}1{2,3}", Alphabet.integers(10))
        assert format_text(x) == "{10}1{2,3}"
        assert parse_text(format_text(x), x.alphabet) == x


class TestLetters:
    @pytest.mark.parametrize("a, b, want", [
        (L(1, 2), L(2, 3), True), (L(1), L(2), False), (DONT_CARE, L(3), True),
        (L(1, 3, 5), L(2, 4, 6), False), (DONT_CARE, DONT_CARE, True),
    ])
    def test_match(self, a, b, want):
        assert letters_match(a, b) is want
        assert letters_match(b, a) is want

    def test_scope_of_three_set(self):
        assert string_scope(parse_text("{a,c,g}", DNA)) == 3

    def test_rejects_unsorted_ranks(self):
        with pytest.raises(ValueError):
            Letter((2, 1))

    def test_rejects_empty_string(self):
        with pytest.raises(ValueError):
            IndetString((), ABCD)


class TestEncoding:
    def test_dna_example(self):
        codes, i_table, l_pool = encode(parse_text(DNA_TEXT, DNA))
        assert codes == (1, 1, 2, 5, 3, 4, 1, 6, 5, 6)
        assert i_table == ((2, 1), (2, 3))
        assert l_pool == (1, 2, 3, 4)
        # four-bit codes, read as hex digits
        assert "".join(f"{c:x}" for c in codes) == "1125341656"

    def test_all_regular(self):
        assert encode(parse_text("acgt", DNA)) == ((1, 2, 3, 4), (), ())

    def test_hole_is_code_zero(self):
        assert encode(parse_text("*", DNA))[0] == (0,)

    def test_decode_examples(self):
        x = parse_text(DNA_TEXT, DNA)
        assert decode(*encode(x), DNA) == x
        assert format_text(decode([1, 1, 1], [], [], DNA)) == "aaa"
        assert format_text(decode([5], [(2, 1)], [1, 2], DNA)) == "{a,c}"

    @pytest.mark.parametrize("codes, i_table, l_pool", [
        ([6], [(2, 1)], [1, 2]),          # dangling
        ([5], [(2, 1)], [2, 1]),          # ill-sorted segment
        ([5], [(2, 2)], [1, 2]),          # runs off the pool
        ([5], [(1, 1)], [1]),             # scope 1 is not indeterminate
        ([9], [], []),
    ])
    def test_decode_errors(self, codes, i_table, l_pool):
        with pytest.raises(DecodeError):
            decode(codes, i_table, l_pool, DNA)

    def test_capacity(self):
        small = Alphabet(("a", "b", "c"), code_width_bits=8, sigma_star=1)
        encode(parse_text("{a,b}{a,b}", small))
        with pytest.raises(CapacityError):
            encode(parse_text("{a,b}{b,c}", small))

    def test_dna_preset_fills_the_half_byte(self):
        assert DNA.code_width_bits == 4 and DNA.sigma_star == 11
        with pytest.raises(CapacityError):
            Alphabet(("a", "c", "g", "t"), 4, 12)

    def test_integer_alphabet_widens(self):
        assert Alphabet.integers(255).code_width_bits == 8
        assert Alphabet.integers(256).code_width_bits == 16


class TestBinary:
    def test_round_trip_dna(self):
        x = parse_text(DNA_TEXT, DNA)
        data = to_bytes(x)
        assert from_bytes(data) == x
        # 10 four-bit codes occupy 5 bytes at the tail
        assert data[-5:] == bytes.fromhex("1125341656")

    def test_bad_magic(self):
        with pytest.raises(DecodeError):
            from_bytes(b"XXXX" + to_bytes(parse_text("a", DNA))[4:])

    def test_truncated(self):
        data = to_bytes(parse_text(DNA_TEXT, DNA))
        with pytest.raises(DecodeError):
            from_bytes(data[:-1])

    def test_trailing(self):
        with pytest.raises(DecodeError):
            from_bytes(to_bytes(parse_text("acgt", DNA)) + b"\0")


def letters_strategy(sigma):
    subsets = st.sets(st.integers(1, sigma), min_size=0, max_size=sigma)
    return st.lists(subsets.map(lambda s: Letter(tuple(sorted(s)))), min_size=1, max_size=20)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda s: st.tuples(st.just(s), letters_strategy(s))))
def test_text_codes_and_bytes_round_trip(case):
    sigma, letters = case
    alphabet = Alphabet(tuple("abcdef"[:sigma]))
    x = IndetString(tuple(letters), alphabet)
    assert parse_text(format_text(x), alphabet) == x
    assert decode(*encode(x), alphabet) == x
    assert from_bytes(to_bytes(x)) == x
