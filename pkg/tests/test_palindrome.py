import itertools
import random

import pytest

from indet import (Alphabet, InfeasibleError, Letter, PalindromeArray, StarString,
                   any_string_from_mp, construct, expand, feasibility_violation,
                   forbidden_pairs, is_feasible, letters_match, manacher_condition,
                   manacher_probes, mp_array, parse_mp, parse_star, parse_text, strip)
from indet.core import ParseError, format_text
from indet.fuzz import random_feasible_mp, random_regular_mp
from indet.oracles import oracle_mp

AABAC_MP = parse_mp("0 1 2 1 0 3 0 1 0 1 0")
INTRANSITIVE_MP = parse_mp("0 1 0 3 2 1 0")
REGULAR_MP = parse_mp("0 1 0 3 0 1 0 7 0 1 0 3 0 1 0")
SETS_MP = parse_mp("0 1 0 3 0 1 0 7 0 1 0 1 0 1 0")
WIDE_MP = parse_mp("0 1 0 3 2 3 6 3 4 1 2 1 0")


def feasible_arrays(m):
    choices = [range(1 - j % 2, min(j - 1, m - j) + 1, 2) for j in range(2, m)]
    for middle in itertools.product(*choices):
        yield PalindromeArray((0, *middle, 0))


class TestStar:
    @pytest.mark.parametrize("text, star", [
        ("aabac", "#a#a#b#a#c#"), ("a", "#a#"), ("a{a,b}", "#a#{a,b}#"),
    ])
    def test_expand(self, text, star):
        x = parse_text(text)
        assert str(expand(x)) == star
        assert strip(expand(x)) == x

    def test_strip_examples(self):
        assert format_text(strip(parse_star("#a#a#b#a#c#"))) == "aabac"
        assert format_text(strip(parse_star("#a#"))) == "a"
        assert format_text(strip(parse_star("#1#{2,3}#{1,3}#"))) == "1{2,3}{1,3}"

    def test_one_based_access(self):
        xs = parse_star("#a#b#")
        assert xs[1] == "#" and xs[2] == Letter((1,)) and xs[0] is None and xs[6] is None

    @pytest.mark.parametrize("text", ["a#b#", "#ab#", "#a#b", "##", "#{a,b#"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_star(text, Alphabet(("a", "b")))

    def test_constructor_checks_pattern(self):
        with pytest.raises(ValueError):
            StarString((Letter((1,)), "#", Letter((1,))), Alphabet.integers(1))


class TestMpArray:
    @pytest.mark.parametrize("star, mp", [
        ("#a#a#b#a#c#", AABAC_MP), ("#a#{a,b}#c#b#d#", AABAC_MP), ("#1#{2,3}#{1,3}#", INTRANSITIVE_MP),
        ("#a#", parse_mp("0 1 0")),
    ])
    def test_examples(self, star, mp):
        assert mp_array(parse_star(star)) == mp

    def test_accepts_plain_string(self):
        assert mp_array(parse_text("aabac")) == AABAC_MP

    def test_exhaustive_small_against_oracle(self):
        alphabet = Alphabet.integers(2)
        options = [Letter(()), Letter((1,)), Letter((2,)), Letter((1, 2))]
        for n in range(1, 6):
            for combo in itertools.product(options, repeat=n):
                xs = expand(type(parse_text("1", alphabet))(combo, alphabet))
                assert tuple(mp_array(xs)) == oracle_mp(xs)

    def test_scope1_manacher_against_oracle(self):
        rng = random.Random(4)
        alphabet = Alphabet.integers(3)
        for _ in range(300):
            n = rng.randint(1, 30)
            x = type(parse_text("1", alphabet))(
                tuple(Letter((rng.randint(1, 3),)) for _ in range(n)), alphabet)
            assert tuple(mp_array(x)) == oracle_mp(x)


class TestFeasibility:
    def test_examples(self):
        assert is_feasible(AABAC_MP) and is_feasible(INTRANSITIVE_MP)
        assert feasibility_violation(parse_mp("0 2 0")) == ("(b)", 2)

    def test_bound(self):
        assert feasibility_violation(parse_mp("0 3 0")) == ("(a)", 2)
        assert feasibility_violation(parse_mp("0 1 4 1 0")) == ("(a)", 3)

    def test_ends(self):
        assert feasibility_violation(parse_mp("1 1 0")) == ("(0)", 1)

    def test_even_length_rejected(self):
        with pytest.raises(ValueError):
            parse_mp("0 1")

    def test_every_real_string_is_feasible(self):
        rng = random.Random(8)
        for _ in range(200):
            assert is_feasible(random_regular_mp(rng, rng.randint(1, 20)))


class TestForbiddenPairs:
    def test_intransitive_array(self):
        assert [(p.left, p.right) for p in forbidden_pairs(INTRANSITIVE_MP)] == \
            [(0, 2), (0, 4), (2, 4), (0, 8), (2, 8), (4, 8), (6, 8)]

    def test_boundary_only(self):
        pairs = forbidden_pairs(parse_mp("0 1 0"))
        assert [(p.left, p.right) for p in pairs] == [(0, 2), (0, 4), (2, 4)]
        assert not any(p.effective for p in pairs)

    def test_interior_pair_is_effective(self):
        p = forbidden_pairs(AABAC_MP)[5]
        assert (p.centre, p.left, p.right, p.effective) == (6, 2, 10, True)
        xs = parse_star("#a#a#b#a#c#")
        assert not letters_match(xs[2], xs[10])


class TestManacherCondition:
    def test_examples(self):
        assert manacher_condition(INTRANSITIVE_MP, 4, 1) is False
        assert all(manacher_condition(REGULAR_MP, 8, k) for k in range(1, 8))
        assert manacher_condition(SETS_MP, 8, 4) is False

    @pytest.mark.parametrize("c, k", [(0, 1), (8, 1), (4, 4), (4, 0), (1, 1)])
    def test_out_of_range(self, c, k):
        with pytest.raises(ValueError):
            manacher_condition(INTRANSITIVE_MP, c, k)

    def test_probes_decide_regularity(self):
        # an MP array is realizable by a scope-1 string iff every probe holds
        for m in (3, 5, 7, 9, 11):
            for mp in feasible_arrays(m):
                holds = all(ok for _, _, ok in manacher_probes(mp))
                assert holds == construct(mp).regular


class TestAnyString:
    def test_pairs_share_a_fresh_character(self):
        xs = any_string_from_mp(AABAC_MP)
        assert mp_array(xs) == AABAC_MP
        assert letters_match(xs[2], xs[4])
        others = [xs[p] for p in (6, 8, 10)]
        assert all(not letters_match(a, b) for a, b in itertools.combinations(others, 2))

    def test_single(self):
        assert str(any_string_from_mp(parse_mp("0 1 0"))) == "#1#"

    def test_intransitive_array(self):
        assert mp_array(any_string_from_mp(INTRANSITIVE_MP)) == INTRANSITIVE_MP

    def test_infeasible(self):
        with pytest.raises(InfeasibleError) as info:
            any_string_from_mp(parse_mp("0 2 0"))
        assert (info.value.condition, info.value.j) == ("(b)", 2)

    def test_exhaustive_round_trip(self):
        for m in (3, 5, 7, 9, 11, 13):
            for mp in feasible_arrays(m):
                assert mp_array(any_string_from_mp(mp)) == mp


class TestConstruct:
    def test_regular_array(self):
        res = construct(REGULAR_MP)
        assert str(res.xs) == "#1#2#1#3#1#2#1#" and res.regular and res.sigma == 3
        assert [set(res.fs_at(p)) for p in (4, 6, 8, 10, 12, 14)] == \
            [{2}, {4}, {4, 6}, {8}, {8, 10}, {12}]
        assert res.failure is None and not res.fallback

    def test_array_needing_sets(self):
        res = construct(SETS_MP)
        assert str(res.xs) == "#1#{2,3}#{1,4}#5#4#3#1#"
        assert not res.regular and res.sigma == 5 and not res.fallback

    def test_array_with_wide_sets(self):
        res = construct(WIDE_MP)
        assert str(res.xs) == "#{1,5}#{2,3,4,6}#{1,3,7,8,9}#{4,7,10}#{6,8,10,11}#{5,9,11}#"
        assert not res.regular and mp_array(res.xs) == WIDE_MP

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            construct(parse_mp("0 2 0"))

    def test_strict_agrees_on_examples(self):
        for mp in (REGULAR_MP, SETS_MP, WIDE_MP):
            assert mp_array(construct(mp, strict=True).xs) == mp

    def test_exhaustive_round_trip(self):
        for m in (3, 5, 7, 9, 11, 13):
            for mp in feasible_arrays(m):
                res = construct(mp)
                assert mp_array(res.xs) == mp, mp
                if res.regular:
                    assert all(lt.is_regular for lt in strip(res.xs))

    def test_random_larger(self):
        rng = random.Random(21)
        for _ in range(200):
            mp = random_feasible_mp(rng, rng.randrange(15, 61, 2))
            assert mp_array(construct(mp).xs) == mp

    def test_regular_output_is_first_occurrence_canonical(self):
        rng = random.Random(22)
        for _ in range(200):
            res = construct(random_regular_mp(rng, rng.randint(1, 40), 4))
            assert res.regular
            seen = 0
            for lt in strip(res.xs):
                assert lt.ranks[0] <= seen + 1
                seen = max(seen, lt.ranks[0])
