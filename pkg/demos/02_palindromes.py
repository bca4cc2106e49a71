"""Palindrome arrays, forwards and backwards.

mp_array gives the radius of the maximal palindrome at every centre of
#x1#x2#...#xn#.  construct goes the other way: it builds the least string
with a given array, and says whether an ordinary string can do the job.
"""
from indet import construct, mp_array, parse_mp, parse_star, parse_text

print("aabac            ->", mp_array(parse_text("aabac")))
# an indeterminate twin with the same array
print("#a#{a,b}#c#b#d#  ->", mp_array(parse_star("#a#{a,b}#c#b#d#")))

for line in ["0 1 0 3 0 1 0 7 0 1 0 3 0 1 0", "0 1 0 3 0 1 0 7 0 1 0 1 0 1 0"]:
    res = construct(parse_mp(line))
    kind = "regular" if res.regular else "needs letter sets"
    print(f"{line}  ->  {res.xs}  ({kind}, {res.sigma} characters)")
    assert mp_array(res.xs) == parse_mp(line)
