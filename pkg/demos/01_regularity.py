"""Is an indeterminate string secretly regular?

A string over letter *sets* can still behave like an ordinary string: it does
whenever its match relation is transitive.  regular_check decides this and
returns the lexicographically least ordinary string with the same matches.
"""
from indet import parse_text, quick_screen, regular_check

for text in ["a{a,c}b{a,d}bb", "{a,b}{b,c}{a,c}", "a{a,c}c", "a*b"]:
    x = parse_text(text)
    ok, witness = regular_check(x)
    if ok:
        print(f"{text:18} regular, behaves like {witness.y}")
    else:
        # the screen is a cheap sufficient test; it never claims regularity
        print(f"{text:18} indeterminate (quick screen: {quick_screen(x)})")
