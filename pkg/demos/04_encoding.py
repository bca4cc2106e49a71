"""Compact integer codes for strings over letter sets.

Regular letters keep their rank, the don't-care is 0, and each distinct set
gets the next free code with its members stored once in a shared pool.
"""
from indet import Alphabet, from_bytes, parse_text, to_bytes

x = parse_text("aac{a,c}gta{g,t}{a,c}{g,t}", Alphabet.dna())
print("codes", x.codes)
print("I    ", x.i_table)
print("L    ", x.l_pool)
data = to_bytes(x)
print(f"{len(data)} bytes, codes as hex: {data[-5:].hex()}")
assert from_bytes(data) == x
