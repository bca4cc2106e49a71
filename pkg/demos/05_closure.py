"""Closing a match relation under transitivity.

When a string is not regular, the transitive closure of its match matrix
shows which letters the intransitive triples glue together.
"""
from indet import build_match_matrix, parse_text, reduce, transitive_closure

x = parse_text("1{2,3}{1,3}4")
xr = reduce(x)
M = build_match_matrix(xr)
print(M.bits.astype(int))
print("classes:", transitive_closure(M).classes())
