"""Which integer arrays are palindrome arrays at all?

Bounds and parity are necessary and sufficient once letter sets are allowed.
Ordinary strings also need Manacher's consistency condition to hold at
every centre.
"""
from indet import any_string_from_mp, feasibility_violation, manacher_probes, parse_mp

for line in ["0 2 0", "0 1 4 1 0", "0 1 0 3 2 1 0"]:
    mp = parse_mp(line)
    bad = feasibility_violation(mp)
    if bad:
        print(f"{line:15} infeasible: condition {bad[0]} at j={bad[1]}")
        continue
    failing = [(c, k) for c, k, ok in manacher_probes(mp) if not ok]
    print(f"{line:15} feasible, e.g. {any_string_from_mp(mp)}; "
          f"failing Manacher probes: {failing or 'none'}")
