"""Regular and indeterminate strings: letter encoding, regularity testing,
transitive closure of match relations, and palindrome-array reverse engineering."""
from .core import (DONT_CARE, Alphabet, CapacityError, DecodeError, IndetString,
                   Letter, ParseError, RegularWitness, decode, encode, format_text,
                   from_bytes, letters_match, parse_text, string_scope, to_bytes)
from .palindrome import (ConstructResult, ForbiddenPair, InfeasibleError,
                         PalindromeArray, StarString, any_string_from_mp, construct,
                         expand, feasibility_violation, forbidden_pairs, is_feasible,
                         manacher_condition, manacher_probes, mp_array, parse_mp,
                         parse_star, strip)
from .regularity import (InvalidMatrixError, MatchMatrix, Partition, ReducedString,
                         build_match_matrix, quick_screen, reduce, regular_check,
                         regular_min, regular_min_matrix, transitive_closure)

__version__ = "0.1.0"
