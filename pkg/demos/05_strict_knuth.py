"""Strict Knuth moves and bounded equivalence search: the repeated inverse
word of a permutation can be carried onto its descent-driven sequence by
finitely many strict moves, one truncation at a time.
"""

from taquin import (
    bounded_equivalence,
    descent_sequence,
    elementary_knuth,
    inverse_word_sequence,
    parse_permutation,
    prefix_terms,
    strict_knuth,
)

word = (2, 4, 1, 3, 2, 4)
print("word:", word)
for k in range(1, len(word) - 1):
    print(f"  strict move at {k}:", strict_knuth(word, k))
    print(f"  classical move at {k}:", elementary_knuth(word, k))
print()

w = parse_permutation("3142")
a = inverse_word_sequence(w)
b = descent_sequence(w)
print("periodic inverse word:", prefix_terms(a, 12))
print("descent sequence:     ", prefix_terms(b, 12))
for n in (2, 4, 6):
    verdict = bounded_equivalence(a, b, n, budget=500_000, slack=6)
    print(f"match first {n} terms: {verdict.status}, moves {verdict.witness}, explored {verdict.explored}")
