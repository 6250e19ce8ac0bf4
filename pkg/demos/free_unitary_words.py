"""Walk through the free unitary side: words, fusion, character forms.

Irreducibles are indexed by words over 'a'/'b'.  Conjugation reverses a word
and swaps the letters; tensor products decompose over suffix/prefix
cancellations; and every character factorizes as an alternating product of
circle powers and orthogonal characters, computable two independent ways.
"""

from freeqg import (
    all_words,
    alternating_form,
    char_expand_oracle,
    dim_unitary,
    dim_unitary_recursive,
    fuse_unitary,
    involution,
)

print("The involution reverses and swaps letters")
for w in ["", "a", "ab", "aab", "abba"]:
    print(f"  {w or 'e':>5}  ->  {involution(w) or 'e'}")

print("\nFusion by suffix/prefix cancellation")
for g, h in [("a", "b"), ("a", "a"), ("ab", "ba"), ("aab", "abb")]:
    terms = {term or "e": mult for term, mult in fuse_unitary(g, h).items()}
    print(f"  {g} (x) {h}  ->  {terms}")

print("\nAlternating character forms (run rule vs expansion oracle)")
for w in ["a", "ab", "ba", "aa", "bb", "aab", "abba", "aabbab"]:
    form = alternating_form(w)
    assert form == char_expand_oracle(w)
    print(f"  {w:>7}: eps = {form.eps}, blocks = {form.blocks}")

print("\nBoth dimension routes agree; involution preserves dimension")
N = 3
for w in ["ab", "aa", "aba", "abab", "aabba"]:
    block_product = dim_unitary(w, N)
    recursion = dim_unitary_recursive(w, N)
    print(f"  d({w}) at N={N}: block product {block_product}, recursion {recursion}, "
          f"conjugate {dim_unitary(involution(w), N)}")
    assert block_product == recursion == dim_unitary(involution(w), N)

total = sum(1 for _ in all_words(10))
print(f"\n(The exhaustive test suite checks all {total} words of length <= 10.)")
