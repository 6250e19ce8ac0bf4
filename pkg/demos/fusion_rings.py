"""Walk through the orthogonal fusion ring.

Irreducibles sit at integer levels; fusing levels r and s spreads over
|r-s|, |r-s|+2, ..., r+s with multiplicity one.  Iterated powers of the
fundamental level grow ballot-number multiplicities, and the trivial
component of the (2m)-th power is the m-th Catalan number.
"""

from freeqg import (
    catalan,
    char_moment_orth,
    dim_check_fusion,
    dim_orth,
    fuse_orth,
    fuse_orth_many,
)

print("Pairwise fusion")
for r, s in [(1, 1), (2, 3), (4, 4)]:
    print(f"  level {r} (x) level {s}  ->  {fuse_orth(r, s)}")

print("\nPowers of the fundamental level")
for k in range(1, 9):
    print(f"  level-1 word of length {k}:  {fuse_orth_many([1] * k)}")

print("\nTrivial components are Catalan numbers")
for m in range(9):
    moment = char_moment_orth(2 * m)
    print(f"  moment {2 * m:>2}: fusion count {moment:>5}   catalan({m}) = {catalan(m)}")
    assert moment == catalan(m)

print("\nDimensions multiply over fusion (exact big integers)")
for N in (3, 5):
    r, s = 6, 9
    lhs = dim_orth(r, N) * dim_orth(s, N)
    terms = fuse_orth(r, s)
    rhs = sum(mult * dim_orth(label, N) for label, mult in terms.items())
    print(f"  N={N}: d_{r} * d_{s} = {lhs} = sum over {len(terms)} summands = {rhs}")
    assert dim_check_fusion(r, s, N)

print("\nAt N = 28 the level-40 dimension already needs big integers:")
print(f"  d_40^(28) = {dim_orth(40, 28)}")
