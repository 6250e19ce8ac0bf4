"""Walk through the semicircle spectral data of the fundamental character.

Against the Haar state the fundamental orthogonal character is a standard
semicircular variable: density sqrt(4-x^2)/(2 pi) on [-2, 2], even moments
the Catalan numbers.  In the full algebra its spectrum stretches to [-N, N].
"""

import numpy as np

from freeqg import (
    catalan,
    semicircle_density,
    semicircle_moment,
    semicircle_sample,
    spectrum_interval,
)

print("Density values")
for x in [0.0, 1.0, 1.9, 2.0, 2.5]:
    print(f"  f({x:>4}) = {semicircle_density(x):.6f}")

print("\nQuadrature moments vs Catalan numbers")
for m in range(7):
    quad = semicircle_moment(2 * m)
    print(f"  moment {2 * m:>2}: quadrature {quad:.12f}   catalan({m}) = {catalan(m)}")

print("\nSampling (rejection against the uniform envelope, PCG64 seed 42)")
samples = semicircle_sample(42, 200_000)
print(f"  count {samples.size}, mean {samples.mean():+.5f}, "
      f"variance {samples.var():.5f}, fourth moment {(samples**4).mean():.5f}")

edges = np.linspace(-2.0, 2.0, 21)
counts, _ = np.histogram(samples, bins=edges)
peak = counts.max()
print("  histogram (each bar scaled to the modal bin):")
for lo, hi, c in zip(edges, edges[1:], counts):
    bar = "#" * round(40 * c / peak)
    print(f"  [{lo:+.1f},{hi:+.1f}) {bar}")

print("\nSpectrum of the fundamental character")
for N in (2, 3, 7):
    print(f"  N={N}: reduced {spectrum_interval('reduced', N)}, "
          f"full {spectrum_interval('full', N)}")
