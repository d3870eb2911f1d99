"""Polynomials, binomial series and the three norm families.

Everything in this package is a finite Maclaurin coefficient sequence.
This script walks through the arithmetic, builds (1 - z)^s expansions, and
cross-checks the quadrature norms against the exact coefficient formulas.
"""

import numpy as np

from wcochaos import (AnalyticPoly, binomial_series, coeff_norm_bergman2,
                      coeff_norm_h2, quad_norm_bergman_p, quad_norm_hp,
                      sup_norm_bracket)

print("== exact polynomial arithmetic ==")
f = AnalyticPoly([1, 1])          # 1 + z
g = AnalyticPoly([1, -1])         # 1 - z
print("(1 + z)(1 - z) =", f * g)  # 1 - z^2, computed as an exact Cauchy product

print("\n== binomial series (1 - z)^s ==")
for s in (1, 2, 0.5, -0.4):
    coeffs = binomial_series(s, 5).coeffs.real
    print(f"  s={s:>4}: {np.array2string(coeffs, precision=4)}")
print("integer exponents terminate exactly:", binomial_series(2, 12))

print("\n== Hardy norms: quadrature vs coefficients ==")
rng = np.random.default_rng(1)
h = AnalyticPoly(rng.uniform(-1, 1, 65) + 1j * rng.uniform(-1, 1, 65))
exact = coeff_norm_h2(h)
quad = quad_norm_hp(h, 2)
print(f"degree-64 random polynomial: coefficient H2 norm {exact:.12f}")
print(f"                        circle-quadrature value  {quad:.12f}")
print(f"                        relative gap {abs(quad - exact) / exact:.2e}")

print("\n== weighted Bergman norms ==")
z = AnalyticPoly([0, 1])
for beta in (-0.5, 0.0, 1.0, 2.5):
    c = coeff_norm_bergman2(z, beta)
    q = quad_norm_bergman_p(z, 2, beta)
    print(f"  beta={beta:>4}: ||z|| = {c:.10f} (coefficients) "
          f"{q:.10f} (Gauss-Jacobi x trapezoid)")
print("the Bergman norm never exceeds the H2 norm:",
      coeff_norm_bergman2(h, 0.7) <= coeff_norm_h2(h))

print("\n== sup-norm brackets ==")
w = AnalyticPoly([0.5, 0.5])  # (1 + z)/2, sup attained at z = 1
lo, up = sup_norm_bracket(w)
print(f"(1+z)/2: boundary-grid lower bound {lo:.10f}, coefficient-sum upper bound {up}")
