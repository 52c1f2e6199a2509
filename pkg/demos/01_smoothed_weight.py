"""Walk through the smoothing weight and its Laplace transform.

The weight f(t; x, ell, eps) is a plateau on [1/2, 1] with C^(ell-1)
ramps of width eps/log x on both sides, built by convolving a box kernel
ell times with an indicator.  Its transform F(z) has a closed product
form, and a family of decay bounds that make contour integration against
Dirichlet series converge.
"""

import numpy as np

from chebkit import (WeightSpec, check_decay_bound, check_left_line_bound,
                     laplace_transform, laplace_transform_quadrature,
                     weight_value)

spec = WeightSpec(x=1000.0, ell=3, eps=0.1)
print(f"x = {spec.x:g}, ell = {spec.ell}, eps = {spec.eps}")
print(f"kernel half-width A = eps/(2 ell log x) = {spec.A:.6f}")
print(f"support = [{spec.support[0]:.4f}, {spec.support[1]:.4f}]")

# the plateau and the ramps, as a crude character plot
print("\nprofile of f (each row: t, f(t)):")
for t in np.linspace(0.45, 1.06, 14):
    f = weight_value(spec, t)
    print(f"  t = {t:5.3f}  f = {f:8.6f}  {'#' * int(round(40 * f))}")

# the transform at 0 equals the area under f: 1/2 + eps/log x
F0 = laplace_transform(spec, 0).real
print(f"\nF(0) = {F0:.6f}  (1/2 + eps/log x = {0.5 + spec.eps / spec.log_x:.6f})")

# closed form vs direct numerical integration of f
print("\nclosed form against quadrature of f:")
for z in (1.0 + 0.0j, -2.0 + 1.0j, 0.0 + 20.0j):
    a = laplace_transform(spec, z)
    b = laplace_transform_quadrature(spec, z, step=1e-4)
    print(f"  z = {z}:  F = {a:.10f},  rel diff = {abs(a - b) / abs(b):.2e}")

# the right-half-plane decay bound with tunable exponent alpha
print("\ndecay bound on the line Re s = 2 (alpha = ell):")
for t in (1.0, 10.0, 100.0):
    r = check_decay_bound(spec, complex(2.0, t), spec.ell)
    print(f"  |F(-(2+{t:g}i) log x)| = {r.lhs:10.4g}  <=  {r.rhs:10.4g}  "
          f"({'ok' if r.passed else 'VIOLATED'})")

# and on the left line Re s = -1/2, which controls the shifted contour
print("\nleft-line decay bound:")
for t in (0.0, 5.0, 50.0):
    r = check_left_line_bound(spec, t)
    print(f"  t = {t:4g}:  lhs = {r.lhs:9.3e}  rhs = {r.rhs:9.3e}  "
          f"({'ok' if r.passed else 'VIOLATED'})")
