"""The closed-form slope-dimension bound m*alpha^s + n.

For s positive roots and rank bound g: past the threshold M = M(s) the two
monic Bernoulli-shift polynomials are pinned between x^d/2 and 2x^d, which
places the curve h(x) = c*x^((s+1)/s) (with c^s = s/(g*2^(3s+1))) below the
limit profile from x_M on. Intersecting h with lines of slope alpha yields
the bound; m = 1/c^s exactly, so everything stays rational.
"""

from fractions import Fraction

from slopebound import (
    build_params,
    build_root_system,
    compare_h,
    dimension_bound,
    infimum_dimension_bound,
    sharp_dimension_bound,
)

for label, g in (("A1", 1), ("A2", 1), ("B2", 2)):
    system = build_root_system(label[0], int(label[1]))
    params = build_params(system.s, g)
    print(f"{label}, g={g}: s={params.s} M={params.M} m={params.m} n={params.n}")

print()
params = build_params(1, 1)
print(f"reference case s=1, g=1: m*c^s = {params.m * params.c_pow_s}")
for alpha in (0, Fraction(1, 2), 1, 2, 4, 10):
    general = dimension_bound(params, alpha)
    infimum = infimum_dimension_bound(params, alpha)
    sharp = sharp_dimension_bound(params, alpha) if alpha >= params.M else "-"
    print(f"alpha={str(alpha):>4}: bound={general}  infimum={infimum}  sharp={sharp}")

# the comparison curve h never exceeds y at the equality point c*x^2 = x for s=1
print(f"\nh(16) vs 16 at s=1, g=1: {compare_h(params, 16, 16)} (0 means equal)")
print(f"h(x_M) vs 0: {compare_h(params, params.x_M, 0)} (+1 means h is above)")
