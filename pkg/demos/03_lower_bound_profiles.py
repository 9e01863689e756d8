"""The descending family of convex piecewise-linear lower profiles.

From a non-increasing exponent sequence b with b_l <= r, the profile through
(j, sum of (r - b_l) for l <= j) bounds the Newton polygon of any operator
whose l-th column is divisible by p^(r - b_l). Replacing b by the divisor
sequence of the counting table gives a lower profile f_a, replacing the
counts by their bound (h+1)^(s-1) gives the ramp f_r, and letting r grow
gives the limit profiles f_infinity >= f_infinity_star.
"""

from slopebound import (
    ElemDivSeq,
    build_root_system,
    f_infinity,
    f_infinity_star,
    f_r,
    faulhaber_sum,
    from_divisor_sequence,
    truncation_divisors,
)

system = build_root_system("A", 2)
g, r, t = 1, 2, 6

b = ElemDivSeq((2, 1))
f_b = from_divisor_sequence(b, r, t)
a = truncation_divisors(system, g, r)
f_a = from_divisor_sequence(ElemDivSeq(a.exponents[:t]), r, t)
ramp = f_r(system.s, g, r)
limit = f_infinity(system.s, g, 5)
star = f_infinity_star(system.s, g, 5)

for name, fn in (("f_b", f_b), ("f_a", f_a), ("f_r", ramp), ("f_inf", limit), ("f_inf*", star)):
    pts = " ".join(f"({x},{y})" for x, y in fn.breakpoints)
    ray = "" if fn.final_slope is None else f"  then slope {fn.final_slope}"
    print(f"{name:7s} {pts}{ray}")

print()
print(f"f_b >= f_a on [0,{t}]: {f_b.dominates(f_a, t)}")
print(f"f_a >= f_r on [0,{t}]: {f_a.dominates(ramp, t)}")
window = g * faulhaber_sum(system.s, r + 1)
print(f"f_r == f_inf on [0,{window}]: {ramp.agrees_with(limit, window)}")
end = limit.breakpoints[-1][0]
print(f"f_inf >= f_inf* on [0,{end}]: {limit.dominates(star, end)}")

# at s = 1 the two limit profiles are the same function
one = build_root_system("A", 1)
print(f"\ns=1: f_inf == f_inf*: "
      f"{f_infinity(one.s, 1, 10).breakpoints == f_infinity_star(one.s, 1, 10).breakpoints}")
