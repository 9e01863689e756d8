"""Exact Bernoulli polynomials and the power sums they encode.

Everything is a fractions.Fraction; there is no floating point anywhere.
The convention is B_1(0) = -1/2, under which the closed forms below hold
with zero error for every s >= 2; faulhaber_sum additionally corrects the
s = 1 case, where the closed form would count the spurious 0^0 term.
"""

from fractions import Fraction

from slopebound import bernoulli_poly, faulhaber_sum, power_sum

for s in range(5):
    poly = bernoulli_poly(s)
    terms = " + ".join(f"({c})x^{k}" for k, c in enumerate(poly.coefficients) if c)
    print(f"B_{s}(x) = {terms}")

print()
print("sum of (h+1)^(s-1), h < j   |  sum of h^s, h <= j")
for s, j in ((1, 5), (2, 3), (3, 4), (4, 6)):
    brute_f = sum((h + 1) ** (s - 1) for h in range(j))
    brute_p = sum(h**s for h in range(j + 1))
    print(f"s={s} j={j}: faulhaber_sum = {faulhaber_sum(s, j)} (brute {brute_f})"
          f"  power_sum = {power_sum(s, j)} (brute {brute_p})")

# exact evaluation off the integers
print()
x = Fraction(7, 3)
print(f"B_4({x}) = {bernoulli_poly(4)(x)}")
print(f"B_1(1/2) = {bernoulli_poly(1)(Fraction(1, 2))} (the polynomial is odd about 1/2)")
