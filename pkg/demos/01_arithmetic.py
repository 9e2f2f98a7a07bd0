"""Tour of the exact series kernel: arithmetic, inversion, composition.

Everything is plain Python ints under the hood, so every printed
coefficient is exact no matter how large it gets.
"""

from lambertq import TruncatedSeries, format_polynomial

N = 12

one_minus_q = TruncatedSeries([1, -1] + [0] * (N - 2))
print("f      =", format_polynomial(one_minus_q))
print("1/f    =", format_polynomial(one_minus_q.invert()))

# the inverse really is two-sided
check = one_minus_q * one_minus_q.invert()
print("f/f    =", format_polynomial(check))
print()

# partition numbers from the pentagonal-number series by inversion
euler = TruncatedSeries([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0])
partitions = euler.invert()
print("Euler  =", format_polynomial(euler))
print("1/Euler coefficients:", list(partitions))
print("(compare p(0)..p(11) = 1 1 2 3 5 7 11 15 22 30 42 56)")
print()

# substitutions are ring maps
f = TruncatedSeries([0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0])
print("f        =", format_polynomial(f))
print("f(-q)    =", format_polynomial(f.compose_sign()))
print("f(q^2)   =", format_polynomial(f.compose_power(2)))
print("q^3 * f  =", format_polynomial(f.shift(3)))
