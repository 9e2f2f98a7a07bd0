"""The named series and how they interlock.

Y is the headline object: a double sum whose expansion appears to have
no even-exponent terms at all. The other names are the pieces of the
product decomposition that explains where its coefficients come from.
"""

from lambertq import SeriesId, format_polynomial, named_series, parity_of

N = 24

y = named_series(SeriesId.Y_DEF, N)
print("Y   =", format_polynomial(y, max_terms=8))
verdict = parity_of(y)
print(f"parity through q^{N - 1}: {verdict.kind.name}")
print()

for sid in (SeriesId.S, SeriesId.L1, SeriesId.L2, SeriesId.L3, SeriesId.PHI):
    f = named_series(sid, 14)
    print(f"{sid.value:<4}= {format_polynomial(f, max_terms=6)}")
print()

# D1 and D2 are literally the products S*L1 and S*L2
s = named_series(SeriesId.S, N)
l1 = named_series(SeriesId.L1, N)
d1 = named_series(SeriesId.D1, N)
print("S*L1 == D1:", s * l1 == d1)

# and their difference lands exactly on Y
d2 = named_series(SeriesId.D2, N)
print("D2 - D1  =", format_polynomial(d2 - d1, max_terms=8))
print("Y        =", format_polynomial(y, max_terms=8))
print("equal:", d2 - d1 == y)
