"""Bilateral sums: the two-sided Lambert family and its product form.

The flagship parameter choice collapses to twice the eta-quotient PHI,
which is the bridge between the bilateral world and the Y story.
"""

from lambertq import (
    ENTRY29_TRIPLES,
    SignedMonomial,
    bilateral_sum,
    entry29_rhs,
    format_polynomial,
    phi,
    s_window,
)

N = 40

x = SignedMonomial(-1, 1)
y = SignedMonomial(1, 1)
f = bilateral_sum(x, y, 2, N)
print(f"bilateral({x}, {y}, base=2) =", format_polynomial(f, max_terms=6))
print("2*PHI                       =", format_polynomial(2 * phi(N), max_terms=6))
print("equal:", f == 2 * phi(N))
print()

print("sum form vs product form on every shipped parameter triple:")
for px, py, base in ENTRY29_TRIPLES:
    ok = bilateral_sum(px, py, base, N) == entry29_rhs(px, py, base, N)
    print(f"  x={str(px):<5} y={str(py):<5} base={base}: {'ok' if ok else 'MISMATCH'}")
print()

# the symmetric window [1-M, M] is exactly twice the one-sided window [1, M]
for m in (1, 4, 25):
    halves = s_window(1 - m, m, N) == 2 * s_window(1, m, N)
    print(f"window [{1 - m:>3}, {m:>2}] halves exactly: {halves}")
