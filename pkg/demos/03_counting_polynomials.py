"""The counting polynomials: for fixed length n, the number of
square-free words is a monic degree-n integer polynomial in the
alphabet size.  Recover them exactly, inspect the near-Chebyshev
recurrence they almost satisfy, and meet the approximating family.

    python demos/03_counting_polynomials.py
"""

from sqfree.polynomials import (
    Q_polynomial,
    generating_series_coefficients,
    omega_alphabet_row,
    psi_from_omega,
    psi_table_from_engine,
    recover_P,
    remainder_R,
)

N = 10

print("== exact recovery from counts at x = 0..n ==")
rows = {n: omega_alphabet_row(n) for n in range(N + 2)}
polys = {n: recover_P(n, rows[n]) for n in range(N + 2)}
for n in range(N + 1):
    print(f"  P_{n:<2d} = {polys[n].factored_str()}")

print()
print("== evaluation beyond the interpolation points ==")
print(f"  P_4(100) = {polys[4](100)}  (= 100^2 * 99 * 98)")
print(f"  P_9(3)   = {polys[9](3)}   (the three-letter census at n = 9)")

print()
print("== the recurrence P_{n+1} = (x-1) P_n - P_{n-1} + R_{n-2} ==")
for n in range(3, N + 1):
    r = remainder_R(polys[n - 1], polys[n], polys[n + 1])
    degree = r.degree if r else "-inf"
    print(f"  n={n:2d}: R_{n-2} = {r}  (degree {degree}, bound {n - 2})")

print()
print("== words using exactly k letters ==")
table = psi_table_from_engine(8, 8)
print("  psi_n(k), one row per n:")
for n in range(9):
    vals = [table.psi(n, k) for k in range(n + 1)]
    print(f"  n={n}: {vals}")
print("  psi_k(k) = k! (all-distinct words), and the inversion of the")
print("  binomial sum gives the same numbers:")
for k in range(6):
    assert psi_from_omega(rows[6], k) == table.psi(6, k)
print("  inversion check at n=6: agreed for k = 0..5")

print()
print("== dropping the remainder: the approximating family ==")
for n in range(5):
    print(f"  Q_{n} = {Q_polynomial(n)}")
print("  series coefficients of 1/(t^2 - (x-1)t + 1):")
for x in (3, 4, 5):
    print(f"  x={x}: {generating_series_coefficients(x, 8)}")
print("  (their growth rate is the dominant root - the entropy")
print("   approximation of demo 04)")
