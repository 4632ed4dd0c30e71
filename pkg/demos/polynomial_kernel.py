#!/usr/bin/env python3
"""Tour of the exact polynomial kernel.

Builds a polynomial with hand-planted roots and walks through the tools
the rest of the library relies on: Yun square-free decomposition, Sturm
root counting, certified isolation of the positive roots, rational-root
extraction, and the cubic discriminant.  Everything is exact; the only
decimals printed are display renderings of exact rationals.
"""

from fractions import Fraction

from sasakijoin import (
    cubic_discriminant,
    intpoly,
    isolate_positive_roots,
    rational_roots,
    squarefree_decompose,
    sturm_count,
)
from sasakijoin.exactpoly import format_poly, poly_mul

print("=" * 72)
print("A polynomial with planted roots: (3x-1)^3 * (x^2-2)^2 * (x+4)")
print("=" * 72)

poly = intpoly([1])
for factor, power in (((-1, 3), 3), ((-2, 0, 1), 2), ((4, 1), 1)):
    for _ in range(power):
        poly = poly_mul(poly, intpoly(factor))
print("expanded:", format_poly(poly))

print("\nYun square-free decomposition (factor, multiplicity):")
for factor, mult in squarefree_decompose(poly):
    print(f"  ({format_poly(factor)})^{mult}")

print("\nSturm counts of distinct real roots:")
for lo, hi, label in ((None, None, "all reals"), (0, None, "(0, +inf)"),
                      (0, 1, "(0, 1]"), (1, 2, "(1, 2]")):
    print(f"  {label:>10}: {sturm_count(poly, lo, hi)}")

print("\nCertified positive roots (default width 1e-12):")
for record in isolate_positive_roots(poly):
    if record.is_rational:
        print(f"  exact {record.value}  multiplicity {record.multiplicity}")
    else:
        iv = record.value
        print(f"  interval ({iv.lo}, {iv.hi})")
        print(f"    width {float(iv.width):.1e}, multiplicity {record.multiplicity}")

print("\nAll rational roots with multiplicities:")
print(" ", rational_roots(poly))

print("\nCubic discriminants decide the three-real-roots question exactly:")
for cubic in ((-9, 45, -26, 4), (-9, 42, -24, 4), (1, -3, 3, -1)):
    a3, a2, a1, a0 = cubic
    disc = cubic_discriminant(a3, a2, a1, a0)
    roots = sturm_count(intpoly([a0, a1, a2, a3]), None, None)
    print(f"  {format_poly(intpoly([a0, a1, a2, a3])):>35}:  "
          f"disc = {str(disc):>7}  distinct real roots = {roots}")

print("\nSturm certificates survive multiple roots: the count is of distinct")
print("roots, so a squarefull polynomial still counts correctly:")
squarefull = poly_mul(intpoly((-1, 1)), poly_mul(intpoly((-1, 1)), intpoly((-2, 1))))
print(f"  {format_poly(squarefull)}: on (0, 3] -> {sturm_count(squarefull, 0, 3)}")

print("\nExactness matters: 1/3 is a root of the cubic below, while the")
print("closest 16-digit decimal misses it by a small but nonzero amount.")
g = intpoly((4, -26, 45, -9))
from sasakijoin.exactpoly import poly_eval
print(f"  g = {format_poly(g)}")
print(f"  g(1/3) = {poly_eval(g, Fraction(1, 3))}")
near = poly_eval(g, Fraction(3333333333333333, 10 ** 16))
print(f"  g(0.3333333333333333) = {float(near):.3e} exactly (nonzero)")
