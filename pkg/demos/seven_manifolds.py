#!/usr/bin/env python3
"""Topological invariants and classification in dimension 7.

Computes the invariants of a family of four joins with the same cohomology
ring, shows which pairs the homotopy-equivalence congruences identify, and
finishes with the Kreck-Stolz homeomorphism/diffeomorphism moduli and a
partition of a parameter list into diffeomorphism classes.
"""

from sasakijoin import (
    JoinParams,
    bundle_type_wz,
    c1_coefficient,
    cohomology_group,
    cohomology_ring,
    diffeo_type_dim5,
    h4_order,
    homotopy_group,
    is_spin,
    iterated_join_ring,
    ks_diffeomorphic,
    ks_homeomorphic,
    ks_moduli,
    kruggel_homotopy_equivalent,
    linking_form,
    p1_class,
    partition_diffeo_types,
)

FAMILY = [
    JoinParams(2, 5, 21, 1, 1),
    JoinParams(2, 5, 29, 1, 1),
    JoinParams(2, 1, 21, 25, 1),
    JoinParams(2, 1, 29, 25, 1),
]


def label(params):
    return f"(l1={params.l1}, l2={params.l2}, w=({params.w1},{params.w2}))"


print("=" * 72)
print("Four 7-manifolds with the same cohomology ring")
print("=" * 72)

for params in FAMILY:
    print(f"\n{label(params)}")
    print(f"  c1 coefficient {c1_coefficient(params):>4}   spin {is_spin(params)}")
    print(f"  ring {cohomology_ring(params)}")
    print(f"  |H^4| = {h4_order(params)}   H^4 = {cohomology_group(params, 4)}")
    print(f"  p1 residue {p1_class(params)} mod {h4_order(params)}   "
          f"linking form {linking_form(params)} mod {h4_order(params)}")

print("\nLow homotopy groups are the same for the whole family:")
print(" ", ", ".join(f"pi_{i} = {homotopy_group(FAMILY[0], i)}" for i in (1, 2, 3, 4)))

print("\nPairwise homotopy-equivalence verdicts:")
print("     " + "".join(f"{j:>7}" for j in range(len(FAMILY))))
for i, a in enumerate(FAMILY):
    row = []
    for j, b in enumerate(FAMILY):
        verdict = kruggel_homotopy_equivalent(a, b)
        row.append("yes" if verdict.overall else "no")
    print(f"  {i}: " + "".join(f"{v:>7}" for v in row))
print("\nThe cross pairs fail the weight-norm congruence; within each shape")
print("the cube condition 21^3 + 29^3 = 0 mod 25 does the work.")

print()
print("=" * 72)
print("Kreck-Stolz congruences in the equal-weights family")
print("=" * 72)
for l1 in (1, 2, 5):
    homeo, diffeo = ks_moduli(l1)
    print(f"l1 = {l1}: homeomorphic iff l2' = l2 mod {homeo}; "
          f"diffeomorphic iff mod {diffeo}")

print("\n(5, 39) vs (5, 89):  homeomorphic =", ks_homeomorphic(5, 39, 89),
      " diffeomorphic =", ks_diffeomorphic(5, 39, 89))
print("(5, 39) vs (5, 139): homeomorphic =", ks_homeomorphic(5, 39, 139),
      " diffeomorphic =", ks_diffeomorphic(5, 39, 139))

part = partition_diffeo_types(2, list(range(1, 10)))
print("\nDiffeomorphism classes for l1 = 2 over l2 = 1..9:")
for cls in part.classes:
    print("  class:", list(cls))
for l2, constraint in part.invalid:
    print(f"  skipped l2 = {l2} ({constraint})")

print()
print("=" * 72)
print("Bundle types at the edges")
print("=" * 72)
print("l1 = 1 equal weights: trivial vs twisted sphere bundles over S^2")
for p, l2 in ((3, 4), (2, 5), (2, 4)):
    print(f"  p = {p}, l2 = {l2}: {bundle_type_wz(p, l2)}")
print("dimension five (p = 1): the only invariant left is the parity of l1*|w|")
for l1, l2, w1, w2 in ((1, 19, 3, 2), (2, 3, 1, 1)):
    print(f"  (l1={l1}, l2={l2}, w=({w1},{w2})): {diffeo_type_dim5(l1, l2, w1, w2)}")
print("iterated join in dimension 7:")
print(" ", iterated_join_ring(3, 2, 2, 1))
