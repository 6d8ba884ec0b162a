#!/usr/bin/env python3
"""Tour of the classical invariants on S = <6, 9, 20>: Apery sets, Frobenius
number, genus, pseudo-Frobenius numbers, factorizations, delta sets, Betti
elements, and the canonical minimal presentation."""

from numsgps import (
    Semigroup,
    betti_elements,
    delta_of_element,
    delta_set_up_to,
    factorization_graph,
    factorizations,
    length_set,
    minimal_presentation,
)

S = Semigroup([6, 9, 20])
print(f"S = {S!r}   gcd = {S.d}")
print(f"Apery set at 6:      {S.apery_set(6).elements}")
print(f"Frobenius number:    {S.frobenius()}")
print(f"genus:               {S.genus()}")
print(f"pseudo-Frobenius:    {S.pseudo_frobenius()}   type = {S.type()}")
print(f"Wilf numbers:        k(F+1-g)-(F+1) = {S.wilf_number('standard')},"
      f"   k(F-g)-(F+1) = {S.wilf_number('variant')}")

print("\nFactorizations and length sets")
for t in (18, 60):
    zs = factorizations(S, t)
    print(f"  Z({t}) = {zs}")
    print(f"  lengths {length_set(S, t)}   gaps {delta_of_element(S, t)}")

print("\nFactorization graphs (components = who shares a generator)")
for t in (18, 60, 15):
    g = factorization_graph(S, t)
    tag = "connected" if g.is_connected else f"{len(g.components)} components"
    print(f"  element {t}: {tag}")
    for comp in g.components:
        print(f"    {comp}")

print("\nBetti elements are exactly the elements with disconnected graphs:")
print(f"  {betti_elements(S)}")

print("\nCanonical minimal presentation (one trade per extra component):")
for rel in minimal_presentation(S):
    print(f"  degree {rel.degree}: {rel.left} = {rel.right}")

print("\nDelta set of S, brute-forced over elements <= 400:")
print(f"  {delta_set_up_to(S, 400)}  (min = gcd of generator differences, max sits at a Betti element)")

# the same machinery runs on subsemigroups with gcd > 1: every invariant is
# taken relative to the multiples of the gcd
T = Semigroup([4, 6])
print(f"\nT = {T!r}   gcd = {T.d}")
print(f"  Frobenius = {T.frobenius()} (largest even number missing)"
      f"   genus = {T.genus()}   Apery at 4: {T.apery_set(4).elements}")
