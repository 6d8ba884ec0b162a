#!/usr/bin/env python3
"""Linear families P_n = <w_1 n + r_1, ..., w_k n + r_k>: transporting minimal
presentations from one member to the next, the Betti-element bijection, the
constant weighted delta value, closed-form Apery sets, and pseudo-Frobenius
transport."""

from numsgps import (
    LinearFamily,
    betti_bijection,
    family_delta,
    fast_apery,
    pf_transport,
    transport_presentation,
)

fam = LinearFamily.normalize((3, 4, 6, 9), (1, 2, 4, 6))
print(f"family: w = {fam.w}, r = {fam.r}")
print(f"period p = w_1*r_k - w_k*r_1 = {fam.period}; "
      f"guaranteed transport regime n > {fam.transport_bound}")
print(f"member at n=506: {fam.instantiate(506).generators}")
print(f"constant weighted delta value of large members: d = {family_delta(fam)}")

print("\nTransport the canonical minimal presentation from n=506 to n=515:")
rep = transport_presentation(fam, 506)
for src, img in zip(rep.source, rep.image):
    print(f"  {src.left} = {src.right}  (deg {src.degree})")
    print(f"    ->  {img.left} = {img.right}  (deg {img.degree})")
print(f"image verifies as a minimal presentation of the n=515 member: {rep.ok}"
      f" (independent recomputation agrees; n=506 sits below the guaranteed bound"
      f" yet the identity already holds)")

print("\nBetti elements map along: singleton weighted length set moves by lam*p,")
print("a two-length set additionally jumps by d*w_1*(w_k*(n+p) + r_k):")
bb = betti_bijection(fam, 506)
for beta, image in bb.mapping:
    print(f"  {beta} -> {image}")
print(f"bijection onto the Betti elements at n=515: {bb.is_bijection}")

small = LinearFamily.normalize((1, 1, 1), (0, 1, 2))
print(f"\nsmall family <n, n+1, n+2>: Betti counts are {small.period}-periodic:")
counts = {}
for n in range(5, 17):
    counts[n] = sum(m for _, m in betti_bijection(small, n).source)
print(f"  {counts}")

fam2 = LinearFamily.normalize((1, 1, 1), (0, 4, 6))
print(f"\nw_1 = 1 family <n, n+4, n+6> (inner semigroup <4,6>, gcd d=2):")
ap = fast_apery(fam2, 37)
print(f"  Apery set of the n=37 member at 37 via the closed form, verified against")
print(f"  the direct computation: {len(ap)} elements, max {ap.max_element()}")
rep2 = pf_transport(fam2, 37)
print(f"  pseudo-Frobenius transport 37 -> 43: coordinates {rep2.f_n} -> {rep2.f_next},")
print(f"  bijection: {rep2.is_bijection}, type stays {rep2.type_n}")
