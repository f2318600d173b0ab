#!/usr/bin/env python3
"""Omega-sets as symmetric regular semicategories over a frame.

A set with an Omega-valued equality is the same thing as a symmetric
semicategory over the frame, and symmetry forces regularity.  Its
regular contravariant presheaves are its subobjects; the presheaf
constantly equal to the top element exists whenever the self-similarity
is below top, but regularity excludes that phantom "global element".
Morphisms of Omega-sets are the regular semidistributors that have a
right adjoint.
"""

from qsemicat import (
    bottom_semidist,
    chain,
    enumerate_presheaves,
    from_frame,
    is_omega_morphism,
    is_regular_presheaf,
    is_regular_semicat,
    omega_subsets,
    validate_omega_set,
    validate_semidistributor,
)

NAME = {0: "0", 1: "e", 2: "1"}

frame = from_frame(chain(3))
E = validate_omega_set(frame, ["*"], {("*", "*"): 1})
A = E.as_semicategory()

print(f"({{*}}, [*=*] = e) over the three-chain frame")
print(f"  induced semicategory regular: {is_regular_semicat(A)}")

print("\npresheaves versus subobjects:")
for p in enumerate_presheaves(A, "*"):
    status = "subobject" if is_regular_presheaf(p) else "excluded (phantom global element)"
    print(f"  value {NAME[p.values[0]]}: {status}")
print(f"  subobjects = every value below e: {[NAME[p.values[0]] for p in omega_subsets(E)]}")

F = validate_omega_set(frame, ["o"], {("o", "o"): 1})
B = F.as_semicategory()
iso = validate_semidistributor(A, B, {("o", "*"): 1})
print("\nmorphisms between the two copies:")
print(f"  the evident isomorphism graph is a morphism: {is_omega_morphism(iso)}")
print(f"  the empty semidistributor is a morphism:     {is_omega_morphism(bottom_semidist(A, B))}")
