"""Finitely generated abelian groups by integer presentation.

Everything reduces to exact integer linear algebra: Smith normal form
classifies groups, lattice membership decides hom equality, and kernels
and cokernels come with their universal maps.
"""

from abcat.abgrp import (are_isomorphic, biproduct, cokernel, cyclic,
                         describe_form, free_abelian, group_from_presentation,
                         hom, hom_compose, hom_equal, identity_hom, is_epi,
                         is_mono, kernel, smith_normal_form)
from abcat.intmat import IntMatrix

print("== Smith normal form ==")
m = IntMatrix([[2, 4], [6, 8]])
s, u, v = smith_normal_form(m)
print("M  =", m.data)
print("S  =", s.data, " with U M V = S:", (u @ m @ v) == s)

print()
print("== classification by presentation ==")
g = group_from_presentation(IntMatrix([[2, 0], [0, 3]]))
print("cokernel of diag(2,3):", describe_form(g.canonical_form))
messy = group_from_presentation(IntMatrix([[4, 7, 2], [2, 3, 0]]))
print("a messier presentation:", describe_form(messy.canonical_form))

print()
print("== kernels and cokernels ==")
z = free_abelian(1)
z2 = free_abelian(2)
summing = hom(z2, z, [[1, 1]])
k, incl = kernel(summing)
print("kernel of (a,b) -> a+b:", describe_form(k.canonical_form),
      "generated by", incl.matrix.column(0))
c, proj = cokernel(hom(z, z, [[2]]))
print("cokernel of doubling:", describe_form(c.canonical_form))
print("mono/epi of doubling:", is_mono(hom(z, z, [[2]])), "/",
      is_epi(hom(z, z, [[2]])))

print()
print("== biproducts and isomorphism witnesses ==")
pair, injections, projections = biproduct([cyclic(2), cyclic(3)])
ok, (fwd, bwd) = are_isomorphic(pair, cyclic(6))
print("Z/2 + Z/3 isomorphic to Z/6:", ok)
print("witness round trips:",
      hom_equal(hom_compose(fwd, bwd), identity_hom(cyclic(6))),
      hom_equal(hom_compose(bwd, fwd), identity_hom(pair)))

print()
print("== hom equality is modulo relations ==")
z2g = cyclic(2)
print("x1 and x3 agree on Z/2:",
      hom_equal(hom(z2g, z2g, [[1]]), hom(z2g, z2g, [[3]])))
