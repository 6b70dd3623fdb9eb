"""The category of finite words over a set, and the coproduct expansion.

Words (n, x) over an alphabet X form a category whose morphisms are
index maps compatible with the letters. Concatenation is a coproduct,
every pair of words is bounded above, and parallel index maps are
coequalized, so colimits over it behave like filtered colimits. A family
of abelian groups expands to a diagram on this category whose colimit is
exactly the direct sum of the family; that replacement is what turns a
plain coproduct into a filtered colimit.
"""

from abcat.abgrp import cyclic, describe_form, free_abelian
from abcat.harting import (HXObject, h_embedding, harting_compare, harting_expand,
                           hx_category, hx_coproduct, hx_filtered_bounded_report,
                           hx_sifted_bounded_report)
from abcat.setdiag import FinSet

AB = FinSet(2, ("a", "b"))

print("== the truncated word category ==")
hx = hx_category(AB, 2)
print(f"letters a, b with arity cap 2: {len(hx.objects)} words,",
      f"{len(hx.morphisms)} morphisms")
print("words:", ", ".join(hx.word_label(o) for o in hx.objects))

print()
print("== concatenation is a coproduct ==")
target, left, right = hx_coproduct(hx, HXObject(1, (0,)), HXObject(1, (1,)))
print("(a) + (b) =", hx.word_label(target),
      f"with injections {left.mapping} and {right.mapping}")

print()
print("== bounded structure ==")
big = hx_category(FinSet(3), 4)
filtered = hx_filtered_bounded_report(big)
sifted = hx_sifted_bounded_report(big)
print(f"three letters, cap 4: {len(big.objects)} words, {len(big.morphisms)} maps")
print(f"bounded filteredness: {filtered.ok} ({filtered.checked} checks)")
print(f"bounded siftedness:   {sifted.ok} ({sifted.checked} pairs)")

print()
print("== the expansion and its colimit ==")
family = [free_abelian(1), cyclic(2)]
print("family over {a, b}:",
      ", ".join(describe_form(g.canonical_form) for g in family))
expansion = harting_expand(family, hx)
emb = h_embedding(hx)
print("the expansion restricted to single letters recovers the family:",
      all(expansion.groups[emb.on_objects[x]] == family[x] for x in range(2)))
report = harting_compare(family, hx)
print("colimit of the expansion:", report.describe())
print("isomorphic to the direct sum, with inverse homs commuting with")
print("both insertion families:", report.ok)
