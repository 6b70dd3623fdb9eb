"""Finite categories and their decidable structure.

A category here is plain data: index ranges for objects and morphisms,
dom/cod tables, and a composition table. That makes every structural
question decidable by enumeration, and this script walks through the
ones the library answers: connectivity, finality, filteredness,
siftedness, and cocone search.
"""

from abcat.fincat import (chain_category, cone_search, cospan_category,
                          diamond_category, discrete_category, find_zigzag,
                          full_subcategory, group_as_category, identity_functor,
                          comma_category, is_connected, is_filtered, is_final,
                          is_sifted, parallel_pair_category, FinFunctor,
                          validate_category)

print("== chains, posets, and validation ==")
chain = chain_category(4)
print(f"chain on 4 objects: {chain.n_morphisms} morphisms,",
      "valid" if validate_category(chain).ok else "INVALID")

print()
print("== connectivity and zig-zags ==")
cospan = cospan_category()
print("cospan  . -> . <- .  connected:", is_connected(cospan).connected)
zig = find_zigzag(cospan, 0, 1)
print(f"zig-zag from 0 to 1: length {zig.length}, steps {zig.steps}")
print("discrete pair connected:", is_connected(discrete_category(2)).connected)

print()
print("== finality: slices must be connected ==")
sub, top = full_subcategory(chain, [3])
print("top-object inclusion into the chain is final:", is_final(top).final)
sub, bottom = full_subcategory(chain, [0])
rep = is_final(bottom)
print("bottom-object inclusion is final:", rep.final,
      f"(empty slices over objects {list(rep.failing)})")
print("slice 1/id over the chain has",
      comma_category(1, identity_functor(chain)).n_objects,
      "objects (the up-set of 1)")

print()
print("== filtered and sifted ==")
for name, cat in [("chain", chain),
                  ("diamond semilattice", diamond_category()),
                  ("two-object discrete", discrete_category(2)),
                  ("one-object group Z/2", group_as_category([[0, 1], [1, 0]]))]:
    f = is_filtered(cat)
    s = is_sifted(cat)
    print(f"{name:24s} filtered={str(f.filtered):5s} sifted={s.sifted}"
          + (f"  ({f.reason})" if not f.filtered else ""))

print()
print("== cocone search ==")
diamond = diamond_category()
shape = parallel_pair_category()
arrow = diamond.hom(0, 1)[0]
diagram = FinFunctor(shape, diamond, [0, 1],
                     [diamond.identity[0], diamond.identity[1], arrow, arrow])
witness = cone_search(diagram, require_filtered=True)
print("parallel pair into the diamond: cocone at object",
      diamond.object_label(witness.vertex))
