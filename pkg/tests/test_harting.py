"""The truncated word category and the coproduct expansion."""

import random
from itertools import product as iproduct

import pytest

from abcat.abdiag import ab_colimit, validate_diagram
from abcat.abgrp import (biproduct, cyclic, free_abelian, hom_compose,
                         hom_equal, identity_hom, zero_group)
from abcat.errors import BudgetError, InputError, TruncationError
from abcat.fincat import is_connected, validate_category, validate_functor
from abcat.harting import (HXMorphism, HXObject, h_embedding, harting_compare,
                           harting_expand, hx_category, hx_coproduct,
                           hx_filtered_bounded_report, hx_sifted_bounded_report)
from abcat.intmat import IntMatrix
from abcat.sampling import random_family
from abcat.setdiag import FinSet

AB = FinSet(2, ("a", "b"))


def test_object_counts():
    single = hx_category(FinSet(1, ("a",)), 2)
    assert len(single.objects) == 3  # (), (a), (aa)
    two = hx_category(AB, 2)
    # oracle: 1 + 2 + 4 words
    assert len(two.objects) == sum(2 ** n for n in range(3)) == 7


def test_objects_ordered_by_arity_then_word():
    two = hx_category(AB, 2)
    words = [(o.arity, o.word) for o in two.objects]
    assert words == sorted(words)


def test_hom_single_morphism():
    two = hx_category(AB, 2)
    src = two.object_index(HXObject(1, (0,)))
    tgt = two.object_index(HXObject(2, (0, 1)))
    # oracle: exhaustive search over maps 1 -> 2 with the word condition
    valid = [f for f in iproduct(range(2), repeat=1) if (0, 1)[f[0]] == 0]
    assert valid == [(0,)]
    homs = two.hom_indices(src, tgt)
    assert len(homs) == 1
    assert two.morphisms[homs[0]][2] == (0,)


def test_category_laws_small():
    two = hx_category(AB, 2)
    assert validate_category(two.category).ok


def test_budget_error():
    with pytest.raises(BudgetError):
        hx_category(FinSet(3), 4, max_morphisms=1000)


def test_coproduct_examples():
    two = hx_category(AB, 2)
    a = HXObject(1, (0,))
    b = HXObject(1, (1,))
    target, left, right = hx_coproduct(two, a, b)
    assert target == HXObject(2, (0, 1))
    assert left.mapping == (0,) and right.mapping == (1,)
    empty = HXObject(0, ())
    t2, l2, r2 = hx_coproduct(two, empty, a)
    assert t2 == a and r2.mapping == (0,)
    t3, _, _ = hx_coproduct(two, a, a)
    assert t3 == HXObject(2, (0, 0))


def test_coproduct_cap_exceeded():
    two = hx_category(AB, 2)
    with pytest.raises(TruncationError, match="cap"):
        hx_coproduct(two, HXObject(2, (0, 0)), HXObject(1, (1,)))


def test_coproduct_universal_property_exhaustive():
    two = hx_category(AB, 2)
    u = HXObject(1, (0,))
    v = HXObject(1, (1,))
    target, left, right = hx_coproduct(two, u, v)
    ui, vi, ti = (two.object_index(o) for o in (u, v, target))
    for wi, w in enumerate(two.objects):
        for p in two.hom_indices(ui, wi):
            pm = two.morphisms[p][2]
            for q in two.hom_indices(vi, wi):
                qm = two.morphisms[q][2]
                mediating = [m for m in two.hom_indices(ti, wi)
                             if all(two.morphisms[m][2][left.mapping[i]] == pm[i]
                                    for i in range(u.arity))
                             and all(two.morphisms[m][2][right.mapping[j]] == qm[j]
                                     for j in range(v.arity))]
                assert len(mediating) == 1


def test_embedding():
    single = hx_category(FinSet(1, ("x",)), 2)
    emb = h_embedding(single)
    assert validate_functor(emb).ok
    assert single.objects[emb.on_objects[0]] == HXObject(1, (0,))
    two = hx_category(AB, 2)
    emb2 = h_embedding(two)
    assert len(set(emb2.on_objects)) == 2


def test_expand_recovers_family_at_singletons():
    two = hx_category(AB, 2)
    family = [free_abelian(1), cyclic(2)]
    diagram = harting_expand(family, two)
    emb = h_embedding(two)
    for x in range(2):
        assert diagram.groups[emb.on_objects[x]] == family[x]


def test_expand_morphism_matrices():
    single = hx_category(FinSet(1, ("a",)), 2)
    family = [free_abelian(1)]
    diagram = harting_expand(family, single)
    # identity morphisms carry identity matrices
    for oi in range(len(single.objects)):
        ident = single.category.identity[oi]
        assert diagram.homs[ident].matrix == IntMatrix.identity(diagram.groups[oi].gens)
    # the fold (2,aa) -> (1,a) adds the two coordinates
    src = single.object_index(HXObject(2, (0, 0)))
    tgt = single.object_index(HXObject(1, (0,)))
    fold = [m for m in single.hom_indices(src, tgt)][0]
    assert diagram.homs[fold].matrix == IntMatrix([[1, 1]])
    # an injection lands in the matching summand
    two = hx_category(AB, 2)
    family2 = [free_abelian(1), free_abelian(1)]
    diagram2 = harting_expand(family2, two)
    src2 = two.object_index(HXObject(1, (0,)))
    tgt2 = two.object_index(HXObject(2, (1, 0)))
    arrows = two.hom_indices(src2, tgt2)
    assert len(arrows) == 1
    assert diagram2.homs[arrows[0]].matrix == IntMatrix([[0], [1]])


def test_expand_is_functorial_random():
    rng = random.Random(97)
    two = hx_category(AB, 2)
    family = random_family(rng, 2)
    diagram = harting_expand(family, two)
    assert validate_diagram(diagram).ok


def test_expand_preserves_pointwise_products():
    # the expansion of a pointwise sum is the pointwise sum of expansions,
    # up to the canonical summand shuffle, naturally in the morphisms
    two = hx_category(AB, 2)
    fam_a = [free_abelian(1), cyclic(2)]
    fam_b = [cyclic(4), free_abelian(1)]
    fam_sum = [biproduct([a, b])[0] for a, b in zip(fam_a, fam_b)]
    d_sum = harting_expand(fam_sum, two)
    d_a = harting_expand(fam_a, two)
    d_b = harting_expand(fam_b, two)
    from abcat.intmat import block_diagonal
    shuffles = {}
    for oi, obj in enumerate(two.objects):
        mixed = d_sum.groups[oi]
        split, _, _ = biproduct([d_a.groups[oi], d_b.groups[oi]])
        # shuffle: per-letter blocks (a_i, b_i) regrouped to (all a, all b)
        shuffles[oi] = _shuffle_matrix(obj, fam_a, fam_b)
        assert shuffles[oi].rows == split.gens and shuffles[oi].cols == mixed.gens
    # naturality of the shuffle on every morphism
    for mi, (si, ti, _) in enumerate(two.morphisms):
        lhs = shuffles[ti] @ d_sum.homs[mi].matrix
        rhs = block_diagonal([d_a.homs[mi].matrix, d_b.homs[mi].matrix]) @ shuffles[si]
        assert lhs == rhs


def _shuffle_matrix(obj, fam_a, fam_b):
    per_letter = [(fam_a[v].gens, fam_b[v].gens) for v in obj.word]
    mixed_total = sum(a + b for a, b in per_letter)
    a_total = sum(a for a, _ in per_letter)
    rows = []
    # target rows: first all a-blocks, then all b-blocks
    mixed_offsets = []
    acc = 0
    for a, b in per_letter:
        mixed_offsets.append(acc)
        acc += a + b
    out = [[0] * mixed_total for _ in range(mixed_total)]
    row = 0
    for i, (a, _) in enumerate(per_letter):
        for t in range(a):
            out[row][mixed_offsets[i] + t] = 1
            row += 1
    for i, (a, b) in enumerate(per_letter):
        for t in range(b):
            out[row][mixed_offsets[i] + a + t] = 1
            row += 1
    return IntMatrix(out, shape=(mixed_total, mixed_total))


def test_compare_singleton():
    single = hx_category(FinSet(1, ("a",)), 2)
    rep = harting_compare([cyclic(4)], single)
    assert rep.ok
    assert rep.canonical_form == (0, (4,))


def test_compare_two_letters():
    two = hx_category(AB, 2)
    rep = harting_compare([free_abelian(1), cyclic(2)], two)
    assert rep.ok, rep.failures
    assert rep.canonical_form == (1, (2,))
    assert hom_equal(hom_compose(rep.forward, rep.backward),
                     identity_hom(rep.direct_sum))


def test_compare_zero_family():
    two = hx_category(AB, 2)
    rep = harting_compare([zero_group(), zero_group()], two)
    assert rep.ok
    assert rep.canonical_form == (0, ())


def test_compare_cap_stability():
    rng = random.Random(103)
    for _ in range(4):
        family = random_family(rng, 2)
        small = harting_compare(family, hx_category(FinSet(2), 2))
        big = ab_colimit(harting_expand(family, hx_category(FinSet(2), 3)))
        assert small.ok
        assert big.carrier.canonical_form == small.canonical_form


def test_bounded_reports_small():
    two = hx_category(AB, 2)
    filtered = hx_filtered_bounded_report(two)
    sifted = hx_sifted_bounded_report(two)
    assert filtered.ok and sifted.ok
    for (f, g), h in filtered.witnesses["coequalizers"].items():
        fm = two.morphisms[f][2]
        gm = two.morphisms[g][2]
        hm = two.morphisms[h][2]
        assert all(hm[fm[i]] == hm[gm[i]] for i in range(len(fm)))


def test_bounded_sifted_agrees_with_slice_connectivity():
    # cross-check on a tiny instance: the diagonal slices of pairs with
    # combined arity within the cap are connected by the comma machinery
    from abcat.fincat import comma_category, diagonal_functor
    single = hx_category(FinSet(1, ("a",)), 2)
    cat = single.category.with_composition_table()
    diag, prod = diagonal_functor(cat)
    rep = hx_sifted_bounded_report(single)
    assert rep.ok
    for (ui, vi) in rep.witnesses:
        k = comma_category(prod.pair_object(ui, vi), diag)
        assert is_connected(k).connected


def test_expand_respects_word_validation():
    two = hx_category(AB, 2)
    with pytest.raises(InputError):
        harting_expand([free_abelian(1)], two)  # one group for two letters
    with pytest.raises(InputError):
        HXMorphism(HXObject(1, (0,)), HXObject(1, (1,)), (0,))
