"""The category of finite words over a set, and the coproduct expansion.

Objects of HX are pairs (n, word) with word a length-n tuple over a fixed
finite set X; a morphism (n, x) -> (m, y) is an index map f with
x == y o f pointwise.  HX has coproducts (concatenation), every pair of
words is bounded above, and parallel index maps are coequalized by
quotienting the target positions, which is what makes colimits over HX
behave like filtered colimits.

The expansion functor turns a family of abelian groups A : X -> Ab into
a diagram on HX sending (n, x) to the direct sum of the A(x_i), with
morphisms routing summands along f and adding up over fibres.  Its
colimit recovers the coproduct of the family, and the comparison
machinery here produces the isomorphism explicitly.

The full HX is infinite, so instances are truncated at an arity cap.
All identifications needed for the coproduct are witnessed by arity <= 2
objects; cap stability is covered by the property suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .abdiag import AbDiagram, ab_colimit, AbColimit, direct_sum_family
from .abgrp import (AbHom, FGAbGroup, describe_form, hom_compose, hom_equal,
                    identity_hom)
from .errors import BudgetError, InputError, PreconditionError, TruncationError
from .fincat import FinCategory, FinFunctor, discrete_category
from .intmat import IntMatrix, block_diagonal, hstack
from .setdiag import FinSet


@dataclass(frozen=True)
class HXObject:
    """A finite word (n, x) over the index set."""

    arity: int
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(v) for v in self.word))
        if len(self.word) != self.arity:
            raise InputError("word length does not match arity")


@dataclass(frozen=True)
class HXMorphism:
    """Index map f with source word equal to target word composed with f."""

    source: HXObject
    target: HXObject
    mapping: tuple

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        if len(self.mapping) != self.source.arity:
            raise InputError("mapping length does not match source arity")
        for i, j in enumerate(self.mapping):
            if not 0 <= j < self.target.arity:
                raise InputError(f"mapping sends {i} outside the target word")
            if self.source.word[i] != self.target.word[j]:
                raise InputError(f"words disagree at position {i}")


class HXCategory:
    """Truncation of HX at a given arity cap, realized as a FinCategory.

    Objects are ordered by (arity, word); morphisms by (source, target,
    mapping).  Composition is by rule (composition of index maps) since
    fully tabulating it is quadratic in the morphism count.
    """

    __slots__ = ("alphabet", "cap", "category", "objects", "morphisms",
                 "_object_index", "_morphism_index", "_hom_lists")

    def __init__(self, alphabet: FinSet, cap: int, category: FinCategory,
                 objects, morphisms, object_index, morphism_index, hom_lists):
        self.alphabet = alphabet
        self.cap = cap
        self.category = category
        self.objects = objects
        self.morphisms = morphisms
        self._object_index = object_index
        self._morphism_index = morphism_index
        self._hom_lists = hom_lists

    def object_index(self, obj: HXObject) -> int:
        try:
            return self._object_index[obj]
        except KeyError:
            raise InputError(f"object {obj} is not in the truncation") from None

    def morphism_index(self, mor: HXMorphism) -> int:
        key = (self._object_index[mor.source], self._object_index[mor.target], mor.mapping)
        try:
            return self._morphism_index[key]
        except KeyError:
            raise InputError("morphism is not in the truncation") from None

    def hom_indices(self, src: int, tgt: int) -> tuple:
        return self._hom_lists.get((src, tgt), ())

    def word_label(self, obj: HXObject) -> str:
        return "(" + ",".join(self.alphabet.label(v) for v in obj.word) + ")"


def hx_category(alphabet: FinSet, cap: int, *, max_morphisms: int = 500_000) -> HXCategory:
    """Enumerate all words of arity <= cap and all index maps between them.

    Raises BudgetError when the enumeration would exceed ``max_morphisms``.
    """
    if cap < 1:
        raise InputError("cap must be at least 1")
    size = alphabet.size
    objects = []
    for n in range(cap + 1):
        if size == 0 and n > 0:
            break
        for word in iproduct(range(size), repeat=n):
            objects.append(HXObject(n, word))
    object_index = {o: i for i, o in enumerate(objects)}

    # positions of each letter inside each word; a morphism out of a word
    # chooses, per position, one matching position of the target word
    positions = []
    for obj in objects:
        spots = {}
        for j, v in enumerate(obj.word):
            spots.setdefault(v, []).append(j)
        positions.append(spots)

    total = 0
    for src in objects:
        for spots in positions:
            count = 1
            for v in src.word:
                count *= len(spots.get(v, ()))
                if not count:
                    break
            total += count
    if total > max_morphisms:
        raise BudgetError(f"HX truncation holds {total} morphisms, "
                          f"budget is {max_morphisms}")

    morphisms = []
    morphism_index = {}
    hom_lists = {}
    for si, src in enumerate(objects):
        for ti in range(len(objects)):
            spots = positions[ti]
            choices = [spots.get(v) for v in src.word]
            if any(c is None for c in choices):
                continue
            local = []
            for mapping in iproduct(*choices):
                idx = len(morphisms)
                morphisms.append((si, ti, mapping))
                morphism_index[(si, ti, mapping)] = idx
                local.append(idx)
            if local:
                hom_lists[(si, ti)] = tuple(local)

    dom = [m[0] for m in morphisms]
    cod = [m[1] for m in morphisms]
    ident = [morphism_index[(i, i, tuple(range(o.arity)))] for i, o in enumerate(objects)]

    def rule(g, f):
        s1, _, fmap = morphisms[f]
        _, t2, gmap = morphisms[g]
        return morphism_index[(s1, t2, tuple(gmap[j] for j in fmap))]

    labels = ["(" + ",".join(alphabet.label(v) for v in o.word) + ")" for o in objects]
    category = FinCategory(len(objects), dom, cod, ident, None, compose_rule=rule,
                           object_labels=labels)
    return HXCategory(alphabet, cap, category, tuple(objects), tuple(morphisms),
                      object_index, morphism_index, hom_lists)


def hx_coproduct(h: HXCategory, u: HXObject, v: HXObject):
    """Concatenation with its two injections; the coproduct inside HX.

    Raises TruncationError when the combined arity exceeds the cap.
    """
    if u.arity + v.arity > h.cap:
        raise TruncationError(
            f"coproduct arity {u.arity + v.arity} exceeds cap {h.cap}; rebuild "
            f"the truncation with a larger cap")
    target = HXObject(u.arity + v.arity, u.word + v.word)
    left = HXMorphism(u, target, tuple(range(u.arity)))
    right = HXMorphism(v, target, tuple(u.arity + i for i in range(v.arity)))
    return target, left, right


def h_embedding(h: HXCategory) -> FinFunctor:
    """The discrete index set embedded as the arity-one words."""
    src = discrete_category(h.alphabet.size,
                            labels=[h.alphabet.label(i) for i in range(h.alphabet.size)])
    on_obj = [h.object_index(HXObject(1, (x,))) for x in range(h.alphabet.size)]
    on_mor = [h.category.identity[o] for o in on_obj]
    return FinFunctor(src, h.category, on_obj, on_mor)


def harting_expand(family, h: HXCategory) -> AbDiagram:
    """Expansion of a family of groups into a diagram on the truncation.

    Object (n, x) carries the direct sum of the family at the letters of
    x; a morphism routes summand i into summand f(i) identically and the
    routing matrix adds up over the fibres of f.
    """
    family = list(family)
    if len(family) != h.alphabet.size:
        raise InputError("one group per letter required")
    groups = []
    offset_tables = []
    for obj in h.objects:
        parts = [family[v] for v in obj.word]
        offsets = []
        total = 0
        for p in parts:
            offsets.append(total)
            total += p.gens
        rels = [p.relations for p in parts]
        groups.append(FGAbGroup(total, block_diagonal(rels) if parts else IntMatrix.zeros(0, 0)))
        offset_tables.append(tuple(offsets))
    homs = []
    for (si, ti, mapping) in h.morphisms:
        src_obj, tgt_obj = h.objects[si], h.objects[ti]
        src_group, tgt_group = groups[si], groups[ti]
        mat = [[0] * src_group.gens for _ in range(tgt_group.gens)]
        for i, j in enumerate(mapping):
            part = family[src_obj.word[i]]
            for t in range(part.gens):
                mat[offset_tables[ti][j] + t][offset_tables[si][i] + t] = 1
        homs.append(AbHom(src_group, tgt_group,
                          IntMatrix(mat, shape=(tgt_group.gens, src_group.gens))))
    return AbDiagram(h.category, groups, homs)


@dataclass(frozen=True)
class HartingComparison:
    """Explicit isomorphism between the expanded colimit and the coproduct."""

    ok: bool
    canonical_form: tuple
    forward: AbHom
    backward: AbHom
    direct_sum: FGAbGroup
    colimit: AbColimit
    failures: tuple

    def describe(self) -> str:
        return describe_form(self.canonical_form)


def harting_compare(family, h: HXCategory) -> HartingComparison:
    """Check that the expansion has the same colimit as the family.

    Builds the colimit of the expanded diagram and mutually inverse homs
    against the plain direct sum, verifying that both commute with the
    insertions on each side.  Any failed check is listed by name.  The
    truncation must have cap at least 2, so that the identifications
    gluing two summands together are present.
    """
    if h.cap < 2:
        raise PreconditionError("colimit comparison needs an arity cap of at least 2")
    family = list(family)
    expanded = harting_expand(family, h)
    colim = ab_colimit(expanded)
    total, injections = direct_sum_family(family)

    ds_offsets = []
    acc = 0
    for g in family:
        ds_offsets.append(acc)
        acc += g.gens

    def sum_cocone_component(oi):
        obj = h.objects[oi]
        src = expanded.groups[oi]
        mat = [[0] * src.gens for _ in range(total.gens)]
        col = 0
        for v in obj.word:
            part = family[v]
            for t in range(part.gens):
                mat[ds_offsets[v] + t][col] = 1
                col += 1
        return AbHom(src, total, IntMatrix(mat, shape=(total.gens, src.gens)))

    sum_cocone = [sum_cocone_component(oi) for oi in range(len(h.objects))]
    forward = colim.factor(sum_cocone, check=False)

    arity_one = [h.object_index(HXObject(1, (x,))) for x in range(h.alphabet.size)]
    if family:
        cols = [colim.cocone.components[arity_one[x]].matrix
                for x in range(h.alphabet.size)]
        backward_matrix = hstack(*cols) if cols else IntMatrix.zeros(colim.carrier.gens, 0)
    else:
        backward_matrix = IntMatrix.zeros(colim.carrier.gens, 0)
    backward = AbHom(total, colim.carrier, backward_matrix)

    failures = []
    if not hom_equal(hom_compose(forward, backward), identity_hom(total)):
        failures.append("forward o backward is not the identity on the coproduct")
    if not hom_equal(hom_compose(backward, forward), identity_hom(colim.carrier)):
        failures.append("backward o forward is not the identity on the colimit")
    for x in range(h.alphabet.size):
        leg = colim.cocone.components[arity_one[x]]
        if not hom_equal(hom_compose(forward, leg), injections[x]):
            failures.append(f"forward does not match the insertion at letter {x}")
        if not hom_equal(hom_compose(backward, injections[x]), leg):
            failures.append(f"backward does not match the colimit leg at letter {x}")
    for oi in range(len(h.objects)):
        if not hom_equal(hom_compose(forward, colim.cocone.components[oi]),
                         sum_cocone[oi]):
            failures.append(f"forward breaks the cocone at object {oi}")
            break
    form_sum = total.canonical_form
    form_col = colim.carrier.canonical_form
    if form_sum != form_col:
        failures.append(f"canonical forms differ: {describe_form(form_sum)} vs "
                        f"{describe_form(form_col)}")
    return HartingComparison(not failures, form_sum, forward, backward, total,
                             colim, tuple(failures))


# ---------------------------------------------------------------------------
# bounded structural reports


@dataclass(frozen=True)
class BoundedReport:
    ok: bool
    checked: int
    failures: tuple
    witnesses: dict


def hx_sifted_bounded_report(h: HXCategory) -> BoundedReport:
    """Connectivity of diagonal slices, for pairs with combined arity <= cap.

    Every cospan out of such a pair factors through the concatenation
    cospan, which links the whole slice in zig-zags of length one; the
    check verifies that mediating map exists for every cospan.
    """
    failures = []
    witnesses = {}
    checked = 0
    n = len(h.objects)
    for ui in range(n):
        u = h.objects[ui]
        for vi in range(n):
            v = h.objects[vi]
            if u.arity + v.arity > h.cap:
                continue
            checked += 1
            target, left, right = hx_coproduct(h, u, v)
            wi = h.object_index(target)
            witnesses[(ui, vi)] = (wi, left.mapping, right.mapping)
            for other in range(n):
                w = h.objects[other]
                for p in h.hom_indices(ui, other):
                    pm = h.morphisms[p][2]
                    for q in h.hom_indices(vi, other):
                        qm = h.morphisms[q][2]
                        mediating = pm + qm
                        key = (wi, other, mediating)
                        if key not in h._morphism_index:
                            failures.append((ui, vi, other, p, q))
    return BoundedReport(not failures, checked, tuple(failures), witnesses)


def hx_filtered_bounded_report(h: HXCategory, *, parallel_arity_cap: int = 2) -> BoundedReport:
    """Filteredness within the truncation.

    Upper bounds via concatenation for pairs of combined arity <= cap;
    coequalizing arrows searched exhaustively for every parallel pair
    between objects of arity <= ``parallel_arity_cap``.
    """
    failures = []
    witnesses = {"bounds": {}, "coequalizers": {}}
    checked = 0
    n = len(h.objects)
    if n == 0:
        return BoundedReport(False, 0, (("empty",),), witnesses)
    for ui in range(n):
        u = h.objects[ui]
        for vi in range(ui, n):
            v = h.objects[vi]
            if u.arity + v.arity > h.cap:
                continue
            checked += 1
            target, left, right = hx_coproduct(h, u, v)
            wi = h.object_index(target)
            li = h._morphism_index.get((ui, wi, left.mapping))
            ri = h._morphism_index.get((vi, wi, right.mapping))
            if li is None or ri is None:
                failures.append(("bound", ui, vi))
            else:
                witnesses["bounds"][(ui, vi)] = (wi, li, ri)
    small = [i for i, o in enumerate(h.objects) if o.arity <= parallel_arity_cap]
    for ui in small:
        for vi in small:
            pairs = h.hom_indices(ui, vi)
            for a in range(len(pairs)):
                for b in range(a + 1, len(pairs)):
                    checked += 1
                    f, g = pairs[a], pairs[b]
                    fm = h.morphisms[f][2]
                    gm = h.morphisms[g][2]
                    found = None
                    for wi2 in range(n):
                        for hi in h.hom_indices(vi, wi2):
                            hm = h.morphisms[hi][2]
                            if all(hm[fm[i]] == hm[gm[i]] for i in range(len(fm))):
                                found = hi
                                break
                        if found is not None:
                            break
                    if found is None:
                        failures.append(("coequalizer", f, g))
                    else:
                        witnesses["coequalizers"][(f, g)] = found
    return BoundedReport(not failures, checked, tuple(failures), witnesses)
