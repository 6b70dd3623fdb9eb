"""Verification harnesses for the structural theorems on exact instances.

Each function checks one statement on concrete data and returns a report
with an ``ok`` flag plus the certificate details a caller can print.
File-driven and randomized CLI verification both route through here, as
does the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .abdiag import (AbDiagram, GModule, ab_colimit, coinvariants, gmodule_diagram,
                     induced_map_on_colimits, invariants, ab4_check)
from .abgrp import (AbHom, describe_form, factor_through_kernel, hom_compose,
                    hom_equal, is_epi, is_mono, is_zero_hom, kernel)
from .errors import InputError
from .fincat import (FinCategory, FinFunctor, discrete_category, is_final,
                     is_sifted, parallel_pair_category, span_category)
from .intmat import IntMatrix, block_diagonal
from .harting import (HXCategory, harting_compare, harting_expand, hx_category,
                      hx_filtered_bounded_report, hx_sifted_bounded_report)
from .setdiag import (SetFunctor, commute_check, fixed_point_indices, restrict_along,
                      set_colimit, pointwise_product, FinSet)
from .setdiag import validate_functor as validate_set_functor
from . import sampling


@dataclass
class VerifyReport:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)

    def lines(self):
        yield f"{self.name}: {'ok' if self.ok else 'FAILED'}"
        for key in self.details:
            yield f"  {key}: {self.details[key]}"


def verify_notlex(source: GModule, target: GModule, component: AbHom) -> VerifyReport:
    """A mono of G-modules whose induced map on coinvariants is not mono.

    Verifies equivariance and monomorphy of the component, computes both
    coinvariant groups, and certifies that the induced map between the
    one-object colimits is zero and fails to be injective.
    """
    if component.source != source.carrier or component.target != target.carrier:
        raise InputError("component does not map the carriers")
    if source.table != target.table:
        raise InputError("modules are over different groups")
    for g in range(len(source.table)):
        if not hom_equal(hom_compose(target.full_action[g], component),
                         hom_compose(component, source.full_action[g])):
            raise InputError(f"component is not equivariant at group element {g}")
    details = {}
    mono = is_mono(component)
    details["component mono"] = mono
    co_s, _ = coinvariants(source)
    co_t, _ = coinvariants(target)
    inv_s, _ = invariants(source)
    inv_t, _ = invariants(target)
    details["coinvariants source"] = describe_form(co_s.canonical_form)
    details["coinvariants target"] = describe_form(co_t.canonical_form)
    details["invariants source"] = describe_form(inv_s.canonical_form)
    details["invariants target"] = describe_form(inv_t.canonical_form)
    _, d_src = gmodule_diagram(source)
    _, d_tgt = gmodule_diagram(target)
    induced, col_s, col_t = induced_map_on_colimits(d_src, d_tgt, [component])
    iso_ok = col_s.carrier.canonical_form == co_s.canonical_form \
        and col_t.carrier.canonical_form == co_t.canonical_form
    details["colimits match coinvariants"] = iso_ok
    zero = is_zero_hom(induced)
    induced_mono = is_mono(induced)
    ker, _ = kernel(induced)
    details["induced map zero"] = zero
    details["induced map mono"] = induced_mono
    details["induced kernel"] = describe_form(ker.canonical_form)
    ok = mono and iso_ok and not induced_mono
    return VerifyReport("left-exactness counterexample", ok, details)


def verify_harting(family, cap: int = 2, stability_cap: int | None = None,
                   hx: HXCategory | None = None) -> VerifyReport:
    """Expansion colimit equals the coproduct, with an explicit isomorphism."""
    family = list(family)
    alphabet = FinSet(len(family))
    if hx is None:
        hx = hx_category(alphabet, cap)
    comparison = harting_compare(family, hx)
    details = {
        "canonical form": describe_form(comparison.canonical_form),
        "cap": hx.cap,
        "objects": len(hx.objects),
    }
    if comparison.failures:
        details["failures"] = "; ".join(comparison.failures)
    ok = comparison.ok
    if stability_cap is not None and stability_cap != hx.cap:
        bigger = hx_category(alphabet, stability_cap)
        expanded = harting_expand(family, bigger)
        form = ab_colimit(expanded).carrier.canonical_form
        stable = form == comparison.canonical_form
        details[f"form at cap {stability_cap}"] = describe_form(form)
        details["cap stable"] = stable
        ok = ok and stable
    return VerifyReport("coproduct expansion comparison", ok, details)


def verify_hx_structure(alphabet_size: int, cap: int,
                        parallel_arity_cap: int = 2) -> VerifyReport:
    """Bounded filteredness and siftedness of a truncated word category."""
    hx = hx_category(FinSet(alphabet_size), cap)
    filtered = hx_filtered_bounded_report(hx, parallel_arity_cap=parallel_arity_cap)
    sifted = hx_sifted_bounded_report(hx)
    details = {
        "objects": len(hx.objects),
        "morphisms": len(hx.morphisms),
        "filtered checks": filtered.checked,
        "sifted checks": sifted.checked,
    }
    if filtered.failures:
        details["filtered failures"] = filtered.failures[:5]
    if sifted.failures:
        details["sifted failures"] = sifted.failures[:5]
    return VerifyReport("bounded word-category structure", filtered.ok and sifted.ok,
                        details)


def verify_ab4(source_family, target_family, monos, *, cross_cap: int | None = 2) -> VerifyReport:
    """Coproducts of monos are mono, optionally cross-checked through the
    word-category expansion route."""
    report = ab4_check(source_family, target_family, monos)
    details = {
        "direct sum source": describe_form(report.source_sum.canonical_form),
        "direct sum target": describe_form(report.target_sum.canonical_form),
        "kernel of induced": describe_form(report.kernel_group.canonical_form),
        "induced mono": report.ok,
    }
    ok = report.ok
    if cross_cap is not None and source_family:
        hx = hx_category(FinSet(len(list(source_family))), cross_cap)
        src = list(source_family)
        tgt = list(target_family)
        monos = list(monos)
        d_src = harting_expand(src, hx)
        d_tgt = harting_expand(tgt, hx)
        components = []
        for oi, obj in enumerate(hx.objects):
            blocks = [monos[v] for v in obj.word]
            mat = block_diagonal([b.matrix for b in blocks]) if blocks \
                else IntMatrix.zeros(0, 0)
            components.append(AbHom(d_src.groups[oi], d_tgt.groups[oi], mat))
        induced_hx, col_src, col_tgt = induced_map_on_colimits(d_src, d_tgt, components)
        cmp_src = harting_compare(src, hx)
        cmp_tgt = harting_compare(tgt, hx)
        transported = hom_compose(cmp_tgt.forward,
                                  hom_compose(induced_hx, cmp_src.backward))
        agrees = hom_equal(transported, report.induced)
        mono_match = is_mono(induced_hx) == report.ok
        details["expansion route agrees"] = agrees
        details["expansion route mono agrees"] = mono_match
        ok = ok and agrees and mono_match and cmp_src.ok and cmp_tgt.ok
    return VerifyReport("coproducts preserve monos", ok, details)


def verify_ab5(d: AbDiagram, e: AbDiagram, components) -> VerifyReport:
    """Colimits over a filtered base preserve kernels, on explicit data.

    Builds the kernel diagram, compares its colimit with the kernel of
    the induced map through the canonical comparison, and certifies that
    the comparison is an isomorphism.
    """
    components = list(components)
    base = d.base
    kernels = [kernel(components[c]) for c in range(base.n_objects)]
    k_groups = [k for k, _ in kernels]
    k_homs = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        lifted = factor_through_kernel(kernels[b][1],
                                       hom_compose(d.homs[m], kernels[a][1]))
        k_homs.append(lifted)
    k_diag = AbDiagram(base, k_groups, k_homs)
    colim_k = ab_colimit(k_diag)
    induced, colim_d, colim_e = induced_map_on_colimits(d, e, components)
    big_kernel, big_incl = kernel(induced)
    legs = []
    for c in range(base.n_objects):
        into_colim = hom_compose(colim_d.cocone.components[c], kernels[c][1])
        legs.append(factor_through_kernel(big_incl, into_colim))
    comparison = colim_k.factor(legs, check=False)
    mono = is_mono(comparison)
    epi = is_epi(comparison)
    details = {
        "colimit of kernels": describe_form(colim_k.carrier.canonical_form),
        "kernel of induced": describe_form(big_kernel.canonical_form),
        "comparison mono": mono,
        "comparison epi": epi,
    }
    return VerifyReport("filtered colimits preserve kernels", mono and epi, details)


def verify_commute(f_cat: FinCategory, d_cat: FinCategory, x: SetFunctor) -> VerifyReport:
    """Colimit-limit interchange for a diagram on a product base."""
    functor_report = validate_set_functor(x)
    if not functor_report.ok:
        raise InputError("diagram breaks functor laws: "
                         + "; ".join(functor_report.problems[:3]))
    rep = commute_check(f_cat, d_cat, x)
    details = {
        "colim of limits": rep.lhs.size,
        "limit of colims": rep.rhs.size,
    }
    if rep.failure:
        details["failure"] = rep.failure
    return VerifyReport("filtered colimit commutes with finite limit",
                        rep.bijective, details)


def verify_fixpoints(table, f_cat: FinCategory, bg: FinCategory,
                     x: SetFunctor) -> VerifyReport:
    """Fixed points of a colimit of group-sets equal the colimit of the
    fixed points, cross-checked against an explicit fixed-point diagram."""
    functor_report = validate_set_functor(x)
    if not functor_report.ok:
        raise InputError("diagram breaks functor laws: "
                         + "; ".join(functor_report.problems[:3]))
    rep = commute_check(f_cat, bg, x)
    base = x.base
    fixed_sets = []
    fixed_of = []
    for a in range(f_cat.n_objects):
        inj = FinFunctor(bg, base,
                         [base.pair_object(a, 0)],
                         [base.pair_morphism(f_cat.identity[a], m)
                          for m in range(bg.n_morphisms)])
        gset = restrict_along(inj, x)
        idx = fixed_point_indices(gset)
        fixed_of.append({v: k for k, v in enumerate(idx)})
        fixed_sets.append(FinSet(len(idx), tuple(gset.sets[0].label(i) for i in idx)))
    tables = []
    for p in range(f_cat.n_morphisms):
        i, j = f_cat.dom[p], f_cat.cod[p]
        move = x.tables[base.pair_morphism(p, bg.identity[0])]
        inverse = {k: v for v, k in fixed_of[i].items()}
        table_p = []
        for k in range(fixed_sets[i].size):
            image = move[inverse[k]]
            if image not in fixed_of[j]:
                return VerifyReport("fixed points commute with filtered colimit", False,
                                    {"failure": f"transition {p} does not preserve fixed points"})
            table_p.append(fixed_of[j][image])
        tables.append(tuple(table_p))
    fixed_diagram = SetFunctor(f_cat, fixed_sets, tables)
    colim_fixed, _ = set_colimit(fixed_diagram)
    details = {
        "colim of fixed points": colim_fixed.size,
        "fixed points of colim": rep.lhs.size,
        "interchange bijective": rep.bijective,
    }
    ok = rep.bijective and colim_fixed.size == rep.lhs.size
    return VerifyReport("fixed points commute with filtered colimit", ok, details)


def verify_final_restriction(f: FinFunctor, d: SetFunctor) -> VerifyReport:
    """Restriction along a final functor leaves the colimit unchanged."""
    fin = is_final(f)
    restricted = restrict_along(f, d)
    colim_full, cocone_full = set_colimit(d)
    colim_res, cocone_res = set_colimit(restricted)
    mapping = [None] * colim_res.size
    ok = fin.final
    for c in range(f.source.n_objects):
        img_obj = f.on_objects[c]
        for e in range(restricted.sets[c].size):
            k = cocone_res.components[c][e]
            v = cocone_full.components[img_obj][e]
            if mapping[k] is not None and mapping[k] != v:
                ok = False
            mapping[k] = v
    bij = (None not in mapping and len(set(mapping)) == colim_res.size
           and colim_res.size == colim_full.size)
    details = {
        "final": fin.final,
        "colimit before": colim_full.size,
        "colimit after restriction": colim_res.size,
        "canonical bijection": bij,
    }
    return VerifyReport("final restriction preserves colimits", ok and bij, details)


def verify_sifted_products(g: SetFunctor, h: SetFunctor) -> VerifyReport:
    """Colimits over a sifted base commute with binary products of sets."""
    base = g.base
    sift = is_sifted(base)
    prod_diag, pair, _ = pointwise_product(g, h)
    colim_prod, cocone_prod = set_colimit(prod_diag)
    colim_g, cocone_g = set_colimit(g)
    colim_h, cocone_h = set_colimit(h)
    mapping = [None] * colim_prod.size
    ok = sift.sifted
    for c in range(base.n_objects):
        for i in range(g.sets[c].size):
            for j in range(h.sets[c].size):
                k = cocone_prod.components[c][pair(c, i, j)]
                v = (cocone_g.components[c][i], cocone_h.components[c][j])
                if mapping[k] is not None and mapping[k] != v:
                    ok = False
                mapping[k] = v
    bij = (None not in mapping and len(set(mapping)) == colim_prod.size
           and colim_prod.size == colim_g.size * colim_h.size)
    details = {
        "sifted base": sift.sifted,
        "colim of product": colim_prod.size,
        "product of colims": colim_g.size * colim_h.size,
        "canonical bijection": bij,
    }
    return VerifyReport("sifted colimits commute with products", ok and bij, details)


# ---------------------------------------------------------------------------
# randomized suites (seeded)


def harting_suite(trials: int, seed: int, cap: int = 2,
                  stability_cap: int | None = 3) -> VerifyReport:
    rng = Random(seed)
    failures = []
    for t in range(trials):
        family = sampling.random_family(rng, rng.randint(1, 3))
        rep = verify_harting(family, cap=cap, stability_cap=stability_cap)
        if not rep.ok:
            failures.append((t, rep.details))
    return VerifyReport("randomized coproduct expansion suite", not failures,
                        {"trials": trials, "seed": seed, "failures": failures[:3]})


def ab4_suite(trials: int, seed: int, cross_cap: int | None = 2) -> VerifyReport:
    rng = Random(seed)
    failures = []
    for t in range(trials):
        src, tgt, monos = sampling.random_mono_family(rng, rng.randint(1, 3))
        rep = verify_ab4(src, tgt, monos, cross_cap=cross_cap)
        if not rep.ok:
            failures.append((t, rep.details))
    return VerifyReport("randomized coproduct mono suite", not failures,
                        {"trials": trials, "seed": seed, "failures": failures[:3]})


def ab5_suite(trials: int, seed: int, max_length: int = 3) -> VerifyReport:
    rng = Random(seed)
    failures = []
    for t in range(trials):
        d, e, eta = sampling.random_ab5_instance(rng, rng.randint(2, max_length))
        rep = verify_ab5(d, e, eta)
        if not rep.ok:
            failures.append((t, rep.details))
    return VerifyReport("randomized filtered exactness suite", not failures,
                        {"trials": trials, "seed": seed, "failures": failures[:3]})


def commute_suite(trials: int, seed: int, max_chain: int = 4,
                  max_size: int = 4) -> VerifyReport:
    rng = Random(seed)
    shapes = [discrete_category(2), parallel_pair_category(), span_category()]
    failures = []
    for t in range(trials):
        shape = shapes[t % len(shapes)]
        f_cat, _, x = sampling.random_commute_instance(
            rng, rng.randint(2, max_chain), shape, max_size)
        rep = verify_commute(f_cat, shape, x)
        if not rep.ok:
            failures.append((t, rep.details))
    return VerifyReport("randomized interchange suite", not failures,
                        {"trials": trials, "seed": seed, "failures": failures[:3]})


def fixpoints_suite(trials: int, seed: int, max_chain: int = 4,
                    max_size: int = 5) -> VerifyReport:
    rng = Random(seed)
    failures = []
    for t in range(trials):
        table, f_cat, bg, _, x = sampling.random_gset_chain(
            rng, rng.randint(2, max_chain), max_size)
        rep = verify_fixpoints(table, f_cat, bg, x)
        if not rep.ok:
            failures.append((t, rep.details))
    return VerifyReport("randomized fixed point suite", not failures,
                        {"trials": trials, "seed": seed, "failures": failures[:3]})
