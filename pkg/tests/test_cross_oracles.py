"""Brute-force finite-group oracles for the presented (co)limit machinery.

For diagrams of finite groups everything is enumerable: the direct sum
is a finite set of coordinate tuples, the glued subgroup is an additive
closure, the colimit is a literal quotient, and the limit is a filtered
product. Comparing sizes and annihilator counts (a complete invariant
for bounded exponent) against the canonical forms computed by the
presentation route exercises that entire pipeline independently.
"""

import random
from itertools import product as iproduct
from math import gcd, prod

from abcat.abdiag import AbDiagram, ab_colimit, ab_limit, validate_diagram
from abcat.abgrp import (biproduct, canonicalize, from_canonical_form,
                         hom_compose, identity_hom)
from abcat.fincat import (chain_category, group_as_category,
                          parallel_pair_category, span_category)
from abcat.sampling import random_hom, scramble_group

EXPONENT_FACTORS = [(2,), (3,), (4,), (2, 2), (2, 4), (3, 3), (4, 4), (2, 2)]


def random_torsion_group(rng):
    return from_canonical_form(0, rng.choice(EXPONENT_FACTORS))


def free_shape_diagram(rng, base):
    """Any hom assignment works when no non-identity pairs compose."""
    plain = [random_torsion_group(rng) for _ in range(base.n_objects)]
    scrambles = [scramble_group(rng, g) for g in plain]
    groups = [s[0] for s in scrambles]
    homs = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        if base.identity[a] == m:
            homs.append(identity_hom(groups[a]))
        else:
            homs.append(hom_compose(scrambles[b][1],
                                    hom_compose(random_hom(rng, plain[a], plain[b]),
                                                scrambles[a][2])))
    return AbDiagram(base, groups, homs)


def chain_diagram(rng, base):
    """Composable by construction: transitions are composites of steps."""
    n = base.n_objects
    plain = [random_torsion_group(rng) for _ in range(n)]
    scrambles = [scramble_group(rng, g) for g in plain]
    groups = [s[0] for s in scrambles]
    steps = [random_hom(rng, plain[i], plain[i + 1]) for i in range(n - 1)]
    homs = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        h = identity_hom(plain[a])
        for i in range(a, b):
            h = hom_compose(steps[i], h)
        homs.append(hom_compose(scrambles[b][1], hom_compose(h, scrambles[a][2])))
    return AbDiagram(base, groups, homs)


def shift_module_diagram(rng, base):
    """One-object Z/3 base: the action cycles three copies of a group."""
    a = random_torsion_group(rng)
    tripled, injections, projections = biproduct([a, a, a])
    shift = hom_compose(injections[1], projections[0]) + \
        hom_compose(injections[2], projections[1]) + \
        hom_compose(injections[0], projections[2])
    scrambled, fwd, bwd = scramble_group(rng, tripled)
    action = hom_compose(fwd, hom_compose(shift, bwd))
    action2 = hom_compose(action, action)
    ident = base.identity[0]
    homs = []
    for m in range(base.n_morphisms):
        if m == ident:
            homs.append(identity_hom(scrambled))
        elif m == (ident + 1) % 3:
            homs.append(action)
        else:
            homs.append(action2)
    return AbDiagram(base, [scrambled], homs)


def involution_module_diagram(rng, base):
    """One-object Z/2 base: the action is a swap on a doubled group."""
    a = random_torsion_group(rng)
    doubled, injections, projections = biproduct([a, a])
    swap = hom_compose(injections[0], projections[1]) + \
        hom_compose(injections[1], projections[0])
    scrambled, fwd, bwd = scramble_group(rng, doubled)
    action = hom_compose(fwd, hom_compose(swap, bwd))
    ident = base.identity[0]
    homs = [identity_hom(scrambled) if m == ident else action
            for m in range(base.n_morphisms)]
    return AbDiagram(base, [scrambled], homs)


BASES = [
    (parallel_pair_category(), free_shape_diagram),
    (span_category(), free_shape_diagram),
    (chain_category(3), chain_diagram),
    (group_as_category([[0, 1], [1, 0]]), involution_module_diagram),
    (group_as_category([[0, 1, 2], [1, 2, 0], [2, 0, 1]]), shift_module_diagram),
]


def direct_sum_coordinates(orders_per_object):
    offsets = []
    acc = 0
    for orders in orders_per_object:
        offsets.append(acc)
        acc += len(orders)
    flat_orders = [d for orders in orders_per_object for d in orders]
    return offsets, flat_orders


def closure(generators, flat_orders):
    """Additive closure of generator tuples inside the finite direct sum."""
    zero = tuple(0 for _ in flat_orders)
    seen = {zero}
    frontier = [zero]
    gens = [tuple(v % d for v, d in zip(g, flat_orders)) for g in generators]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % d for a, b, d in zip(x, g, flat_orders))
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return seen


def annihilator_counts_of_form(form, ks):
    """#{x : k x = 0} in the canonical group, per k."""
    free, factors = form
    assert free == 0
    return {k: prod(gcd(k, d) for d in factors) for k in ks}


KS = tuple(range(1, 13))


def brute_force_colimit_invariants(diagram):
    """(size, annihilator counts) of the colimit, by literal quotient."""
    base = diagram.base
    canons = [canonicalize(g) for g in diagram.groups]
    orders_per_object = []
    for c in canons:
        free, factors = c.canonical.canonical_form
        assert free == 0
        orders_per_object.append(list(factors))
    offsets, flat_orders = direct_sum_coordinates(orders_per_object)
    total = len(flat_orders)
    generators = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        if base.identity[a] == m:
            continue
        transported = hom_compose(canons[b].to_canonical,
                                  hom_compose(diagram.homs[m], canons[a].from_canonical))
        mat = transported.matrix
        for j in range(len(orders_per_object[a])):
            g = [0] * total
            for i in range(len(orders_per_object[b])):
                g[offsets[b] + i] += mat.data[i][j]
            g[offsets[a] + j] -= 1
            generators.append(tuple(g))
    subgroup = closure(generators, flat_orders)
    ambient = prod(flat_orders) if flat_orders else 1
    size = ambient // len(subgroup)
    counts = {}
    for k in KS:
        hits = 0
        for x in iproduct(*(range(d) for d in flat_orders)):
            scaled = tuple((k * v) % d for v, d in zip(x, flat_orders))
            if scaled in subgroup:
                hits += 1
        counts[k] = hits // len(subgroup)
    return size, counts


def brute_force_limit_invariants(diagram):
    """(size, annihilator counts) of the limit, by filtering the product."""
    base = diagram.base
    canons = [canonicalize(g) for g in diagram.groups]
    orders_per_object = []
    for c in canons:
        free, factors = c.canonical.canonical_form
        assert free == 0
        orders_per_object.append(list(factors))
    transported = {}
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        if base.identity[a] == m:
            continue
        transported[m] = hom_compose(
            canons[b].to_canonical,
            hom_compose(diagram.homs[m], canons[a].from_canonical)).matrix
    members = []
    spaces = [list(iproduct(*(range(d) for d in orders))) for orders in orders_per_object]
    for combo in iproduct(*spaces):
        ok = True
        for m, mat in transported.items():
            a, b = base.dom[m], base.cod[m]
            image = mat.apply(combo[a])
            if any((image[i] - combo[b][i]) % orders_per_object[b][i]
                   for i in range(len(orders_per_object[b]))):
                ok = False
                break
        if ok:
            members.append(combo)
    member_set = set(members)
    counts = {}
    for k in KS:
        hits = 0
        for combo in members:
            scaled = tuple(tuple((k * v) % d for v, d in zip(part, orders))
                           for part, orders in zip(combo, orders_per_object))
            if all(all(v == 0 for v in part) for part in scaled):
                hits += 1
        counts[k] = hits
    return len(members), counts


def test_colimit_against_literal_finite_quotient():
    rng = random.Random(42424242)
    checked = 0
    for trial in range(24):
        base, builder = BASES[trial % len(BASES)]
        diagram = builder(rng, base)
        assert validate_diagram(diagram).ok, trial
        ambient = prod(d for g in diagram.groups for d in g.canonical_form[1])
        if ambient > 5000:
            continue
        size, counts = brute_force_colimit_invariants(diagram)
        col = ab_colimit(diagram)
        free, factors = col.carrier.canonical_form
        assert free == 0, (trial, col.carrier.canonical_form)
        assert prod(factors) == size, (trial, factors, size)
        assert annihilator_counts_of_form((free, factors), KS) == counts, trial
        checked += 1
    assert checked >= 18


def test_limit_against_literal_finite_product():
    rng = random.Random(24242424)
    checked = 0
    for trial in range(24):
        base, builder = BASES[trial % len(BASES)]
        diagram = builder(rng, base)
        assert validate_diagram(diagram).ok, trial
        ambient = prod(d for g in diagram.groups for d in g.canonical_form[1])
        if ambient > 5000:
            continue
        size, counts = brute_force_limit_invariants(diagram)
        lim = ab_limit(diagram)
        free, factors = lim.carrier.canonical_form
        assert free == 0, (trial, lim.carrier.canonical_form)
        assert prod(factors) == size, (trial, factors, size)
        assert annihilator_counts_of_form((free, factors), KS) == counts, trial
        checked += 1
    assert checked >= 18
