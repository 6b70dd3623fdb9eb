"""Seeded random instances for the verification suites.

Every generator takes a ``random.Random`` so suites are reproducible
from an explicit seed.  Construction is always by composition of pieces
that are correct by construction (scrambled presentations, pointwise
sums, forced naturality), with bounded retries where a random choice has
to satisfy a closure condition.
"""

from __future__ import annotations

from random import Random

from .abdiag import AbDiagram
from .abgrp import (AbHom, FGAbGroup, biproduct, canonicalize, from_canonical_form,
                    hom_compose, identity_hom)
from .errors import InputError
from .fincat import (FinCategory, chain_category, group_as_category,
                     product_category)
from .intmat import IntMatrix, hstack
from .setdiag import FinSet, SetFunctor
from .setdiag import validate_functor as validate_set_functor


def random_matrix(rng: Random, rows: int, cols: int, bound: int = 20) -> IntMatrix:
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)]
                      for _ in range(rows)], shape=(rows, cols))


_FACTOR_CHAINS = [(), (2,), (3,), (4,), (5,), (6,),
                  (2, 2), (2, 4), (2, 6), (3, 3), (3, 6), (4, 4), (5, 5), (6, 6)]


def random_group(rng: Random, max_gens: int = 2, max_factor: int = 6) -> FGAbGroup:
    """A canonical-form group with at most ``max_gens`` generators."""
    chains = [c for c in _FACTOR_CHAINS
              if len(c) <= max_gens and all(d <= max_factor for d in c)]
    factors = rng.choice(chains)
    free = rng.randint(0, max_gens - len(factors))
    return from_canonical_form(free, factors)


def _random_unimodular(rng: Random, n: int, ops: int = 4):
    """A small unimodular matrix together with its inverse."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ui = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops if n > 1 else 0):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if kind == 0:
            q = rng.choice([-2, -1, 1, 2])
            u[i] = [x + q * y for x, y in zip(u[i], u[j])]
            for r in range(n):
                ui[r][j] -= q * ui[r][i]
        elif kind == 1:
            u[i], u[j] = u[j], u[i]
            for r in range(n):
                ui[r][i], ui[r][j] = ui[r][j], ui[r][i]
        else:
            u[i] = [-x for x in u[i]]
            for r in range(n):
                ui[r][i] = -ui[r][i]
    return (IntMatrix(u, shape=(n, n)), IntMatrix(ui, shape=(n, n)))


def scramble_group(rng: Random, group: FGAbGroup):
    """An isomorphic messy presentation with the explicit isomorphisms.

    Applies a unimodular change of generators and appends a few redundant
    relation columns.  Returns (scrambled, to_scrambled, from_scrambled).
    """
    p, p_inv = _random_unimodular(rng, group.gens)
    rels = p @ group.relations
    extra = []
    for _ in range(rng.randrange(3)):
        if rels.cols:
            coeffs = [rng.randint(-2, 2) for _ in range(rels.cols)]
            extra.append(tuple(sum(c * rels.data[i][j] for j, c in enumerate(coeffs))
                               for i in range(rels.rows)))
    if extra:
        rels = hstack(rels, IntMatrix.from_columns(extra, rels.rows))
    scrambled = FGAbGroup(group.gens, rels)
    return (scrambled,
            AbHom(group, scrambled, p),
            AbHom(scrambled, group, p_inv))


def random_family(rng: Random, size: int, max_gens: int = 2) -> list:
    return [random_group(rng, max_gens=max_gens) for _ in range(size)]


def random_mono_family(rng: Random, size: int):
    """Families A, B and componentwise monomorphisms A(x) -> B(x)."""
    source = []
    target = []
    monos = []
    for _ in range(size):
        a = random_group(rng, max_gens=2)
        c = random_group(rng, max_gens=1)
        summed, injections, _ = biproduct([a, c])
        scrambled, fwd, _ = scramble_group(rng, summed)
        source.append(a)
        target.append(scrambled)
        monos.append(hom_compose(fwd, injections[0]))
    return source, target, monos


def random_hom(rng: Random, a: FGAbGroup, b: FGAbGroup, bound: int = 3) -> AbHom:
    """A uniformly messy but well-defined homomorphism."""
    ca = canonicalize(a)
    cb = canonicalize(b)
    src, tgt = ca.canonical, cb.canonical
    src_orders = _canonical_orders(src)
    tgt_orders = _canonical_orders(tgt)
    rows = [[0] * src.gens for _ in range(tgt.gens)]
    for j, dj in enumerate(src_orders):
        for i, ei in enumerate(tgt_orders):
            if dj == 0:
                rows[i][j] = rng.randint(-bound, bound)
            elif ei == 0:
                rows[i][j] = 0
            else:
                step = ei // _gcd(ei, dj)
                k = rng.randint(-bound, bound)
                rows[i][j] = k * step
    middle = AbHom(src, tgt, IntMatrix(rows, shape=(tgt.gens, src.gens)))
    return hom_compose(cb.from_canonical, hom_compose(middle, ca.to_canonical))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _canonical_orders(group: FGAbGroup):
    free, factors = group.canonical_form
    return list(factors) + [0] * free


def random_mono_chain(rng: Random, length: int, max_extra: int = 1) -> AbDiagram:
    """Chain diagram with monic transitions (iterated scrambled inclusions)."""
    base = chain_category(length)
    plain = [random_group(rng, max_gens=1)]
    for _ in range(length - 1):
        extra = random_group(rng, max_gens=max_extra)
        summed, _, _ = biproduct([plain[-1], extra])
        plain.append(summed)
    scrambles = [scramble_group(rng, g) for g in plain]
    groups = [s[0] for s in scrambles]
    step = {}
    for i in range(length - 1):
        summed = plain[i + 1]
        inj = AbHom(plain[i], summed,
                    IntMatrix([[1 if r == c else 0 for c in range(plain[i].gens)]
                               for r in range(summed.gens)],
                              shape=(summed.gens, plain[i].gens)))
        step[i] = hom_compose(scrambles[i + 1][1], hom_compose(inj, scrambles[i][2]))
    homs = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        h = identity_hom(groups[a])
        for i in range(a, b):
            h = hom_compose(step[i], h)
        homs.append(h)
    return AbDiagram(base, groups, homs)


def random_ab5_instance(rng: Random, length: int):
    """(D, E, eta) over a chain: eta natural with nontrivial kernels.

    D is a scrambled pointwise sum of E with a kernel chain K, and eta is
    the projection, so ker(eta_c) is isomorphic to K(c).
    """
    e_diag = random_mono_chain(rng, length)
    k_diag = random_mono_chain(rng, length)
    base = e_diag.base
    sums = []
    for c in range(length):
        summed, injections, projections = biproduct([e_diag.groups[c], k_diag.groups[c]])
        sums.append((summed, injections, projections))
    scrambles = [scramble_group(rng, sums[c][0]) for c in range(length)]
    groups = [s[0] for s in scrambles]
    homs = []
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        blocked = AbHom(sums[a][0], sums[b][0], _block_pair(e_diag.homs[m].matrix,
                                                            k_diag.homs[m].matrix))
        homs.append(hom_compose(scrambles[b][1], hom_compose(blocked, scrambles[a][2])))
    d_diag = AbDiagram(base, groups, homs)
    eta = [hom_compose(sums[c][2][0], scrambles[c][2]) for c in range(length)]
    return d_diag, e_diag, eta


def _block_pair(m1: IntMatrix, m2: IntMatrix) -> IntMatrix:
    rows = m1.rows + m2.rows
    cols = m1.cols + m2.cols
    out = [[0] * cols for _ in range(rows)]
    for i in range(m1.rows):
        for j in range(m1.cols):
            out[i][j] = m1.data[i][j]
    for i in range(m2.rows):
        for j in range(m2.cols):
            out[m1.rows + i][m1.cols + j] = m2.data[i][j]
    return IntMatrix(out, shape=(rows, cols))


# ---------------------------------------------------------------------------
# set-diagram generators


def random_shape_functor(rng: Random, shape: FinCategory, max_size: int = 4) -> SetFunctor:
    """Random diagram on a shape with no composable non-identity pairs."""
    sets = [FinSet(rng.randint(1, max_size)) for _ in range(shape.n_objects)]
    tables = []
    for m in range(shape.n_morphisms):
        a, b = shape.dom[m], shape.cod[m]
        if shape.identity[a] == m:
            tables.append(tuple(range(sets[a].size)))
        else:
            tables.append(tuple(rng.randrange(sets[b].size) for _ in range(sets[a].size)))
    return SetFunctor(shape, sets, tables)


def random_involution(rng: Random, size: int):
    """An involution on 0..size-1 as a table."""
    items = list(range(size))
    rng.shuffle(items)
    table = list(range(size))
    while len(items) >= 2 and rng.random() < 0.7:
        a = items.pop()
        b = items.pop()
        table[a], table[b] = b, a
    return tuple(table)


def random_gset(rng: Random, size: int):
    """A Z/2-set: carrier plus an involution."""
    return FinSet(size), random_involution(rng, size)


def _natural_step(rng: Random, shape: FinCategory, h: SetFunctor,
                  max_size: int, attempts: int = 200):
    """A random diagram h2 on the same shape plus a natural map h => h2."""
    for _ in range(attempts):
        h2 = random_shape_functor(rng, shape, max_size)
        tau = [None] * shape.n_objects
        ok = True
        for c in range(shape.n_objects):
            forced = {}
            conflict = False
            for m in range(shape.n_morphisms):
                if shape.identity[shape.dom[m]] == m:
                    continue
                a, b = shape.dom[m], shape.cod[m]
                if b == c and tau[a] is not None:
                    for x in range(h.sets[a].size):
                        y = h.tables[m][x]
                        want = h2.tables[m][tau[a][x]]
                        if forced.setdefault(y, want) != want:
                            conflict = True
                            break
                if conflict:
                    break
            if conflict:
                ok = False
                break
            component = []
            for x in range(h.sets[c].size):
                if x in forced:
                    component.append(forced[x])
                    continue
                allowed = list(range(h2.sets[c].size))
                for m in range(shape.n_morphisms):
                    if shape.identity[shape.dom[m]] == m:
                        continue
                    a, b = shape.dom[m], shape.cod[m]
                    if a == c and tau[b] is not None:
                        want = tau[b][h.tables[m][x]]
                        allowed = [y for y in allowed if h2.tables[m][y] == want]
                if not allowed:
                    break
                component.append(rng.choice(allowed))
            if len(component) != h.sets[c].size:
                ok = False
                break
            tau[c] = tuple(component)
        if ok:
            return h2, tuple(tau)
    raise InputError("failed to sample a natural transformation")


def random_commute_instance(rng: Random, chain_len: int, shape: FinCategory,
                            max_size: int = 4):
    """A diagram on chain x shape assembled from a chain of natural maps."""
    f_cat = chain_category(chain_len)
    stages = [random_shape_functor(rng, shape, max_size)]
    taus = []
    for _ in range(chain_len - 1):
        nxt, tau = _natural_step(rng, shape, stages[-1], max_size)
        stages.append(nxt)
        taus.append(tau)

    def transport(i, j, c):
        # composite tau_{j-1} o ... o tau_i at object c
        table = list(range(stages[i].sets[c].size))
        for k in range(i, j):
            table = [taus[k][c][v] for v in table]
        return table

    prod = product_category(f_cat, shape)
    sets = []
    for a in range(chain_len):
        for c in range(shape.n_objects):
            sets.append(stages[a].sets[c])
    tables = []
    for p in range(f_cat.n_morphisms):
        i, j = f_cat.dom[p], f_cat.cod[p]
        for q in range(shape.n_morphisms):
            c, c2 = shape.dom[q], shape.cod[q]
            move = transport(i, j, c)
            tables.append(tuple(stages[j].tables[q][move[x]]
                                for x in range(stages[i].sets[c].size)))
    return f_cat, prod, SetFunctor(prod, sets, tables)


def random_gset_chain(rng: Random, chain_len: int, max_size: int = 5):
    """A chain of Z/2-sets with equivariant transitions, on chain x B'G."""
    table = ((0, 1), (1, 0))
    bg = group_as_category(table, labels=["e", "g"])
    f_cat = chain_category(chain_len)
    carriers = []
    involutions = []
    for k in range(chain_len):
        size = rng.randint(1, max_size)
        inv = random_involution(rng, size)
        # equivariant maps send fixed points to fixed points, so once a
        # stage has one every later stage needs one too
        if k and any(involutions[-1][x] == x for x in range(carriers[-1].size)) \
                and all(inv[x] != x for x in range(size)):
            size += 1
            inv = inv + (size - 1,)
        carriers.append(FinSet(size))
        involutions.append(inv)
    steps = []
    for i in range(chain_len - 1):
        src_size = carriers[i].size
        sigma, sigma2 = involutions[i], involutions[i + 1]
        fixed_targets = [y for y in range(carriers[i + 1].size) if sigma2[y] == y]
        t = [None] * src_size
        for x in range(src_size):
            if t[x] is not None:
                continue
            if sigma[x] == x:
                t[x] = rng.choice(fixed_targets)
            else:
                y = rng.randrange(carriers[i + 1].size)
                t[x] = y
                t[sigma[x]] = sigma2[y]
        steps.append(tuple(t))

    def transition(i, j):
        table_ = list(range(carriers[i].size))
        for k in range(i, j):
            table_ = [steps[k][v] for v in table_]
        return tuple(table_)

    prod = product_category(f_cat, bg)
    sets = list(carriers)
    tables = []
    for p in range(f_cat.n_morphisms):
        i, j = f_cat.dom[p], f_cat.cod[p]
        for q in range(bg.n_morphisms):
            move = transition(i, j)
            if q == bg.identity[0]:
                tables.append(move)
            else:
                tables.append(tuple(involutions[j][move[x]]
                                    for x in range(carriers[i].size)))
    x = SetFunctor(prod, sets, tables)
    return table, f_cat, bg, prod, x


def random_poset_functor(rng: Random, poset: FinCategory, covers,
                         max_size: int = 3, top_max: int = 2,
                         top_objects=(), attempts: int = 5000) -> SetFunctor:
    """Random diagram on a poset, built on cover maps and retried until
    all composites agree."""
    cover_set = {tuple(c) for c in covers}
    for _ in range(attempts):
        sizes = [rng.randint(1, top_max if c in top_objects else max_size)
                 for c in range(poset.n_objects)]
        sets = [FinSet(s) for s in sizes]
        cover_tables = {}
        for (a, b) in cover_set:
            cover_tables[(a, b)] = tuple(rng.randrange(sizes[b]) for _ in range(sizes[a]))
        tables = []
        ok = True
        for m in range(poset.n_morphisms):
            a, b = poset.dom[m], poset.cod[m]
            if a == b:
                tables.append(tuple(range(sizes[a])))
                continue
            path = _cover_path(a, b, cover_set)
            if path is None:
                ok = False
                break
            table = list(range(sizes[a]))
            for edge in path:
                t = cover_tables[edge]
                table = [t[v] for v in table]
            tables.append(tuple(table))
        if not ok:
            raise InputError("poset has a relation not generated by covers")
        functor = SetFunctor(poset, sets, tables)
        if validate_set_functor(functor).ok:
            return functor
    raise InputError("failed to sample a consistent poset diagram")


def _cover_path(a, b, cover_set):
    if a == b:
        return []
    frontier = [(a, [])]
    seen = {a}
    while frontier:
        node, path = frontier.pop(0)
        for (x, y) in sorted(cover_set):
            if x == node and y not in seen:
                np = path + [(x, y)]
                if y == b:
                    return np
                seen.add(y)
                frontier.append((y, np))
    return None


DIAMOND_COVERS = ((0, 1), (0, 2), (1, 3), (2, 3))
