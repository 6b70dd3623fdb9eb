"""Finite categories as explicit data, with decidable structural checks.

A category here is fully enumerated: objects and morphisms are canonical
index ranges, composition is a table (or a deterministic rule for large
generated instances), and every law can be checked by exhaustive
enumeration.  On top of that sit the decidable notions this package
revolves around: connectedness by zig-zags, finality of a functor,
filteredness, siftedness, and exhaustive cocone search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import BudgetError, InputError, PreconditionError


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive law check; empty problem list means valid."""

    problems: tuple

    @property
    def ok(self) -> bool:
        return not self.problems


class FinCategory:
    """Fully enumerated finite category.

    Objects are indices 0..n_objects-1 and morphisms 0..n_morphisms-1.
    ``composition`` maps composable pairs (g, f) with cod(f) == dom(g) to
    the index of g∘f.  Large generated categories may instead supply
    ``compose_rule``; objects and morphisms stay fully enumerated either
    way.  Values are immutable after construction.
    """

    __slots__ = ("n_objects", "dom", "cod", "identity", "_table", "_rule",
                 "object_labels", "morphism_labels", "generators",
                 "_hom_cache", "_out_cache", "_in_cache")

    def __init__(self, n_objects, dom, cod, identity, composition=None, *,
                 compose_rule=None, object_labels=None, morphism_labels=None,
                 generators=None):
        self.n_objects = int(n_objects)
        self.dom = tuple(int(x) for x in dom)
        self.cod = tuple(int(x) for x in cod)
        self.identity = tuple(int(x) for x in identity)
        if len(self.dom) != len(self.cod):
            raise InputError("dom and cod tables differ in length")
        if len(self.identity) != self.n_objects:
            raise InputError(f"identity table has {len(self.identity)} entries, expected {self.n_objects}")
        if composition is None and compose_rule is None:
            composition = {}
        self._table = dict(composition) if composition is not None else None
        self._rule = compose_rule
        self.object_labels = tuple(object_labels) if object_labels is not None else None
        self.morphism_labels = tuple(morphism_labels) if morphism_labels is not None else None
        if self.object_labels is not None and len(self.object_labels) != self.n_objects:
            raise InputError("object label count mismatch")
        if self.morphism_labels is not None and len(self.morphism_labels) != len(self.dom):
            raise InputError("morphism label count mismatch")
        self.generators = tuple(int(g) for g in generators) if generators is not None else None
        self._hom_cache = None
        self._out_cache = None
        self._in_cache = None

    @property
    def n_morphisms(self) -> int:
        return len(self.dom)

    def composable(self, g: int, f: int) -> bool:
        return self.cod[f] == self.dom[g]

    def compose(self, g: int, f: int) -> int:
        """Index of g∘f; requires cod(f) == dom(g)."""
        if not (0 <= f < self.n_morphisms and 0 <= g < self.n_morphisms):
            raise InputError(f"morphism index out of range in compose({g}, {f})")
        if self.cod[f] != self.dom[g]:
            raise InputError(f"morphisms {g} and {f} are not composable")
        if self._table is not None:
            try:
                return self._table[(g, f)]
            except KeyError:
                raise InputError(f"composite ({g}, {f}) missing from table") from None
        return self._rule(g, f)

    def identity_of(self, c: int) -> int:
        return self.identity[c]

    def _build_caches(self):
        out = [[] for _ in range(self.n_objects)]
        inc = [[] for _ in range(self.n_objects)]
        for m in range(self.n_morphisms):
            out[self.dom[m]].append(m)
            inc[self.cod[m]].append(m)
        self._out_cache = tuple(tuple(v) for v in out)
        self._in_cache = tuple(tuple(v) for v in inc)

    def morphisms_from(self, c: int) -> tuple:
        if self._out_cache is None:
            self._build_caches()
        return self._out_cache[c]

    def morphisms_to(self, c: int) -> tuple:
        if self._in_cache is None:
            self._build_caches()
        return self._in_cache[c]

    def hom(self, a: int, b: int) -> tuple:
        if self._hom_cache is None:
            table = {}
            for m in range(self.n_morphisms):
                table.setdefault((self.dom[m], self.cod[m]), []).append(m)
            self._hom_cache = {k: tuple(v) for k, v in table.items()}
        return self._hom_cache.get((a, b), ())

    def composable_pairs(self):
        """All (g, f) with cod(f) == dom(g), in deterministic order."""
        if self._table is not None:
            for key in sorted(self._table):
                yield key
        else:
            for f in range(self.n_morphisms):
                for g in self.morphisms_from(self.cod[f]):
                    yield (g, f)

    @property
    def has_table(self) -> bool:
        return self._table is not None

    def with_composition_table(self, max_pairs: int = 2_000_000) -> "FinCategory":
        """Materialize the composition rule into an explicit table."""
        if self._table is not None:
            return self
        table = {}
        for f in range(self.n_morphisms):
            for g in self.morphisms_from(self.cod[f]):
                table[(g, f)] = self._rule(g, f)
                if len(table) > max_pairs:
                    raise BudgetError(f"composition table exceeds {max_pairs} pairs")
        return FinCategory(self.n_objects, self.dom, self.cod, self.identity, table,
                           object_labels=self.object_labels,
                           morphism_labels=self.morphism_labels,
                           generators=self.generators)

    def object_label(self, c: int) -> str:
        return self.object_labels[c] if self.object_labels else str(c)

    def morphism_label(self, m: int) -> str:
        return self.morphism_labels[m] if self.morphism_labels else f"m{m}"

    def _structure(self):
        comp = tuple(sorted(self._table.items())) if self._table is not None else None
        return (self.n_objects, self.dom, self.cod, self.identity, comp,
                self.object_labels, self.morphism_labels, self.generators)

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        if self is other:
            return True
        if self._table is None or other._table is None:
            return False
        return self._structure() == other._structure()

    def __hash__(self):
        return hash((self.n_objects, self.dom, self.cod, self.identity))

    def __repr__(self):
        return f"<FinCategory {self.n_objects} objects, {self.n_morphisms} morphisms>"


class FinFunctor:
    """Functor between finite categories, as object and morphism tables."""

    __slots__ = ("source", "target", "on_objects", "on_morphisms")

    def __init__(self, source: FinCategory, target: FinCategory, on_objects, on_morphisms):
        self.source = source
        self.target = target
        self.on_objects = tuple(int(x) for x in on_objects)
        self.on_morphisms = tuple(int(x) for x in on_morphisms)
        if len(self.on_objects) != source.n_objects:
            raise InputError("functor object table length mismatch")
        if len(self.on_morphisms) != source.n_morphisms:
            raise InputError("functor morphism table length mismatch")

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.on_objects == other.on_objects
                and self.on_morphisms == other.on_morphisms)

    def __hash__(self):
        return hash((self.on_objects, self.on_morphisms))

    def __repr__(self):
        return f"<FinFunctor {self.source.n_objects}->{self.target.n_objects} objects>"


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, range(c.n_objects), range(c.n_morphisms))


@dataclass(frozen=True)
class ZigZag:
    """Alternating chain of morphisms connecting two objects.

    ``steps`` lists (morphism, forward) pairs; directions strictly
    alternate forward, backward, ...  Length n means 2n steps; n == 0 is
    the equality witness between equal objects.
    """

    source: int
    target: int
    steps: tuple

    @property
    def length(self) -> int:
        return len(self.steps) // 2

    def check(self, cat: FinCategory) -> bool:
        if len(self.steps) % 2:
            return False
        position = self.source
        expected = True
        for m, forward in self.steps:
            if forward != expected:
                return False
            if forward:
                if cat.dom[m] != position:
                    return False
                position = cat.cod[m]
            else:
                if cat.cod[m] != position:
                    return False
                position = cat.dom[m]
            expected = not expected
        return position == self.target


# ---------------------------------------------------------------------------
# construction


def discrete_category(n: int, labels=None) -> FinCategory:
    """n objects with identity morphisms only."""
    comp = {(i, i): i for i in range(n)}
    return FinCategory(n, range(n), range(n), range(n), comp,
                       object_labels=labels,
                       morphism_labels=[f"id_{i}" for i in range(n)])


def terminal_category() -> FinCategory:
    return discrete_category(1)


def poset_category(n: int, relation, labels=None) -> FinCategory:
    """Category of a partial order on 0..n-1.

    ``relation`` is an iterable of (a, b) pairs meaning a <= b; reflexive
    pairs are added automatically, transitivity is required and checked.
    """
    leq = {(i, i) for i in range(n)} | {(int(a), int(b)) for a, b in relation}
    for a, b in list(leq):
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"poset pair ({a}, {b}) out of range")
    for a, b in leq:
        for c in range(n):
            if (b, c) in leq and (a, c) not in leq:
                raise InputError(f"poset relation not transitive: ({a},{b}),({b},{c})")
        if a != b and (b, a) in leq:
            raise InputError(f"poset relation not antisymmetric at ({a}, {b})")
    pairs = sorted(leq)
    index = {p: i for i, p in enumerate(pairs)}
    dom = [a for a, _ in pairs]
    cod = [b for _, b in pairs]
    ident = [index[(i, i)] for i in range(n)]
    comp = {}
    for (b1, c) in pairs:
        for (a, b2) in pairs:
            if b2 == b1:
                comp[(index[(b1, c)], index[(a, b2)])] = index[(a, c)]
    mlabels = [f"{a}<={b}" for a, b in pairs]
    return FinCategory(n, dom, cod, ident, comp, object_labels=labels,
                       morphism_labels=mlabels)


def chain_category(n: int) -> FinCategory:
    """The linear order 0 <= 1 <= ... <= n-1."""
    return poset_category(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def diamond_category() -> FinCategory:
    """The poset bottom <= a, b <= top; a finite join-semilattice."""
    return poset_category(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
                          labels=["bot", "a", "b", "top"])


def parallel_pair_category() -> FinCategory:
    """Two objects with two parallel arrows between them (equalizer shape)."""
    dom = [0, 1, 0, 0]
    cod = [0, 1, 1, 1]
    comp = {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2, (3, 0): 3, (1, 3): 3}
    return FinCategory(2, dom, cod, [0, 1], comp,
                       morphism_labels=["id0", "id1", "f", "g"])


def span_category() -> FinCategory:
    """Three objects 0 <- s -> 1 with apex s (pushout shape)."""
    dom = [0, 1, 2, 0, 0]
    cod = [0, 1, 2, 1, 2]
    comp = {(0, 0): 0, (1, 1): 1, (2, 2): 2,
            (3, 0): 3, (1, 3): 3, (4, 0): 4, (2, 4): 4}
    return FinCategory(3, dom, cod, [0, 1, 2], comp,
                       object_labels=["apex", "left", "right"],
                       morphism_labels=["id_apex", "id_left", "id_right", "l", "r"])


def cospan_category() -> FinCategory:
    """Three objects 0 -> 2 <- 1 (pullback shape)."""
    dom = [0, 1, 2, 0, 1]
    cod = [0, 1, 2, 2, 2]
    comp = {(0, 0): 0, (1, 1): 1, (2, 2): 2,
            (3, 0): 3, (2, 3): 3, (4, 1): 4, (2, 4): 4}
    return FinCategory(3, dom, cod, [0, 1, 2], comp,
                       morphism_labels=["id0", "id1", "id2", "l", "r"])


def validate_group_table(table) -> tuple:
    """Check a multiplication table is a group; return (table, identity index).

    Raises InputError naming the first failed axiom.
    """
    table = tuple(tuple(int(x) for x in row) for row in table)
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise InputError(f"group table row {i} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise InputError(f"group table not closed: entry ({i},{j}) = {x}")
    if n == 0:
        raise InputError("group table is empty")
    unit = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            unit = e
            break
    if unit is None:
        raise InputError("group table has no two-sided identity")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InputError(f"group table not associative at ({i},{j},{k})")
    for x in range(n):
        if not any(table[x][y] == unit and table[y][x] == unit for y in range(n)):
            raise InputError(f"group table element {x} has no inverse")
    return table, unit


def group_as_category(table, labels=None) -> FinCategory:
    """One-object category whose endomorphisms multiply by the group table."""
    table, unit = validate_group_table(table)
    n = len(table)
    comp = {(g, f): table[g][f] for g in range(n) for f in range(n)}
    return FinCategory(1, [0] * n, [0] * n, [unit], comp,
                       object_labels=["*"], morphism_labels=labels)


class ProductCategory(FinCategory):
    """Product of two finite categories, with pair index helpers."""

    __slots__ = ("left", "right")

    def __init__(self, left: FinCategory, right: FinCategory, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.left = left
        self.right = right

    def pair_object(self, a: int, b: int) -> int:
        return a * self.right.n_objects + b

    def unpair_object(self, i: int) -> tuple:
        return divmod(i, self.right.n_objects)

    def pair_morphism(self, p: int, q: int) -> int:
        return p * self.right.n_morphisms + q

    def unpair_morphism(self, i: int) -> tuple:
        return divmod(i, self.right.n_morphisms)


def product_category(c: FinCategory, d: FinCategory, *, max_pairs: int = 2_000_000) -> ProductCategory:
    """Componentwise product; objects and morphisms are index pairs."""
    no, nm = d.n_objects, d.n_morphisms
    dom = []
    cod = []
    for p in range(c.n_morphisms):
        for q in range(nm):
            dom.append(c.dom[p] * no + d.dom[q])
            cod.append(c.cod[p] * no + d.cod[q])
    ident = [c.identity[a] * nm + d.identity[b]
             for a in range(c.n_objects) for b in range(no)]
    olabels = None
    if c.object_labels is not None or d.object_labels is not None:
        olabels = [f"({c.object_label(a)},{d.object_label(b)})"
                   for a in range(c.n_objects) for b in range(no)]
    table = None
    rule = None
    if c.has_table and d.has_table:
        pairs_c = list(c.composable_pairs())
        pairs_d = list(d.composable_pairs())
        if len(pairs_c) * len(pairs_d) <= max_pairs:
            table = {}
            for (g1, f1) in pairs_c:
                gf1 = c.compose(g1, f1)
                for (g2, f2) in pairs_d:
                    table[(g1 * nm + g2, f1 * nm + f2)] = gf1 * nm + d.compose(g2, f2)
    if table is None:
        def rule(g, f, _c=c, _d=d, _nm=nm):
            g1, g2 = divmod(g, _nm)
            f1, f2 = divmod(f, _nm)
            return _c.compose(g1, f1) * _nm + _d.compose(g2, f2)
    return ProductCategory(c, d, c.n_objects * no, dom, cod, ident, table,
                           compose_rule=rule, object_labels=olabels)


def diagonal_functor(c: FinCategory) -> tuple[FinFunctor, ProductCategory]:
    """The functor x -> (x, x) into the product of c with itself."""
    p = product_category(c, c)
    on_obj = [p.pair_object(a, a) for a in range(c.n_objects)]
    on_mor = [p.pair_morphism(m, m) for m in range(c.n_morphisms)]
    return FinFunctor(c, p, on_obj, on_mor), p


class CommaCategory(FinCategory):
    """Slice c / F; objects are morphisms c -> F(x), kept in object_data."""

    __slots__ = ("anchor", "functor", "object_data", "morphism_data")

    def __init__(self, anchor, functor, object_data, morphism_data, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.anchor = anchor
        self.functor = functor
        self.object_data = object_data
        self.morphism_data = morphism_data


def comma_category(c: int, f: FinFunctor) -> CommaCategory:
    """The slice category c / F for an object c of F's target."""
    target = f.target
    source = f.source
    if not 0 <= c < target.n_objects:
        raise InputError(f"object {c} out of range")
    objs = []
    for x in range(source.n_objects):
        for arrow in target.hom(c, f.on_objects[x]):
            objs.append((x, arrow))
    obj_index = {ob: i for i, ob in enumerate(objs)}
    mors = []
    for si, (x, arrow) in enumerate(objs):
        for k in source.morphisms_from(x):
            y = source.cod[k]
            img = target.compose(f.on_morphisms[k], arrow)
            ti = obj_index.get((y, img))
            if ti is not None:
                mors.append((si, ti, k))
    mors.sort()
    mor_index = {m: i for i, m in enumerate(mors)}
    dom = [m[0] for m in mors]
    cod = [m[1] for m in mors]
    ident = [mor_index[(i, i, source.identity[x])] for i, (x, _) in enumerate(objs)]
    comp = {}
    for j2, (s2, t2, k2) in enumerate(mors):
        for j1, (s1, t1, k1) in enumerate(mors):
            if t1 == s2:
                comp[(j2, j1)] = mor_index[(s1, t2, source.compose(k2, k1))]
    olabels = [f"{source.object_label(x)}|{target.morphism_label(a)}" for x, a in objs]
    return CommaCategory(c, f, tuple(objs), tuple(mors),
                         len(objs), dom, cod, ident, comp, object_labels=olabels)


def full_subcategory(cat: FinCategory, objects) -> tuple[FinCategory, FinFunctor]:
    """Full subcategory on the given objects plus its inclusion functor."""
    objects = [int(x) for x in objects]
    oset = set(objects)
    obj_index = {o: i for i, o in enumerate(objects)}
    keep = [m for m in range(cat.n_morphisms)
            if cat.dom[m] in oset and cat.cod[m] in oset]
    mor_index = {m: i for i, m in enumerate(keep)}
    dom = [obj_index[cat.dom[m]] for m in keep]
    cod = [obj_index[cat.cod[m]] for m in keep]
    ident = [mor_index[cat.identity[o]] for o in objects]
    comp = {}
    for f in keep:
        for g in keep:
            if cat.composable(g, f):
                comp[(mor_index[g], mor_index[f])] = mor_index[cat.compose(g, f)]
    sub = FinCategory(len(objects), dom, cod, ident, comp,
                      object_labels=[cat.object_label(o) for o in objects],
                      morphism_labels=[cat.morphism_label(m) for m in keep])
    incl = FinFunctor(sub, cat, objects, keep)
    return sub, incl


# ---------------------------------------------------------------------------
# validation


def validate_category(cat: FinCategory, *, check_generators: bool = True) -> ValidationReport:
    """Exhaustively check all category laws; index range errors raise.

    The report lists every violation found: dom/cod mismatches of
    composites, identity failures, associativity failures, undefined or
    spurious table entries, and generator closure gaps.
    """
    n, m = cat.n_objects, cat.n_morphisms
    for i, x in enumerate(cat.dom):
        if not 0 <= x < n:
            raise InputError(f"dom[{i}] = {x} out of range")
    for i, x in enumerate(cat.cod):
        if not 0 <= x < n:
            raise InputError(f"cod[{i}] = {x} out of range")
    for c, x in enumerate(cat.identity):
        if not 0 <= x < m:
            raise InputError(f"identity[{c}] = {x} out of range")
    if cat.generators is not None:
        for g in cat.generators:
            if not 0 <= g < m:
                raise InputError(f"generator {g} out of range")

    problems = []
    for c in range(n):
        e = cat.identity[c]
        if cat.dom[e] != c or cat.cod[e] != c:
            problems.append(f"identity of object {c} has endpoints ({cat.dom[e]},{cat.cod[e]})")

    if cat.has_table:
        for (g, f), gf in sorted(cat._table.items()):
            if not (0 <= f < m and 0 <= g < m):
                raise InputError(f"composition key ({g},{f}) out of range")
            if not cat.composable(g, f):
                problems.append(f"composite defined for non-composable pair ({g},{f})")
                continue
            if not 0 <= gf < m:
                raise InputError(f"composition value for ({g},{f}) out of range")
            if cat.dom[gf] != cat.dom[f] or cat.cod[gf] != cat.cod[g]:
                problems.append(f"composite ({g},{f}) has wrong endpoints")
        table_keys = set(cat._table)
    else:
        table_keys = None

    composites = {}
    for f in range(m):
        for g in range(m):
            if not cat.composable(g, f):
                continue
            if table_keys is not None and (g, f) not in table_keys:
                problems.append(f"composite ({g},{f}) undefined")
                continue
            gf = cat.compose(g, f)
            composites[(g, f)] = gf
            if not cat.has_table:
                if not 0 <= gf < m:
                    raise InputError(f"composition value for ({g},{f}) out of range")
                if cat.dom[gf] != cat.dom[f] or cat.cod[gf] != cat.cod[g]:
                    problems.append(f"composite ({g},{f}) has wrong endpoints")

    for f in range(m):
        left = composites.get((cat.identity[cat.cod[f]], f))
        right = composites.get((f, cat.identity[cat.dom[f]]))
        if left is not None and left != f:
            problems.append(f"left identity fails for morphism {f}")
        if right is not None and right != f:
            problems.append(f"right identity fails for morphism {f}")

    for (g, f), gf in composites.items():
        for h in cat.morphisms_from(cat.cod[g]):
            hg = composites.get((h, g))
            h_gf = composites.get((h, gf))
            if hg is None or h_gf is None:
                continue
            hg_f = composites.get((hg, f))
            if hg_f is not None and hg_f != h_gf:
                problems.append(f"associativity fails on triple ({h},{g},{f})")

    if check_generators and cat.generators is not None:
        reachable = set(cat.identity) | set(cat.generators)
        grew = True
        while grew:
            grew = False
            for f in list(reachable):
                for g in list(reachable):
                    if cat.composable(g, f):
                        gf = composites.get((g, f))
                        if gf is not None and gf not in reachable:
                            reachable.add(gf)
                            grew = True
        for f in range(m):
            if f not in reachable:
                problems.append(f"morphism {f} is not a composite of generators")

    return ValidationReport(tuple(problems))


def validate_functor(f: FinFunctor) -> ValidationReport:
    """Check a functor preserves endpoints, identities, and composites."""
    src, tgt = f.source, f.target
    for x, o in enumerate(f.on_objects):
        if not 0 <= o < tgt.n_objects:
            raise InputError(f"on_objects[{x}] = {o} out of range")
    for x, o in enumerate(f.on_morphisms):
        if not 0 <= o < tgt.n_morphisms:
            raise InputError(f"on_morphisms[{x}] = {o} out of range")
    problems = []
    for m in range(src.n_morphisms):
        fm = f.on_morphisms[m]
        if tgt.dom[fm] != f.on_objects[src.dom[m]]:
            problems.append(f"functor breaks dom at morphism {m}")
        if tgt.cod[fm] != f.on_objects[src.cod[m]]:
            problems.append(f"functor breaks cod at morphism {m}")
    for c in range(src.n_objects):
        if f.on_morphisms[src.identity[c]] != tgt.identity[f.on_objects[c]]:
            problems.append(f"functor breaks identity at object {c}")
    for (g, h) in src.composable_pairs():
        lhs = f.on_morphisms[src.compose(g, h)]
        try:
            rhs = tgt.compose(f.on_morphisms[g], f.on_morphisms[h])
        except InputError:
            problems.append(f"functor images of ({g},{h}) are not composable")
            continue
        if lhs != rhs:
            problems.append(f"functor breaks composite ({g},{h})")
    return ValidationReport(tuple(problems))


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    components: tuple


def _undirected_components(cat: FinCategory):
    seen = [False] * cat.n_objects
    components = []
    for start in range(cat.n_objects):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        comp = []
        while queue:
            u = queue.pop(0)
            comp.append(u)
            for v in sorted({cat.cod[m] for m in cat.morphisms_from(u)}
                            | {cat.dom[m] for m in cat.morphisms_to(u)}):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        components.append(tuple(sorted(comp)))
    return tuple(components)


def is_connected(cat: FinCategory) -> ConnectivityReport:
    """Nonempty, and every pair of objects joined by a zig-zag."""
    comps = _undirected_components(cat)
    return ConnectivityReport(len(comps) == 1, comps)


def find_zigzag(cat: FinCategory, a: int, b: int) -> ZigZag | None:
    """Shortest zig-zag from a to b; ties broken by smallest morphism index.

    Returns None when a and b sit in different components.  The result is
    padded with identities so that directions strictly alternate.
    """
    if not (0 <= a < cat.n_objects and 0 <= b < cat.n_objects):
        raise InputError("object index out of range")
    parent = {a: None}
    queue = [a]
    while queue and b not in parent:
        u = queue.pop(0)
        edges = [(m, True, cat.cod[m]) for m in cat.morphisms_from(u)]
        edges += [(m, False, cat.dom[m]) for m in cat.morphisms_to(u)]
        edges.sort(key=lambda e: (e[0], not e[1]))
        for m, forward, v in edges:
            if v not in parent:
                parent[v] = (u, m, forward)
                queue.append(v)
    if b not in parent:
        return None
    path = []
    node = b
    while parent[node] is not None:
        u, m, forward = parent[node]
        path.append((m, forward))
        node = u
    path.reverse()

    steps = []
    position = a
    expect = True
    for m, forward in path:
        if forward != expect:
            steps.append((cat.identity[position], expect))
            expect = not expect
        steps.append((m, forward))
        position = cat.cod[m] if forward else cat.dom[m]
        expect = not expect
    if len(steps) % 2:
        steps.append((cat.identity[position], False))
    return ZigZag(a, b, tuple(steps))


@dataclass(frozen=True)
class FinalityReport:
    final: bool
    failing: tuple
    slice_components: tuple


def is_final(f: FinFunctor) -> FinalityReport:
    """True iff every slice c / F is connected, for c in the target."""
    failing = []
    slice_components = []
    for c in range(f.target.n_objects):
        rep = is_connected(comma_category(c, f))
        slice_components.append(rep.components)
        if not rep.connected:
            failing.append(c)
    return FinalityReport(not failing, tuple(failing), tuple(slice_components))


@dataclass(frozen=True)
class FilteredReport:
    filtered: bool
    reason: str | None
    failing: tuple | None
    upper_bounds: dict
    coequalizers: dict


def is_filtered(cat: FinCategory) -> FilteredReport:
    """Nonempty, every pair bounded above, every parallel pair coequalized.

    Witnesses are recorded for every instance; on failure the first
    failing instance is reported.
    """
    if cat.n_objects == 0:
        return FilteredReport(False, "category is empty", None, {}, {})
    bounds = {}
    for a in range(cat.n_objects):
        for b in range(a, cat.n_objects):
            found = None
            for d in range(cat.n_objects):
                fs = cat.hom(a, d)
                gs = cat.hom(b, d)
                if fs and gs:
                    found = (d, fs[0], gs[0])
                    break
            if found is None:
                return FilteredReport(False, "no upper bound", (a, b), bounds, {})
            bounds[(a, b)] = found
    coeqs = {}
    for f in range(cat.n_morphisms):
        for g in range(f + 1, cat.n_morphisms):
            if cat.dom[f] != cat.dom[g] or cat.cod[f] != cat.cod[g]:
                continue
            found = None
            for h in cat.morphisms_from(cat.cod[f]):
                if cat.compose(h, f) == cat.compose(h, g):
                    found = h
                    break
            if found is None:
                return FilteredReport(False, "no coequalizing arrow", (f, g), bounds, coeqs)
            coeqs[(f, g)] = found
    return FilteredReport(True, None, None, bounds, coeqs)


@dataclass(frozen=True)
class SiftedReport:
    sifted: bool
    reason: str | None
    failing_pairs: tuple


def is_sifted(cat: FinCategory) -> SiftedReport:
    """Nonempty with a final diagonal into the square of the category."""
    if cat.n_objects == 0:
        return SiftedReport(False, "category is empty", ())
    diag, prod = diagonal_functor(cat)
    rep = is_final(diag)
    failing = tuple(prod.unpair_object(c) for c in rep.failing)
    reason = None if rep.final else "disconnected diagonal slice"
    return SiftedReport(rep.final, reason, failing)


@dataclass(frozen=True)
class CoconeWitness:
    vertex: int
    legs: tuple

    def check(self, diagram: FinFunctor) -> bool:
        tgt = diagram.target
        src = diagram.source
        for d, leg in enumerate(self.legs):
            if tgt.dom[leg] != diagram.on_objects[d] or tgt.cod[leg] != self.vertex:
                return False
        for m in range(src.n_morphisms):
            a, b = src.dom[m], src.cod[m]
            if tgt.compose(self.legs[b], diagram.on_morphisms[m]) != self.legs[a]:
                return False
        return True


def cone_search(diagram: FinFunctor, *, require_filtered: bool = False) -> CoconeWitness | None:
    """Exhaustive search for a cocone under a finite diagram.

    Vertices are tried in ascending order and legs in lexicographic
    order, so the witness is deterministic.  With ``require_filtered``
    the target is checked first and a PreconditionError raised if it is
    not filtered.
    """
    target = diagram.target
    source = diagram.source
    if require_filtered:
        rep = is_filtered(target)
        if not rep.filtered:
            raise PreconditionError(f"target category is not filtered: {rep.reason}")
    nonid = [m for m in range(source.n_morphisms)
             if source.identity[source.dom[m]] != m]
    for v in range(target.n_objects):
        candidate_legs = [target.hom(diagram.on_objects[d], v)
                          for d in range(source.n_objects)]
        if any(not legs for legs in candidate_legs):
            continue
        for legs in iproduct(*candidate_legs):
            ok = True
            for m in nonid:
                a, b = source.dom[m], source.cod[m]
                if target.compose(legs[b], diagram.on_morphisms[m]) != legs[a]:
                    ok = False
                    break
            if ok:
                return CoconeWitness(v, tuple(legs))
    return None
