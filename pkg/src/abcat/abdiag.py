"""Diagrams of finitely generated abelian groups over finite categories.

Colimits are computed by presentation (coproduct of all object groups,
plus one relation column per morphism and source generator); limits are
kernels inside the product.  Coinvariants and invariants of a group
action, family coproducts, induced maps on colimits, and the checks
behind the coproduct-exactness results all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgrp import (AbHom, FGAbGroup, biproduct, cokernel, factor_through_kernel,
                    free_abelian, hom_compose, hom_equal, hom_validate,
                    identity_hom, is_mono, kernel, zero_group, zero_hom)
from .errors import InputError, PreconditionError
from .fincat import FinCategory, ValidationReport, group_as_category, validate_group_table
from .intmat import IntMatrix, block_diagonal, hstack, vstack


class AbDiagram:
    """Functor from a finite category into f.g. abelian groups."""

    __slots__ = ("base", "groups", "homs")

    def __init__(self, base: FinCategory, groups, homs):
        self.base = base
        self.groups = tuple(groups)
        self.homs = tuple(homs)
        if len(self.groups) != base.n_objects:
            raise InputError("one group per object required")
        if len(self.homs) != base.n_morphisms:
            raise InputError("one hom per morphism required")
        for m, h in enumerate(self.homs):
            if h.source != self.groups[base.dom[m]] or h.target != self.groups[base.cod[m]]:
                raise InputError(f"hom for morphism {m} has wrong endpoints")

    def __eq__(self, other):
        if not isinstance(other, AbDiagram):
            return NotImplemented
        return (self.base == other.base and self.groups == other.groups
                and self.homs == other.homs)


def validate_diagram(d: AbDiagram) -> ValidationReport:
    """Functor laws up to hom equality modulo relations."""
    problems = []
    for c in range(d.base.n_objects):
        if not hom_equal(d.homs[d.base.identity[c]], identity_hom(d.groups[c])):
            problems.append(f"hom of identity morphism at object {c} is not the identity")
    for (g, f) in d.base.composable_pairs():
        gf = d.base.compose(g, f)
        if not hom_equal(d.homs[gf], hom_compose(d.homs[g], d.homs[f])):
            problems.append(f"homs break composite ({g},{f})")
    return ValidationReport(tuple(problems))


def constant_diagram(base: FinCategory, group: FGAbGroup) -> AbDiagram:
    return AbDiagram(base, (group,) * base.n_objects,
                     tuple(identity_hom(group) for _ in range(base.n_morphisms)))


@dataclass(frozen=True)
class AbCocone:
    vertex: FGAbGroup
    components: tuple


@dataclass(frozen=True)
class AbCone:
    vertex: FGAbGroup
    components: tuple


class AbColimit:
    """Colimit presentation with its cocone and factorization."""

    __slots__ = ("carrier", "cocone", "diagram", "_offsets")

    def __init__(self, carrier, cocone, diagram, offsets):
        self.carrier = carrier
        self.cocone = cocone
        self.diagram = diagram
        self._offsets = offsets

    def factor(self, components, *, vertex: FGAbGroup | None = None,
               check: bool = True) -> AbHom:
        """The unique map out of the colimit matching a cocone.

        ``vertex`` is only needed for the empty base, where it cannot be
        read off the components.
        """
        components = list(components)
        if len(components) != self.diagram.base.n_objects:
            raise InputError("one cocone component per object required")
        if check:
            base = self.diagram.base
            for m in range(base.n_morphisms):
                a, b = base.dom[m], base.cod[m]
                if not hom_equal(hom_compose(components[b], self.diagram.homs[m]),
                                 components[a]):
                    raise InputError(f"components do not form a cocone at morphism {m}")
        if components:
            vertex = components[0].target
            matrix = hstack(*[c.matrix for c in components])
        else:
            vertex = vertex if vertex is not None else zero_group()
            matrix = IntMatrix.zeros(vertex.gens, 0)
        return AbHom(self.carrier, vertex, matrix)


class AbLimit:
    """Limit subgroup with its cone and factorization."""

    __slots__ = ("carrier", "cone", "diagram", "_inclusion")

    def __init__(self, carrier, cone, diagram, inclusion):
        self.carrier = carrier
        self.cone = cone
        self.diagram = diagram
        self._inclusion = inclusion

    def factor(self, components, *, vertex: FGAbGroup | None = None,
               check: bool = True) -> AbHom:
        """The unique map into the limit matching a cone.

        ``vertex`` is only needed for the empty base.
        """
        components = list(components)
        base = self.diagram.base
        if len(components) != base.n_objects:
            raise InputError("one cone component per object required")
        if check:
            for m in range(base.n_morphisms):
                a, b = base.dom[m], base.cod[m]
                if not hom_equal(hom_compose(self.diagram.homs[m], components[a]),
                                 components[b]):
                    raise InputError(f"components do not form a cone at morphism {m}")
        if not components:
            source = vertex if vertex is not None else zero_group()
            return zero_hom(source, self.carrier)
        source = components[0].source
        combined = AbHom(source, self._inclusion.target,
                         vstack(*[c.matrix for c in components]))
        return factor_through_kernel(self._inclusion, combined)


def ab_colimit(d: AbDiagram) -> AbColimit:
    """Colimit by presentation: all generators, all object relations, and
    one column per (morphism, source generator) gluing image to source."""
    base = d.base
    offsets = []
    total = 0
    for g in d.groups:
        offsets.append(total)
        total += g.gens
    cols = []
    for m in range(base.n_morphisms):
        if base.identity[base.dom[m]] == m:
            continue
        a, b = base.dom[m], base.cod[m]
        mat = d.homs[m].matrix
        for j in range(d.groups[a].gens):
            col = [0] * total
            for i in range(d.groups[b].gens):
                col[offsets[b] + i] += mat.data[i][j]
            col[offsets[a] + j] -= 1
            cols.append(col)
    object_rels = block_diagonal([g.relations for g in d.groups]) if d.groups \
        else IntMatrix.zeros(0, 0)
    glue = IntMatrix.from_columns(cols, total)
    carrier = FGAbGroup(total, hstack(object_rels, glue) if total else IntMatrix.zeros(0, 0))
    components = []
    for c in range(base.n_objects):
        mat = [[0] * d.groups[c].gens for _ in range(total)]
        for i in range(d.groups[c].gens):
            mat[offsets[c] + i][i] = 1
        components.append(AbHom(d.groups[c], carrier,
                                IntMatrix(mat, shape=(total, d.groups[c].gens))))
    return AbColimit(carrier, AbCocone(carrier, tuple(components)), d, tuple(offsets))


def ab_limit(d: AbDiagram) -> AbLimit:
    """Limit as the kernel of the combined difference map out of the product."""
    base = d.base
    product, _, projections = biproduct(d.groups)
    nonid = [m for m in range(base.n_morphisms)
             if base.identity[base.dom[m]] != m]
    if not nonid:
        cone = AbCone(product, tuple(projections))
        return AbLimit(product, cone, d, identity_hom(product))
    blocks = []
    targets = []
    for m in nonid:
        a, b = base.dom[m], base.cod[m]
        row = hom_compose(d.homs[m], projections[a]) - projections[b]
        blocks.append(row.matrix)
        targets.append(d.groups[b])
    q, _, _ = biproduct(targets)
    diff = AbHom(product, q, vstack(*blocks))
    carrier, inclusion = kernel(diff)
    components = tuple(hom_compose(projections[c], inclusion)
                       for c in range(base.n_objects))
    return AbLimit(carrier, AbCone(carrier, components), d, inclusion)


# ---------------------------------------------------------------------------
# group actions


class GModule:
    """Group action on an f.g. abelian group, given on a generating set.

    The action is extended to every group element by closure; any
    inconsistency with the multiplication table raises InputError.
    """

    __slots__ = ("table", "unit", "carrier", "generator_action", "full_action")

    def __init__(self, table, carrier: FGAbGroup, generator_action):
        self.table, self.unit = validate_group_table(table)
        self.carrier = carrier
        self.generator_action = dict(generator_action)
        for g, h in self.generator_action.items():
            if not 0 <= g < len(self.table):
                raise InputError(f"action generator {g} out of range")
            if h.source != carrier or h.target != carrier:
                raise InputError(f"action of {g} is not an endomorphism of the carrier")
            if hom_validate(h).problems:
                raise InputError(f"action of {g} is not well defined on the carrier")
        self.full_action = self._close()

    def _close(self):
        n = len(self.table)
        known = {self.unit: identity_hom(self.carrier)}
        for g, h in self.generator_action.items():
            if g in known:
                if not hom_equal(known[g], h):
                    raise InputError(f"action of {g} conflicts with the identity")
            else:
                known[g] = h
        frontier = list(known)
        while frontier:
            fresh = []
            for a in frontier:
                for b in list(known):
                    for prod, ha, hb in ((self.table[a][b], known[a], known[b]),
                                         (self.table[b][a], known[b], known[a])):
                        composite = hom_compose(ha, hb)
                        if prod in known:
                            if not hom_equal(known[prod], composite):
                                raise InputError(
                                    f"action is inconsistent at product {prod}")
                        else:
                            known[prod] = composite
                            fresh.append(prod)
            frontier = fresh
        if len(known) != n:
            missing = sorted(set(range(n)) - set(known))
            raise InputError(f"action generators do not generate: missing {missing}")
        return tuple(known[g] for g in range(n))

    @property
    def generators(self) -> tuple:
        return tuple(sorted(self.generator_action))

    def __eq__(self, other):
        if not isinstance(other, GModule):
            return NotImplemented
        return (self.table == other.table and self.carrier == other.carrier
                and self.generator_action == other.generator_action)


def gmodule_diagram(m: GModule) -> tuple[FinCategory, AbDiagram]:
    """The one-object diagram of the action, over the group-as-category."""
    cat = group_as_category(m.table)
    return cat, AbDiagram(cat, (m.carrier,), m.full_action)


def coinvariants(m: GModule) -> tuple[FGAbGroup, AbHom]:
    """Quotient of the carrier by all differences g.a - a, with projection."""
    gens = m.generators
    if not gens:
        return cokernel(zero_hom(zero_group(), m.carrier))
    blocks = [(m.full_action[g] - identity_hom(m.carrier)).matrix for g in gens]
    stacked, _, _ = biproduct([m.carrier] * len(gens))
    h = AbHom(stacked, m.carrier, hstack(*blocks))
    return cokernel(h)


def invariants(m: GModule) -> tuple[FGAbGroup, AbHom]:
    """Subgroup of elements fixed by the action, with inclusion."""
    gens = m.generators
    if not gens:
        return kernel(zero_hom(m.carrier, zero_group()))
    blocks = [(m.full_action[g] - identity_hom(m.carrier)).matrix for g in gens]
    stacked, _, _ = biproduct([m.carrier] * len(gens))
    h = AbHom(m.carrier, stacked, vstack(*blocks))
    return kernel(h)


# ---------------------------------------------------------------------------
# families and induced maps


def direct_sum_family(groups) -> tuple[FGAbGroup, list]:
    """Coproduct of a finite family, with its injections."""
    summed, injections, _ = biproduct(groups)
    return summed, injections


def induced_map_on_colimits(d: AbDiagram, e: AbDiagram, components,
                            colim_d: AbColimit | None = None,
                            colim_e: AbColimit | None = None):
    """The unique map between colimits commuting with both cocones.

    ``components`` is a natural family of homs D(c) -> E(c); naturality
    is checked and an InputError names the first failing morphism.
    Returns (hom, colimit of d, colimit of e).
    """
    components = list(components)
    if d.base is not e.base and d.base != e.base:
        raise InputError("diagrams live on different bases")
    base = d.base
    if len(components) != base.n_objects:
        raise InputError("one component per object required")
    for c in range(base.n_objects):
        if components[c].source != d.groups[c] or components[c].target != e.groups[c]:
            raise InputError(f"component at object {c} has wrong endpoints")
    for m in range(base.n_morphisms):
        a, b = base.dom[m], base.cod[m]
        if not hom_equal(hom_compose(components[b], d.homs[m]),
                         hom_compose(e.homs[m], components[a])):
            raise InputError(f"components are not natural at morphism {m}")
    if colim_d is None:
        colim_d = ab_colimit(d)
    if colim_e is None:
        colim_e = ab_colimit(e)
    induced = colim_d.factor(
        [hom_compose(colim_e.cocone.components[c], components[c])
         for c in range(base.n_objects)],
        check=False)
    for c in range(base.n_objects):
        if not hom_equal(hom_compose(induced, colim_d.cocone.components[c]),
                         hom_compose(colim_e.cocone.components[c], components[c])):
            raise RuntimeError("induced map fails to commute with the cocones")
    return induced, colim_d, colim_e


@dataclass(frozen=True)
class Ab4Report:
    ok: bool
    induced: AbHom
    kernel_group: FGAbGroup
    source_sum: FGAbGroup
    target_sum: FGAbGroup


def ab4_check(source_family, target_family, monos) -> Ab4Report:
    """Does a family of monomorphisms induce a mono on direct sums?

    Every component must be a monomorphism (PreconditionError otherwise);
    the certificate is the kernel of the induced map.
    """
    source_family = list(source_family)
    target_family = list(target_family)
    monos = list(monos)
    if not len(source_family) == len(target_family) == len(monos):
        raise InputError("family sizes differ")
    for i, h in enumerate(monos):
        if h.source != source_family[i] or h.target != target_family[i]:
            raise InputError(f"component {i} has wrong endpoints")
        if not is_mono(h):
            raise PreconditionError(f"component {i} is not a monomorphism")
    source_sum, _, _ = biproduct(source_family)
    target_sum, _, _ = biproduct(target_family)
    matrix = block_diagonal([h.matrix for h in monos]) if monos \
        else IntMatrix.zeros(0, 0)
    induced = AbHom(source_sum, target_sum, matrix)
    ker, _ = kernel(induced)
    return Ab4Report(ker.is_trivial, induced, ker, source_sum, target_sum)


@dataclass(frozen=True)
class GeneratorReport:
    ok: bool
    equal: bool
    witness: AbHom | None
    witness_generator: int | None


def generator_check(f: AbHom, f_prime: AbHom) -> GeneratorReport:
    """Z is a generator: distinct parallel homs differ on some Z-probe.

    For equal homs the check holds vacuously; otherwise a probe g with
    f @ g != f' @ g is found among the standard generators.
    """
    if f.source != f_prime.source or f.target != f_prime.target:
        raise InputError("homs with different endpoints")
    if hom_equal(f, f_prime):
        return GeneratorReport(True, True, None, None)
    diff = f.matrix - f_prime.matrix
    z = free_abelian(1)
    for j in range(diff.cols):
        if not f.target.contains_relation(diff.column(j)):
            col = [[1 if i == j else 0] for i in range(f.source.gens)]
            witness = AbHom(z, f.source, IntMatrix(col, shape=(f.source.gens, 1)))
            return GeneratorReport(True, False, witness, j)
    return GeneratorReport(False, False, None, None)
