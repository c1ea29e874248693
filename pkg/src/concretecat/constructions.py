"""Builders for concrete categories: set-level categories, types, truncated maps,
pointed groupoids, disjoint unions and products.

Each builder returns a :class:`~concretecat.concat.ConcreteCategory` whose
conformity is computed by :func:`~concretecat.concat.conformity_report`,
never assumed.
"""
from dataclasses import dataclass, field
from itertools import permutations, product as cartesian
from typing import Dict, List, Optional, Tuple

from .concat import (ConcreteCategory, FiberElement, FiberWitness, Realisation,
                     conformity_report, per_pair_levels, strict_category)
from .errors import RejectedInput, StructuralValidationError
from .fingpd import (CONTRACTIBLE, FinGroupoid, GFunctor, NatIso, bz2, compose_functors,
                     coproduct, coproduct_functor, coproduct_natiso, discrete, empty,
                     functor_from_tables, functor_groupoid, identity_functor, identity_natiso,
                     iter_functors, natural_isos, product_groupoid, trivial, trunc_level_functor)

# set-level categories -------------------------------------------------------------------


@dataclass
class FiniteOneCategory:
    """A category with finite hom sets; ``comp`` is keyed ``(x, y, z, g, f)`` giving ``g . f``."""
    n_objects: int
    hom_sizes: Dict[Tuple[int, int], int]
    unit: Tuple[int, ...]
    comp: Dict[Tuple[int, int, int, int, int], int]
    name: str = ""

    def validate(self):
        ob = range(self.n_objects)
        for x, y in cartesian(ob, ob):
            if self.hom_sizes.get((x, y), -1) < 0:
                raise StructuralValidationError(f"hom({x},{y})", "missing size")
        for x in ob:
            if not 0 <= self.unit[x] < self.hom_sizes[x, x]:
                raise StructuralValidationError(f"unit({x})", "outside hom")
        for x, y, z in cartesian(ob, ob, ob):
            for g in range(self.hom_sizes[y, z]):
                for f in range(self.hom_sizes[x, y]):
                    h = self.comp.get((x, y, z, g, f))
                    if h is None or not 0 <= h < self.hom_sizes[x, z]:
                        raise StructuralValidationError(f"comp({x},{y},{z};{g},{f})", "bad composite")
        for x, y in cartesian(ob, ob):
            for f in range(self.hom_sizes[x, y]):
                if self.comp[x, y, y, self.unit[y], f] != f:
                    raise StructuralValidationError(f"unit({y})", f"not a left unit for {f}")
                if self.comp[x, x, y, f, self.unit[x]] != f:
                    raise StructuralValidationError(f"unit({x})", f"not a right unit for {f}")
        for x, y, z, w in cartesian(ob, repeat=4):
            for h in range(self.hom_sizes[z, w]):
                for g in range(self.hom_sizes[y, z]):
                    hg = self.comp[y, z, w, h, g]
                    for f in range(self.hom_sizes[x, y]):
                        if self.comp[x, y, w, hg, f] != self.comp[x, z, w, h, self.comp[x, y, z, g, f]]:
                            raise StructuralValidationError(
                                f"comp({x},{y},{z},{w})", f"not associative at ({h},{g},{f})")
        return self

    @classmethod
    def from_monoid(cls, table, name=""):
        """One object; ``table[g][f]`` is ``g . f``.  The unit is found, not assumed."""
        n = len(table)
        units = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
        if not units:
            raise StructuralValidationError("unit", "monoid table has no two-sided unit")
        comp = {(0, 0, 0, g, f): table[g][f] for g in range(n) for f in range(n)}
        return cls(1, {(0, 0): n}, (units[0],), comp, name)

    @classmethod
    def from_poset(cls, n, leq, name=""):
        """Thin category with an arrow ``x -> y`` iff ``leq(x, y)``."""
        sizes = {(x, y): int(bool(leq(x, y))) for x in range(n) for y in range(n)}
        comp = {(x, y, z, 0, 0): 0 for x in range(n) for y in range(n) for z in range(n)
                if sizes[x, y] and sizes[y, z]}
        return cls(n, sizes, (0,) * n, comp, name)


def aks_embed(D: FiniteOneCategory) -> ConcreteCategory:
    """Realise ``x`` as the set of pairs ``(y, f: y -> x)``; ``f`` acts by postcomposition."""
    D.validate()
    n = D.n_objects
    sigma = [[(y, f) for y in range(n) for f in range(D.hom_sizes[y, x])] for x in range(n)]
    sigma_index = [{p: i for i, p in enumerate(s)} for s in sigma]
    obj_plus = [discrete(len(s)) for s in sigma]

    def realise(x, y, c):
        table = [sigma_index[y][z, D.comp[z, x, y, c, g]] for z, g in sigma[x]]
        return functor_from_tables(obj_plus[x], obj_plus[y], table)

    return strict_category(n, obj_plus, D.hom_sizes, realise, lambda x: D.unit[x],
                           lambda x, y, z, g, f: D.comp[x, y, z, g, f], name=f"AKS({D.name})")


def _monoid_tables(n):
    for flat in cartesian(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if not any(all(t[e][a] == a == t[a][e] for a in range(n)) for e in range(n)):
            continue
        if all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n)):
            yield tuple(tuple(r) for r in t)


def _relabel(t, p):
    n = len(t)
    inv = [0] * n
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(tuple(p[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


def monoids_up_to_iso(n) -> List[Tuple[Tuple[int, ...], ...]]:
    """One multiplication table per isomorphism class of ``n``-element monoids.

    Brute force over all ``n**(n*n)`` tables; the representative is the
    lexicographically least relabelling.
    """
    reps = set()
    perms = list(permutations(range(n)))
    for t in _monoid_tables(n):
        reps.add(min(_relabel(t, p) for p in perms))
    return sorted(reps)


def search_exact_level_two(max_size=3):
    """First monoid (by size, then table) whose AKS embedding needs level exactly 2.

    Returns ``(table, report)`` or ``None``.
    """
    for n in range(1, max_size + 1):
        for t in monoids_up_to_iso(n):
            r = conformity_report(aks_embed(FiniteOneCategory.from_monoid(t)))
            if r.minimal_level == 2:
                return t, r
    return None


# types as categories ----------------------------------------------------------------------


def slice_groupoid(X: FinGroupoid, x) -> FinGroupoid:
    """Pairs ``(z, e: z -> x)``; a morphism is ``psi: z -> z'`` with ``e' . psi == e``."""
    objs = [(X.src[e], e) for e in X.morphisms if X.tgt[e] == x]
    mors = []
    for i, (z, e) in enumerate(objs):
        for j, (z2, e2) in enumerate(objs):
            for psi in X.hom(z, z2):
                if X.compose(e2, psi) == e:
                    mors.append((i, j, (i, j, psi)))
    return FinGroupoid.build(objs, mors, lambda i: (i, i, X.identities[objs[i][0]]),
                             lambda b, a: (a[0], b[1], X.compose(b[2], a[2])))


TYPE_DIVERGENCE = ("nontrivial automorphisms: each slice realisation is contractible, so the "
                   "fiber of the hom realisation is the whole hom set and the level is 2, not the "
                   "level 1 claimed for arbitrary types")


def type_as_category(X: FinGroupoid) -> ConcreteCategory:
    """Objects of ``X`` with the discrete set of its morphisms as homs; realisations are slices."""
    X.validate()
    n = X.n_objects
    obj_plus = [slice_groupoid(X, x) for x in range(n)]
    index = [{lab: i for i, lab in enumerate(S.object_labels)} for S in obj_plus]
    mindex = [{lab: m for m, lab in enumerate(S.morphism_labels)} for S in obj_plus]
    homs = {(x, y): list(X.hom(x, y)) for x in range(n) for y in range(n)}
    pos = {k: {e: i for i, e in enumerate(v)} for k, v in homs.items()}

    def realise(x, y, c):
        e = homs[x, y][c]
        Sx, Sy = obj_plus[x], obj_plus[y]
        obj = [index[y][z, X.compose(e, eps)] for z, eps in Sx.object_labels]
        mor = [mindex[y][obj[i], obj[j], psi] for i, j, psi in Sx.morphism_labels]
        return GFunctor(Sx, Sy, tuple(obj), tuple(mor))

    def compose(x, y, z, g, f):
        return pos[x, z][X.compose(homs[y, z][g], homs[x, y][f])]

    notes = ()
    if any(len(X.loops(x)) > 1 for x in X.objects):
        notes = (TYPE_DIVERGENCE,)
    return strict_category(n, obj_plus, {k: len(v) for k, v in homs.items()}, realise,
                           lambda x: pos[x, x][X.identities[x]], compose, name="type", notes=notes)


# truncated maps ---------------------------------------------------------------------------


def restrict_groupoid(G: FinGroupoid, keep) -> FinGroupoid:
    """Full subgroupoid on the objects in ``keep`` (in increasing order), labels preserved."""
    keep = sorted(keep)
    new = {x: i for i, x in enumerate(keep)}
    ms = [m for m in G.morphisms if G.src[m] in new and G.tgt[m] in new]
    mnew = {m: i for i, m in enumerate(ms)}
    comp = {(mnew[g], mnew[f]): mnew[h] for (g, f), h in G.comp.items() if g in mnew and f in mnew}
    olab = None if G.object_labels is None else [G.object_labels[x] for x in keep]
    mlab = None if G.morphism_labels is None else [G.morphism_labels[m] for m in ms]
    return FinGroupoid(len(keep), [new[G.src[m]] for m in ms], [new[G.tgt[m]] for m in ms],
                       [mnew[G.identities[x]] for x in keep], comp, olab, mlab)


def _selected_category(obj_plus, select, name):
    """Full subcategory of groupoids whose homs keep the functors accepted by ``select``."""
    n = len(obj_plus)
    hom, hom_plus = {}, {}
    for x, y in cartesian(range(n), range(n)):
        FG = functor_groupoid(obj_plus[x], obj_plus[y])
        H = restrict_groupoid(FG, [i for i, F in enumerate(FG.object_labels) if select(F)])
        hom[x, y] = H
        hom_plus[x, y] = Realisation(H, obj_plus[x], obj_plus[y], H.object_labels,
                                     H.morphism_labels)
    ident = []
    for x in range(n):
        I = identity_functor(obj_plus[x])
        if not select(I):
            raise AssertionError(f"identity on object {x} was not selected")
        ident.append(FiberElement(hom[x, x].label_index(I), identity_natiso(I)))
    cmp = {}
    for x, y, z in cartesian(range(n), repeat=3):
        for g, G in enumerate(hom[y, z].object_labels):
            for f, F in enumerate(hom[x, y].object_labels):
                GF = compose_functors(G, F)
                if not select(GF):
                    raise AssertionError(f"composite in hom({x},{z}) was not selected")
                cmp[x, y, z, g, f] = FiberElement(hom[x, z].label_index(GF), identity_natiso(GF))
    return ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp, name=name)


def truncated_maps_category(Gs, n) -> ConcreteCategory:
    """Groupoids ``Gs`` with only the ``n``-truncated functors between them."""
    if n not in (-2, -1, 0, 1):
        raise RejectedInput(f"truncation level {n} outside -2..1")
    return _selected_category(list(Gs), lambda F: trunc_level_functor(F) <= n,
                              name=f"{n}-truncated maps")


# pointed groupoids ------------------------------------------------------------------------


@dataclass(frozen=True)
class PointedGroupoid:
    base: FinGroupoid
    basepoint: int

    def __post_init__(self):
        if self.basepoint not in self.base.objects:
            raise RejectedInput(f"basepoint {self.basepoint} is not an object")


@dataclass
class PointedObstruction:
    """Fibers of the forgetful realisation with two or more components."""
    witnesses: Dict[Tuple[int, int], FiberWitness] = field(default_factory=dict)

    @property
    def fails_level_one(self):
        return bool(self.witnesses)


def _pointed_hom(P: PointedGroupoid, Q: PointedGroupoid, truncate):
    X, Y, p, q = P.base, Q.base, P.basepoint, Q.basepoint
    FG = functor_groupoid(X, Y)
    comps = Y.components()
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    if truncate == -1:
        H = restrict_groupoid(FG, [i for i, F in enumerate(FG.object_labels)
                                   if comp_of[F.obj_map[p]] == comp_of[q]])
        return H, list(H.object_labels), list(H.morphism_labels)
    objs = [(i, phi) for i, F in enumerate(FG.object_labels) for phi in Y.hom(F.obj_map[p], q)]
    mors = []
    for a, (i, phi) in enumerate(objs):
        for b, (j, phi2) in enumerate(objs):
            for m in FG.hom(i, j):
                alpha = FG.morphism_labels[m]
                if Y.compose(phi2, alpha.components[p]) == phi:
                    mors.append((a, b, (a, b, m)))
    H = FinGroupoid.build(objs, mors, lambda a: (a, a, FG.identities[objs[a][0]]),
                          lambda s, t: (t[0], s[1], FG.compose(s[2], t[2])))
    fs = [FG.object_labels[i] for i, _ in objs]
    alphas = [FG.morphism_labels[lab[2]] for lab in H.morphism_labels]
    return H, fs, alphas


def pointed_category(Ps, truncate=None):
    """Pointed groupoids with pointed functors ``(F, phi: F(p) -> q)``; returns ``(C, obstruction)``.

    The hom groupoid has morphisms the natural isos ``alpha`` with
    ``phi' . alpha_p == phi``; the realisation forgets ``phi``.  With
    ``truncate=-1`` the datum ``phi`` is replaced by the proposition that
    ``F(p)`` and ``q`` are connected.
    """
    if truncate not in (None, -1):
        raise RejectedInput("truncate must be None or -1")
    Ps = list(Ps)
    n = len(Ps)
    obj_plus = [P.base for P in Ps]
    hom, hom_plus, labels = {}, {}, {}
    for x, y in cartesian(range(n), range(n)):
        H, fs, alphas = _pointed_hom(Ps[x], Ps[y], truncate)
        hom[x, y] = H
        hom_plus[x, y] = Realisation(H, obj_plus[x], obj_plus[y], fs, alphas)
        if truncate is None:
            labels[x, y] = {lab: i for i, lab in enumerate(H.object_labels)}

    def lookup(x, y, F, phi):
        if truncate == -1:
            return hom[x, y].label_index(F)
        return labels[x, y][functor_groupoid_index(obj_plus[x], obj_plus[y], F), phi]

    ident = []
    for x in range(n):
        I = identity_functor(obj_plus[x])
        p = Ps[x].basepoint
        c = lookup(x, x, I, obj_plus[x].identities[p])
        ident.append(FiberElement(c, identity_natiso(I)))
    cmp = {}
    for x, y, z in cartesian(range(n), repeat=3):
        Z = obj_plus[z]
        for g, glab in enumerate(hom[y, z].object_labels):
            G = hom_plus[y, z].objects[g]
            for f, flab in enumerate(hom[x, y].object_labels):
                F = hom_plus[x, y].objects[f]
                GF = compose_functors(G, F)
                phi = None if truncate == -1 else Z.compose(glab[1], G.mor_map[flab[1]])
                c = lookup(x, z, GF, phi)
                cmp[x, y, z, g, f] = FiberElement(c, identity_natiso(GF))
    name = "pointed" if truncate is None else "pointed, truncated"
    C = ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp, name=name)
    obstruction = PointedObstruction()
    if truncate is None:
        for x, y in C.pairs():
            if len(obj_plus[y].loops(Ps[y].basepoint)) > 1:
                _, w = hom_plus[x, y].level_and_witness()
                if w is not None and w.n_components >= 2:
                    obstruction.witnesses[x, y] = w
    return C, obstruction


_FG_CACHE: Dict[tuple, Dict[tuple, int]] = {}


def functor_groupoid_index(X: FinGroupoid, Y: FinGroupoid, F: GFunctor) -> int:
    """Position of ``F`` in the canonical functor enumeration ``X -> Y``."""
    k = (X.key(), Y.key())
    if k not in _FG_CACHE:
        _FG_CACHE[k] = {G.key: i for i, G in enumerate(iter_functors(X, Y))}
    return _FG_CACHE[k][F.key]


def pointed_level_prediction(Ps) -> int:
    """Least level from the shape of the targets alone.

    A target with a nontrivial loop at its point contributes a set-sized
    fiber, a disconnected target an empty fiber, anything else a
    contractible one.
    """
    worst = CONTRACTIBLE
    for Q in Ps:
        if len(Q.base.loops(Q.basepoint)) > 1:
            worst = max(worst, 0)
        elif len(Q.base.components()) > 1:
            worst = max(worst, -1)
    return 2 + worst if Ps else 0


# unions and products -----------------------------------------------------------------------


def _level_notice(C, role):
    levels, _ = per_pair_levels(C)
    conf = 2 + max(levels.values(), default=CONTRACTIBLE)
    if conf < 1:
        return (f"{role} input {C.name or 'category'} is only {conf}-concrete; "
                f"the result is certified at level 1",)
    return ()


def _shift_cmp(table, offset, arity):
    return {tuple(k[i] + offset if i < arity else k[i] for i in range(len(k))): v
            for k, v in table.items()}


def disjoint_union(C: ConcreteCategory, D: ConcreteCategory) -> ConcreteCategory:
    """Objects of ``C`` followed by those of ``D``; homs across the summands are empty."""
    nc, n = C.n_objects, C.n_objects + D.n_objects
    obj_plus = list(C.obj_plus) + list(D.obj_plus)
    hom, hom_plus = {}, {}
    for x, y in cartesian(range(n), range(n)):
        if x < nc and y < nc:
            hom[x, y], hom_plus[x, y] = C.hom[x, y], C.hom_plus[x, y]
        elif x >= nc and y >= nc:
            hom[x, y], hom_plus[x, y] = D.hom[x - nc, y - nc], D.hom_plus[x - nc, y - nc]
        else:
            E = empty()
            hom[x, y] = E
            hom_plus[x, y] = Realisation(E, obj_plus[x], obj_plus[y], (), ())
    ident = list(C.ident) + list(D.ident)
    cmp = dict(C.cmp)
    cmp.update(_shift_cmp(D.cmp, nc, 3))
    notes = _level_notice(C, "left") + _level_notice(D, "right")
    return ConcreteCategory(
        n, obj_plus, hom, hom_plus, ident, cmp, name=f"{C.name} + {D.name}", notes=notes,
        assoc={**C.assoc, **_shift_cmp(D.assoc, nc, 4)},
        cmp_mor={**C.cmp_mor, **_shift_cmp(D.cmp_mor, nc, 3)},
        left_unitor={**C.left_unitor, **_shift_cmp(D.left_unitor, nc, 2)},
        right_unitor={**C.right_unitor, **_shift_cmp(D.right_unitor, nc, 2)})


def product(C: ConcreteCategory, D: ConcreteCategory) -> ConcreteCategory:
    """Objects ``(x, y)`` at index ``x * |D| + y``; realised as ``objPlus x + objPlus y``."""
    nd = D.n_objects
    n = C.n_objects * nd
    split = [(x, y) for x in C.objects for y in D.objects]
    obj_plus = [coproduct(C.obj_plus[x], D.obj_plus[y]) for x, y in split]
    hom, hom_plus = {}, {}
    for a, b in cartesian(range(n), range(n)):
        (x, y), (x2, y2) = split[a], split[b]
        HC, HD = C.hom[x, x2], D.hom[y, y2]
        RC, RD = C.hom_plus[x, x2], D.hom_plus[y, y2]
        H = product_groupoid(HC, HD)
        fs = [coproduct_functor(RC.objects[f], RD.objects[g])
              for f in HC.objects for g in HD.objects]
        alphas = [coproduct_natiso(RC.morphisms[m], RD.morphisms[k])
                  for m in HC.morphisms for k in HD.morphisms]
        hom[a, b] = H
        hom_plus[a, b] = Realisation(H, obj_plus[a], obj_plus[b], fs, alphas)
    ident = []
    for a, (x, y) in enumerate(split):
        wc, wd = C.ident[x], D.ident[y]
        ident.append(FiberElement(wc.element * D.hom_size(y, y) + wd.element,
                                  coproduct_natiso(wc.path, wd.path)))
    cmp = {}
    for a, b, c in cartesian(range(n), repeat=3):
        (x, y), (x2, y2), (x3, y3) = split[a], split[b], split[c]
        ng, nf, nh = D.hom_size(y2, y3), D.hom_size(y, y2), D.hom_size(y, y3)
        for gc, gd in cartesian(C.hom_objects(x2, x3), D.hom_objects(y2, y3)):
            for fc, fd in cartesian(C.hom_objects(x, x2), D.hom_objects(y, y2)):
                wc, wd = C.cmp[x, x2, x3, gc, fc], D.cmp[y, y2, y3, gd, fd]
                cmp[a, b, c, gc * ng + gd, fc * nf + fd] = FiberElement(
                    wc.element * nh + wd.element, coproduct_natiso(wc.path, wd.path))
    notes = _level_notice(C, "left") + _level_notice(D, "right")
    return ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp,
                            name=f"{C.name} x {D.name}", notes=notes)


# fixtures ---------------------------------------------------------------------------------


def star() -> ConcreteCategory:
    """The point: one object realised as the one-point groupoid."""
    C = strict_category(1, [trivial()], {(0, 0): 1},
                        lambda x, y, c: identity_functor(trivial()), lambda x: 0,
                        lambda *a: 0, name="star")
    return C


def empty_category() -> ConcreteCategory:
    return ConcreteCategory(0, [], {}, {}, [], {}, name="empty")


def two_group_bz2(associator=0) -> ConcreteCategory:
    """One object over the point whose hom is B(Z/2); composition on morphisms is addition.

    The realisation collapses the loop, so the category needs level 3.  A
    nonzero ``associator`` breaks the pentagon and triangle identities.
    """
    P = trivial()
    H = bz2()
    I = identity_functor(P)
    R = Realisation(H, P, P, [I], [identity_natiso(I)] * 2)
    ident = [FiberElement(0, identity_natiso(I))]
    cmp = {(0, 0, 0, 0, 0): FiberElement(0, identity_natiso(I))}
    return ConcreteCategory(
        1, [P], {(0, 0): H}, {(0, 0): R}, ident, cmp, name=f"B(Z/2) 2-group, a={associator}",
        assoc={(0, 0, 0, 0, 0, 0, 0): associator},
        cmp_mor={(0, 0, 0, a, b): (a + b) % 2 for a in range(2) for b in range(2)},
        left_unitor={(0, 0, 0): 0}, right_unitor={(0, 0, 0): 0})


def unlawful_fixture() -> ConcreteCategory:
    """Well-typed witnesses that break the unit law: two morphisms, composition always picks 1."""
    P = trivial()
    return strict_category(1, [P], {(0, 0): 2}, lambda x, y, c: identity_functor(P),
                           lambda x: 0, lambda *a: 1, name="unlawful")


def collision_fixture() -> ConcreteCategory:
    """A lawful 2-element monoid whose two elements share a realisation (negative control)."""
    P = trivial()
    return strict_category(1, [P], {(0, 0): 2}, lambda x, y, c: identity_functor(P),
                           lambda x: 0, lambda x, y, z, g, f: g ^ f, name="collision")


def aks_fixtures() -> List[FiniteOneCategory]:
    """Small categories with at most three objects and hom sets of size at most three."""
    out = [
        FiniteOneCategory.from_poset(1, lambda x, y: True, "terminal"),
        FiniteOneCategory.from_poset(2, lambda x, y: x <= y, "arrow"),
        FiniteOneCategory.from_poset(2, lambda x, y: x == y, "two points"),
        FiniteOneCategory.from_poset(3, lambda x, y: x <= y, "3-chain"),
        FiniteOneCategory.from_poset(3, lambda x, y: x == y or x == 0, "span shape"),
        FiniteOneCategory.from_poset(2, lambda x, y: True, "iso pair"),
        FiniteOneCategory.from_monoid(((0, 1), (1, 0)), "Z/2"),
        FiniteOneCategory.from_monoid(((0, 1), (1, 1)), "idempotent"),
        FiniteOneCategory.from_monoid(((0, 1, 2), (1, 2, 0), (2, 0, 1)), "Z/3"),
    ]
    # two parallel arrows 0 => 1
    sizes = {(0, 0): 1, (1, 1): 1, (0, 1): 2, (1, 0): 0}
    comp = {(0, 0, 0, 0, 0): 0, (1, 1, 1, 0, 0): 0}
    for f in range(2):
        comp[0, 0, 1, f, 0] = f
        comp[0, 1, 1, 0, f] = f
    out.append(FiniteOneCategory(2, sizes, (0, 0), comp, "parallel pair"))
    # an object with a retraction: e idempotent on 1, r: 0 -> 1
    sizes = {(0, 0): 1, (0, 1): 1, (1, 0): 0, (1, 1): 2}
    comp = {(0, 0, 0, 0, 0): 0, (0, 0, 1, 0, 0): 0, (0, 1, 1, 0, 0): 0, (0, 1, 1, 1, 0): 0}
    for g, f in cartesian(range(2), range(2)):
        comp[1, 1, 1, g, f] = g | f
    out.append(FiniteOneCategory(2, sizes, (0, 0), comp, "idempotent under arrow"))
    for D in out:
        D.validate()
    return out
