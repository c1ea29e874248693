"""Finite groupoids as exact models of 1-truncated types.

A :class:`FinGroupoid` has objects ``0..n-1`` and morphisms with global ids;
composition is a flat table keyed by ``(g, f)`` meaning ``g . f``.  Functors
model functions between types, natural isomorphisms model paths between
functions, and :func:`homotopy_fiber` / :func:`trunc_level_functor` give the
truncation level of a map.
"""
from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from .config import check_cap, get_cap
from .errors import EnumerationOverflow, RejectedInput, StructuralValidationError
from .finset import FinSet

CONTRACTIBLE = -2
PROPOSITION = -1
SET = 0
GROUPOID = 1


class FinGroupoid:
    """Finite groupoid with integer objects and globally numbered morphisms.

    ``comp`` maps ``(g, f)`` to ``g . f`` for every pair with
    ``tgt[f] == src[g]``.  Labels are optional and ignored by equality; the
    constructions that build groupoids out of richer data (functor
    groupoids, fibers, slices) use them to remember what each index means.
    """

    __slots__ = ("n_objects", "src", "tgt", "identities", "_comp", "object_labels",
                 "morphism_labels", "_hom", "_out", "_inv", "_key", "_hash", "_label_index")

    def __init__(self, n_objects, src, tgt, identities, comp, object_labels=None,
                 morphism_labels=None):
        self.n_objects = int(n_objects)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identities = tuple(identities)
        self._comp = dict(comp)
        self.object_labels = None if object_labels is None else tuple(object_labels)
        self.morphism_labels = None if morphism_labels is None else tuple(morphism_labels)
        if len(self.src) != len(self.tgt):
            raise StructuralValidationError("morphisms", "src and tgt lengths differ")
        if len(self.identities) != self.n_objects:
            raise StructuralValidationError("identities", "need one identity per object")
        hom, out = {}, {}
        for m, (a, b) in enumerate(zip(self.src, self.tgt)):
            if not (0 <= a < self.n_objects and 0 <= b < self.n_objects):
                raise StructuralValidationError(f"morphism {m}", "endpoint out of range")
            hom.setdefault((a, b), []).append(m)
            out.setdefault(a, []).append(m)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._out = {k: tuple(v) for k, v in out.items()}
        self._inv = None
        self._key = None
        self._hash = None
        self._label_index = None

    # construction helpers -------------------------------------------------

    @classmethod
    def build(cls, object_labels, morphisms, identity, compose):
        """Assemble a groupoid from labelled data.

        ``morphisms`` is a list of ``(src, tgt, label)`` with distinct labels,
        ``identity(x)`` returns the label of the identity at object ``x`` and
        ``compose(g_label, f_label)`` the label of ``g . f``.
        """
        object_labels = list(object_labels)
        index = {}
        src, tgt, labels = [], [], []
        for a, b, lab in morphisms:
            if lab in index:
                raise StructuralValidationError("morphisms", f"duplicate label {lab!r}")
            index[lab] = len(labels)
            src.append(a)
            tgt.append(b)
            labels.append(lab)
        try:
            ids = [index[identity(x)] for x in range(len(object_labels))]
        except KeyError as e:
            raise StructuralValidationError("identities", f"identity label {e} missing")
        out_of = {}
        for m, a in enumerate(src):
            out_of.setdefault(a, []).append(m)
        comp = {}
        for f in range(len(labels)):
            for g in out_of.get(tgt[f], ()):
                lab = compose(labels[g], labels[f])
                if lab not in index:
                    raise StructuralValidationError(
                        "compose", f"{labels[g]!r} . {labels[f]!r} -> unknown {lab!r}")
                comp[g, f] = index[lab]
        return cls(len(object_labels), src, tgt, ids, comp, object_labels, labels)

    # basic structure --------------------------------------------------------

    @property
    def n_morphisms(self):
        return len(self.src)

    @property
    def objects(self):
        return range(self.n_objects)

    @property
    def morphisms(self):
        return range(len(self.src))

    @property
    def comp(self):
        return self._comp

    def hom(self, x, y) -> Tuple[int, ...]:
        return self._hom.get((x, y), ())

    def compose(self, g, f):
        try:
            return self._comp[g, f]
        except KeyError:
            raise RejectedInput(f"morphisms {g} and {f} are not composable") from None

    def identity(self, x):
        return self.identities[x]

    def inverse(self, m):
        if self._inv is None:
            inv = []
            for k in self.morphisms:
                a = self.src[k]
                found = None
                for n in self.hom(self.tgt[k], a):
                    if self._comp.get((n, k)) == self.identities[a]:
                        found = n
                        break
                inv.append(found)
            self._inv = tuple(inv)
        return self._inv[m]

    def loops(self, x):
        return self.hom(x, x)

    @property
    def is_discrete(self):
        return self.n_morphisms == self.n_objects

    def components(self):
        """Connected components as sorted lists of objects, ordered by least member."""
        parent = list(range(self.n_objects))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in zip(self.src, self.tgt):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = {}
        for x in self.objects:
            groups.setdefault(find(x), []).append(x)
        return [groups[r] for r in sorted(groups)]

    def connected(self, x, y):
        return bool(self.hom(x, y))

    def label_index(self, label):
        """Object index carrying ``label`` (or of a functor's table key)."""
        if self._label_index is None:
            if self.object_labels is None:
                raise RejectedInput("groupoid has no object labels")
            self._label_index = {_label_key(lab): i for i, lab in enumerate(self.object_labels)}
        return self._label_index[_label_key(label)]

    # equality ---------------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (self.n_objects, self.src, self.tgt, self.identities,
                         tuple(sorted(self._comp.items())))
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinGroupoid):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self):
        return f"FinGroupoid(objects={self.n_objects}, morphisms={self.n_morphisms})"

    # validation -------------------------------------------------------------

    def validate(self):
        """Check the groupoid axioms exhaustively; raise on the first failure."""
        for x, i in enumerate(self.identities):
            if not (0 <= i < self.n_morphisms) or self.src[i] != x or self.tgt[i] != x:
                raise StructuralValidationError(f"identity {x}", "not a loop at its object")
        for f in self.morphisms:
            for g in self.morphisms:
                composable = self.tgt[f] == self.src[g]
                if composable != ((g, f) in self._comp):
                    raise StructuralValidationError(
                        "compose", f"table wrong on composability of ({g}, {f})")
                if composable:
                    h = self._comp[g, f]
                    if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                        raise StructuralValidationError(
                            "compose", f"({g}, {f}) -> {h} has wrong endpoints")
        for f in self.morphisms:
            a, b = self.src[f], self.tgt[f]
            if self._comp[self.identities[b], f] != f or self._comp[f, self.identities[a]] != f:
                raise StructuralValidationError(f"morphism {f}", "identity is not a unit")
        for f in self.morphisms:
            for g in self.hom_from(self.tgt[f]):
                gf = self._comp[g, f]
                for h in self.hom_from(self.tgt[g]):
                    if self._comp[h, gf] != self._comp[self._comp[h, g], f]:
                        raise StructuralValidationError(
                            "compose", f"associativity fails on ({h}, {g}, {f})")
        for f in self.morphisms:
            n = self.inverse(f)
            if n is None or self._comp[f, n] != self.identities[self.tgt[f]]:
                raise StructuralValidationError(f"morphism {f}", "has no two-sided inverse")
        return self

    def hom_from(self, x):
        return self._out.get(x, ())


def _label_key(label):
    if isinstance(label, GFunctor):
        return ("functor", label.obj_map, label.mor_map)
    return label


# standard groupoids -------------------------------------------------------------


def discrete(S) -> FinGroupoid:
    n = S.size if isinstance(S, FinSet) else int(S)
    return FinGroupoid(n, range(n), range(n), range(n), {(i, i): i for i in range(n)})


def empty() -> FinGroupoid:
    return discrete(0)


def trivial() -> FinGroupoid:
    """The one-object groupoid with only the identity (the point)."""
    return discrete(1)


def group_groupoid(table) -> FinGroupoid:
    """One-object groupoid from a group multiplication table, identity element 0."""
    n = len(table)
    comp = {(g, f): table[g][f] for g in range(n) for f in range(n)}
    return FinGroupoid(1, [0] * n, [0] * n, [0], comp)


def cyclic(n) -> FinGroupoid:
    """Delooping of the cyclic group of order ``n``; ``cyclic(2)`` is B(Z/2)."""
    return group_groupoid([[(a + b) % n for b in range(n)] for a in range(n)])


def bz2() -> FinGroupoid:
    return cyclic(2)


def indiscrete(n) -> FinGroupoid:
    """Contractible groupoid on ``n`` objects: exactly one morphism between any two."""
    labels = [(a, b) for a in range(n) for b in range(n)]
    return FinGroupoid.build(range(n), [(a, b, (a, b)) for a, b in labels],
                             lambda x: (x, x), lambda g, f: (f[0], g[1]))


def coproduct(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    """Disjoint union; objects and morphisms of ``H`` are shifted past those of ``G``."""
    on, mn = G.n_objects, G.n_morphisms
    comp = dict(G.comp)
    comp.update({(g + mn, f + mn): h + mn for (g, f), h in H.comp.items()})
    return FinGroupoid(on + H.n_objects,
                       G.src + tuple(a + on for a in H.src),
                       G.tgt + tuple(b + on for b in H.tgt),
                       G.identities + tuple(i + mn for i in H.identities), comp)


def product_groupoid(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    """Cartesian product; object ``(a, b)`` has index ``a * |H| + b``."""
    objs = [(a, b) for a in G.objects for b in H.objects]
    mors = [(G.src[f] * H.n_objects + H.src[g], G.tgt[f] * H.n_objects + H.tgt[g], (f, g))
            for f in G.morphisms for g in H.morphisms]
    return FinGroupoid.build(
        objs, mors,
        lambda x: (G.identities[x // max(H.n_objects, 1)], H.identities[x % max(H.n_objects, 1)]),
        lambda q, p: (G.compose(q[0], p[0]), H.compose(q[1], p[1])))


def loop_group(G: FinGroupoid, x) -> list:
    return list(G.loops(x))


# functors and natural isomorphisms ----------------------------------------------


@dataclass(frozen=True)
class GFunctor:
    dom: FinGroupoid
    cod: FinGroupoid
    obj_map: Tuple[int, ...]
    mor_map: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", tuple(self.obj_map))
        object.__setattr__(self, "mor_map", tuple(self.mor_map))

    def __repr__(self):
        return f"GFunctor(obj={list(self.obj_map)}, mor={list(self.mor_map)})"

    @property
    def key(self):
        return self.obj_map, self.mor_map

    def validate(self):
        D, C = self.dom, self.cod
        if len(self.obj_map) != D.n_objects or len(self.mor_map) != D.n_morphisms:
            raise StructuralValidationError("functor", "table sizes do not match domain")
        for x, y in enumerate(self.obj_map):
            if not 0 <= y < C.n_objects:
                raise StructuralValidationError("functor", f"object {x} sent out of range")
        for m, k in enumerate(self.mor_map):
            if not 0 <= k < C.n_morphisms:
                raise StructuralValidationError("functor", f"morphism {m} sent out of range")
            if C.src[k] != self.obj_map[D.src[m]] or C.tgt[k] != self.obj_map[D.tgt[m]]:
                raise StructuralValidationError("functor", f"morphism {m} endpoints not preserved")
        for x in D.objects:
            if self.mor_map[D.identities[x]] != C.identities[self.obj_map[x]]:
                raise StructuralValidationError("functor", f"identity at {x} not preserved")
        for (g, f), h in D.comp.items():
            if self.mor_map[h] != C.compose(self.mor_map[g], self.mor_map[f]):
                raise StructuralValidationError("functor", f"composite ({g}, {f}) not preserved")
        return self


def identity_functor(G: FinGroupoid) -> GFunctor:
    return GFunctor(G, G, tuple(G.objects), tuple(G.morphisms))


def compose_functors(G: GFunctor, F: GFunctor) -> GFunctor:
    """``G . F``."""
    if F.cod != G.dom:
        raise RejectedInput("functors are not composable")
    return GFunctor(F.dom, G.cod, tuple(G.obj_map[y] for y in F.obj_map),
                    tuple(G.mor_map[k] for k in F.mor_map))


def functor_from_tables(dom, cod, obj_map, mor_map=None) -> GFunctor:
    """Build a functor; ``mor_map`` may be omitted when ``dom`` is discrete."""
    if mor_map is None:
        if not dom.is_discrete:
            raise RejectedInput("morphism table required for a non-discrete domain")
        mor_map = [cod.identities[obj_map[x]] for x in dom.objects]
    return GFunctor(dom, cod, tuple(obj_map), tuple(mor_map))


def coproduct_functor(F: GFunctor, G: GFunctor) -> GFunctor:
    """``F + G`` between the coproducts of domains and codomains."""
    on, mn = F.cod.n_objects, F.cod.n_morphisms
    return GFunctor(coproduct(F.dom, G.dom), coproduct(F.cod, G.cod),
                    F.obj_map + tuple(y + on for y in G.obj_map),
                    F.mor_map + tuple(k + mn for k in G.mor_map))


@dataclass(frozen=True)
class NatIso:
    """Natural isomorphism ``source => target``; ``components[x]: source(x) -> target(x)``."""
    source: GFunctor
    target: GFunctor
    components: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __repr__(self):
        return f"NatIso({list(self.components)})"

    def validate(self):
        F, G = self.source, self.target
        if F.dom != G.dom or F.cod != G.cod:
            raise StructuralValidationError("natural iso", "endpoint functors differ in type")
        C = F.cod
        if len(self.components) != F.dom.n_objects:
            raise StructuralValidationError("natural iso", "wrong number of components")
        for x, a in enumerate(self.components):
            if not 0 <= a < C.n_morphisms or C.src[a] != F.obj_map[x] or C.tgt[a] != G.obj_map[x]:
                raise StructuralValidationError("natural iso", f"component at {x} has wrong ends")
        D = F.dom
        for m in D.morphisms:
            x, y = D.src[m], D.tgt[m]
            lhs = C.compose(G.mor_map[m], self.components[x])
            rhs = C.compose(self.components[y], F.mor_map[m])
            if lhs != rhs:
                raise StructuralValidationError("natural iso", f"naturality fails at morphism {m}")
        return self


def identity_natiso(F: GFunctor) -> NatIso:
    return NatIso(F, F, tuple(F.cod.identities[y] for y in F.obj_map))


def vcompose(beta: NatIso, alpha: NatIso) -> NatIso:
    """Vertical composite ``beta . alpha``."""
    if alpha.target != beta.source:
        raise RejectedInput("natural isos are not composable")
    C = alpha.source.cod
    return NatIso(alpha.source, beta.target,
                  tuple(C.compose(b, a) for b, a in zip(beta.components, alpha.components)))


def natiso_inverse(alpha: NatIso) -> NatIso:
    C = alpha.source.cod
    return NatIso(alpha.target, alpha.source, tuple(C.inverse(a) for a in alpha.components))


def hcompose(alpha: NatIso, beta: NatIso) -> NatIso:
    """Horizontal composite ``alpha * beta : G.F => G'.F'`` for ``alpha: G => G'``, ``beta: F => F'``."""
    G, G2 = alpha.source, alpha.target
    F, F2 = beta.source, beta.target
    Z = G.cod
    comps = tuple(Z.compose(alpha.components[F2.obj_map[x]], G.mor_map[beta.components[x]])
                  for x in F.dom.objects)
    return NatIso(compose_functors(G, F), compose_functors(G2, F2), comps)


def coproduct_natiso(alpha: NatIso, beta: NatIso) -> NatIso:
    mn = alpha.source.cod.n_morphisms
    return NatIso(coproduct_functor(alpha.source, beta.source),
                  coproduct_functor(alpha.target, beta.target),
                  alpha.components + tuple(c + mn for c in beta.components))


# enumeration ----------------------------------------------------------------------


def _composition_constraints(G: FinGroupoid):
    """Non-identity composition facts ``(g, f, h)`` grouped by ``max(g, f, h)``."""
    ids = set(G.identities)
    by_max = [[] for _ in G.morphisms]
    for (g, f), h in G.comp.items():
        if g in ids or f in ids:
            continue
        by_max[max(g, f, h)].append((g, f, h))
    return by_max


def iter_functors(G: FinGroupoid, H: FinGroupoid, check=True):
    """All functors ``G -> H`` in lexicographic order of ``(obj_map, mor_map)``.

    ``check=False`` skips the up-front cap test for callers that stop early.
    """
    if check:
        check_cap(f"object maps {G.n_objects}->{H.n_objects}", H.n_objects ** G.n_objects)
    constraints = _composition_constraints(G)
    ids = {i: x for x, i in enumerate(G.identities)}
    n = G.n_morphisms
    for obj_map in product(range(H.n_objects), repeat=G.n_objects):
        cands = []
        for m in G.morphisms:
            if m in ids:
                cands.append((H.identities[obj_map[ids[m]]],))
            else:
                cands.append(H.hom(obj_map[G.src[m]], obj_map[G.tgt[m]]))
        if any(not c for c in cands):
            continue
        mor = [0] * n
        choice = [0] * n
        m = 0
        while m >= 0:
            if m == n:
                yield GFunctor(G, H, obj_map, tuple(mor))
                m -= 1
                if m >= 0:
                    choice[m] += 1
                continue
            if choice[m] >= len(cands[m]):
                choice[m] = 0
                m -= 1
                if m >= 0:
                    choice[m] += 1
                continue
            mor[m] = cands[m][choice[m]]
            if all(mor[h] == H.compose(mor[g], mor[f]) for g, f, h in constraints[m]):
                m += 1
            else:
                choice[m] += 1


def brute_force_functor_count(G: FinGroupoid, H: FinGroupoid) -> int:
    """Independent oracle: test every assignment of objects and morphisms."""
    check_cap("brute-force functor count",
              H.n_objects ** G.n_objects * max(H.n_morphisms, 1) ** G.n_morphisms)
    count = 0
    for obj_map in product(range(H.n_objects), repeat=G.n_objects):
        for mor_map in product(range(H.n_morphisms), repeat=G.n_morphisms):
            try:
                GFunctor(G, H, obj_map, mor_map).validate()
            except StructuralValidationError:
                continue
            count += 1
    return count


def natural_isos(F: GFunctor, F2: GFunctor):
    """All natural isos ``F => F2`` in lexicographic order of components."""
    C = F.cod
    choices = [C.hom(a, b) for a, b in zip(F.obj_map, F2.obj_map)]
    size = 1
    for c in choices:
        size *= len(c)
    if size == 0:
        return
    check_cap("natural transformation components", size)
    D = F.dom
    ids = set(D.identities)
    checks = [(m, D.src[m], D.tgt[m]) for m in D.morphisms if m not in ids]
    for comps in product(*choices):
        if all(C.compose(F2.mor_map[m], comps[x]) == C.compose(comps[y], F.mor_map[m])
               for m, x, y in checks):
            yield NatIso(F, F2, comps)


def first_natiso(F: GFunctor, F2: GFunctor) -> Optional[NatIso]:
    return next(natural_isos(F, F2), None)


def functor_groupoid(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    """Groupoid of functors ``G -> H`` (objects, in canonical order) and natural isos.

    Object labels are the :class:`GFunctor` values, morphism labels the
    :class:`NatIso` values.  Morphisms are ordered by (source index, target
    index, components).
    """
    functors = []
    cap = get_cap()
    for F in iter_functors(G, H):
        functors.append(F)
        if len(functors) > cap:
            raise EnumerationOverflow(f"functors {G!r}->{H!r}", len(functors), cap)
    mors = []
    for i, F in enumerate(functors):
        for j, F2 in enumerate(functors):
            for a in natural_isos(F, F2):
                mors.append((i, j, a))
                if len(mors) > cap:
                    raise EnumerationOverflow("natural isos", len(mors), cap)
    return FinGroupoid.build(
        functors, mors,
        lambda i: identity_natiso(functors[i]),
        lambda b, a: vcompose(b, a))


# fibers and truncation levels -----------------------------------------------------


def homotopy_fiber(F: GFunctor, h) -> FinGroupoid:
    """Groupoid of pairs ``(g, phi: F(g) -> h)``.

    A morphism ``(g, phi) -> (g2, phi2)`` is ``psi: g -> g2`` in the domain
    with ``phi2 . F(psi) == phi``.
    """
    D, C = F.dom, F.cod
    if not 0 <= h < C.n_objects:
        raise RejectedInput(f"{h} is not an object of the codomain")
    objs = [(g, phi) for g in D.objects for phi in C.hom(F.obj_map[g], h)]
    mors = []
    for i, (g, phi) in enumerate(objs):
        for j, (g2, phi2) in enumerate(objs):
            for psi in D.hom(g, g2):
                if C.compose(phi2, F.mor_map[psi]) == phi:
                    mors.append((i, j, (i, j, psi)))
    def ident(i):
        return (i, i, D.identities[objs[i][0]])

    def comp(b, a):
        return (a[0], b[1], D.compose(b[2], a[2]))

    return FinGroupoid.build(objs, mors, ident, comp)


def trunc_level_groupoid(G: FinGroupoid) -> int:
    if G.n_objects == 0:
        return PROPOSITION
    if any(len(G.loops(x)) > 1 for x in G.objects):
        return GROUPOID
    return CONTRACTIBLE if len(G.components()) == 1 else SET


def trunc_level_functor(F: GFunctor) -> int:
    """Largest truncation level among the fibers; -2 when the codomain is empty."""
    level = CONTRACTIBLE
    for h in F.cod.objects:
        level = max(level, trunc_level_groupoid(homotopy_fiber(F, h)))
        if level == GROUPOID:
            break
    return level


def is_fully_faithful(F: GFunctor) -> bool:
    D, C = F.dom, F.cod
    for x in D.objects:
        for y in D.objects:
            image = {F.mor_map[m] for m in D.hom(x, y)}
            if len(image) != len(D.hom(x, y)) or len(image) != len(C.hom(F.obj_map[x], F.obj_map[y])):
                return False
    return True


@dataclass(frozen=True)
class EquivalenceWitness:
    inverse: GFunctor
    unit: NatIso     # id => inverse . F
    counit: NatIso   # F . inverse => id


def is_equivalence(F: GFunctor):
    """``(True, witness)`` when every fiber is contractible, else ``(False, None)``.

    The quasi-inverse sends each ``y`` to the first object of its fiber; the
    witness is re-validated before it is returned.
    """
    if trunc_level_functor(F) != CONTRACTIBLE:
        return False, None
    D, C = F.dom, F.cod
    choice = []
    for y in C.objects:
        choice.append(next((g, phi) for g in D.objects for phi in C.hom(F.obj_map[g], y)))

    def lift(x, x2, k):
        # the unique psi: x -> x2 with F(psi) == k
        return next(psi for psi in D.hom(x, x2) if F.mor_map[psi] == k)

    obj_map = tuple(g for g, _ in choice)
    mor_map = []
    for k in C.morphisms:
        a, b = C.src[k], C.tgt[k]
        (x, phi), (x2, phi2) = choice[a], choice[b]
        target = C.compose(C.inverse(phi2), C.compose(k, phi))
        mor_map.append(lift(x, x2, target))
    G = GFunctor(C, D, obj_map, tuple(mor_map)).validate()
    GF = compose_functors(G, F)
    FG = compose_functors(F, G)
    counit = NatIso(FG, identity_functor(C), tuple(phi for _, phi in choice)).validate()
    unit_comps = tuple(lift(x, GF.obj_map[x], C.inverse(choice[F.obj_map[x]][1]))
                       for x in D.objects)
    unit = NatIso(identity_functor(D), GF, unit_comps).validate()
    return True, EquivalenceWitness(G, unit, counit)

