"""Arrowlike categories, cocartesian morphisms, and functors read off fibrations.

An arrowlike category has objects tagged ``A`` or ``B`` with nothing going
from a ``B`` object back to an ``A`` object.  When every ``A`` object has a
cocartesian morphism into ``B`` the category encodes a functor from the
``A`` part to the ``B`` part; :func:`graph_of_functor` builds the encoding
and :func:`extract_functor` reads it back.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from .concat import ConcreteCategory, FiberElement, Realisation, check_univalent
from .config import get_cap
from .errors import (ArrowlikeViolation, EnumerationOverflow, ExtractionError, RejectedInput,
                     StructuralValidationError)
from .fingpd import EquivalenceWitness, GFunctor, empty, identity_natiso, is_equivalence

A, B = "A", "B"


@dataclass
class ArrowlikeCategory:
    underlying: ConcreteCategory
    partition: Tuple[str, ...]

    @property
    def a_objects(self):
        return [x for x, t in enumerate(self.partition) if t == A]

    @property
    def b_objects(self):
        return [x for x, t in enumerate(self.partition) if t == B]


def check_arrowlike(C: ConcreteCategory, partition) -> ArrowlikeCategory:
    """Wrap ``C`` after checking that every hom from a ``B`` object to an ``A`` object is empty."""
    partition = tuple(partition)
    if len(partition) != C.n_objects or set(partition) - {A, B}:
        raise RejectedInput("partition must tag every object with 'A' or 'B'")
    bad = [(b, a, C.hom_objects(b, a)[0]) for b in range(C.n_objects) for a in range(C.n_objects)
           if partition[b] == B and partition[a] == A and C.hom_size(b, a)]
    if bad:
        raise ArrowlikeViolation(bad)
    return ArrowlikeCategory(C, partition)


# cocartesian morphisms ---------------------------------------------------------------------------


@dataclass
class CocartWitness:
    """``f: a -> b`` with, for each ``B`` object ``b2``, the equivalence ``hom(b, b2) -> hom(a, b2)``."""
    a: int
    b: int
    f: int
    evidence: Dict[int, EquivalenceWitness] = field(default_factory=dict)


def precomposition(C: ConcreteCategory, a, b, b2, f) -> Optional[GFunctor]:
    """``g |-> cmp(g, f)`` as a functor ``hom(b, b2) -> hom(a, b2)``; None if it is not one."""
    H, K = C.hom[b, b2], C.hom[a, b2]
    obj = tuple(C.compose(a, b, b2, g, f) for g in H.objects)
    idf = C.hom[a, b].identities[f]
    mor = []
    for alpha in H.morphisms:
        m = C.coherence.cmp_mor(a, b, b2, alpha, idf)
        if m is None:
            return None
        mor.append(m)
    F = GFunctor(H, K, obj, tuple(mor))
    try:
        F.validate()
    except StructuralValidationError:
        return None
    return F


def is_cocartesian(AC: ArrowlikeCategory, a, b, f):
    """Whether ``f`` in ``hom(a, b)`` is cocartesian; returns ``(verdict, CocartWitness or None)``."""
    C = AC.underlying
    if AC.partition[a] != A:
        raise RejectedInput(f"object {a} is not an A object")
    if AC.partition[b] != B or f not in C.hom_objects(a, b):
        raise RejectedInput(f"{f} is not a cross morphism {a} -> {b}")
    w = CocartWitness(a, b, f)
    for b2 in AC.b_objects:
        P = precomposition(C, a, b, b2, f)
        if P is None:
            return False, None
        ok, ev = is_equivalence(P)
        if not ok:
            return False, None
        w.evidence[b2] = ev
    return True, w


def cocartesian_morphisms(AC: ArrowlikeCategory, a) -> List[CocartWitness]:
    """All cocartesian morphisms out of ``a`` in canonical (target, hom) order."""
    out = []
    for b in AC.b_objects:
        for f in AC.underlying.hom_objects(a, b):
            ok, w = is_cocartesian(AC, a, b, f)
            if ok:
                out.append(w)
    return out


def is_cocartesian_fibration(AC: ArrowlikeCategory):
    found = {a: cocartesian_morphisms(AC, a) for a in AC.a_objects}
    return all(found.values()), found


# functors between discrete-hom categories ----------------------------------------------------------


@dataclass(frozen=True)
class CatFunctor:
    """Object map and per-pair morphism tables between categories with discrete homs."""
    obj_map: Tuple[int, ...]
    mor_map: Tuple[Tuple[Tuple[int, int], Tuple[int, ...]], ...]

    def table(self):
        return dict(self.mor_map)

    def __call__(self, x, y, u):
        return self.table()[x, y][u]


def make_functor(C: ConcreteCategory, D: ConcreteCategory, obj_map, mor_map) -> CatFunctor:
    """Validate strict functoriality and package the tables."""
    if not (C.has_discrete_homs and D.has_discrete_homs):
        raise RejectedInput("functor tables need categories with discrete homs")
    obj_map = tuple(obj_map)
    if len(obj_map) != C.n_objects or any(not 0 <= v < D.n_objects for v in obj_map):
        raise RejectedInput("object map has the wrong shape")
    mor = {k: tuple(v) for k, v in dict(mor_map).items()}
    for x, y in C.pairs():
        t = mor.get((x, y))
        if t is None or len(t) != C.hom_size(x, y):
            raise RejectedInput(f"morphism table for ({x},{y}) has the wrong size")
        if any(not 0 <= v < D.hom_size(obj_map[x], obj_map[y]) for v in t):
            raise RejectedInput(f"morphism table for ({x},{y}) leaves the target hom")
    for x in C.objects:
        if mor[x, x][C.identity(x)] != D.identity(obj_map[x]):
            raise RejectedInput(f"identity of {x} is not preserved")
    for x, y, z in product(C.objects, repeat=3):
        fx, fy, fz = obj_map[x], obj_map[y], obj_map[z]
        for g in C.hom_objects(y, z):
            for f in C.hom_objects(x, y):
                if mor[x, z][C.compose(x, y, z, g, f)] != D.compose(fx, fy, fz, mor[y, z][g], mor[x, y][f]):
                    raise RejectedInput(f"composite ({g},{f}) in ({x},{y},{z}) is not preserved")
    return CatFunctor(obj_map, tuple(sorted(mor.items())))


def iter_category_functors(C: ConcreteCategory, D: ConcreteCategory):
    """All strict functors ``C -> D`` (discrete homs), in lexicographic order of the tables."""
    if not (C.has_discrete_homs and D.has_discrete_homs):
        raise RejectedInput("functor enumeration needs categories with discrete homs")
    pairs = C.pairs()
    slots = [(x, y, u) for x, y in pairs for u in C.hom_objects(x, y)]
    pos = {s: i for i, s in enumerate(slots)}
    # each composition fact is checked once its last slot is filled
    facts = [[] for _ in slots]
    for x, y, z in product(C.objects, repeat=3):
        for g in C.hom_objects(y, z):
            for f in C.hom_objects(x, y):
                tri = (pos[y, z, g], pos[x, y, f], pos[x, z, C.compose(x, y, z, g, f)])
                facts[max(tri)].append((x, y, z) + tri)
    cap = get_cap()
    seen = 0
    for obj in product(range(D.n_objects), repeat=C.n_objects):
        choice = [None] * len(slots)

        def go(i):
            nonlocal seen
            if i == len(slots):
                yield {(x, y): tuple(choice[pos[x, y, u]] for u in C.hom_objects(x, y))
                       for x, y in pairs}
                return
            x, y, u = slots[i]
            options = D.hom_objects(obj[x], obj[y])
            if x == y and u == C.identity(x):
                options = [D.identity(obj[x])]
            for v in options:
                seen += 1
                if seen > cap:
                    raise EnumerationOverflow("functor search", seen, cap)
                choice[i] = v
                if all(choice[h] == D.compose(obj[a], obj[b], obj[c], choice[g], choice[f])
                       for a, b, c, g, f, h in facts[i]):
                    yield from go(i + 1)
            choice[i] = None

        for mor in go(0):
            yield CatFunctor(obj, tuple(sorted(mor.items())))


def graph_of_functor(C: ConcreteCategory, D: ConcreteCategory, F: CatFunctor) -> ArrowlikeCategory:
    """Objects ``C + D``; ``hom(a, b) = hom_D(F a, b)``; nothing from ``D`` back to ``C``.

    ``c`` objects are realised as ``objPlus_D(F c)`` and a morphism ``u`` of
    ``C`` by the realisation of ``F u``, so every witness is borrowed from ``D``.
    """
    make_functor(C, D, F.obj_map, F.mor_map)
    Ft = F.table()
    na, nb = C.n_objects, D.n_objects
    n = na + nb

    def d_obj(x):
        return F.obj_map[x] if x < na else x - na

    def d_mor(x, y, u):
        """The D morphism standing for hom element ``u`` of ``(x, y)``."""
        return Ft[x, y][u] if x < na and y < na else u

    obj_plus = [D.obj_plus[d_obj(x)] for x in range(n)]
    hom, hom_plus = {}, {}
    for x, y in product(range(n), range(n)):
        if x >= na and y < na:
            E = empty()
            hom[x, y] = E
            hom_plus[x, y] = Realisation(E, obj_plus[x], obj_plus[y], (), ())
            continue
        H = C.hom[x, y] if x < na and y < na else D.hom[d_obj(x), d_obj(y)]
        R = D.hom_plus[d_obj(x), d_obj(y)]
        fs = [R.objects[d_mor(x, y, u)] for u in H.objects]
        hom[x, y] = H
        hom_plus[x, y] = Realisation(H, obj_plus[x], obj_plus[y], fs,
                                     [identity_natiso(G) for G in fs])
    ident = []
    for x in range(n):
        w = D.ident[d_obj(x)]
        ident.append(FiberElement(C.identity(x) if x < na else w.element, w.path))
    cmp = {}
    for x, y, z in product(range(n), repeat=3):
        if (x >= na and y < na) or (y >= na and z < na):
            continue
        for g in hom[y, z].objects:
            for f in hom[x, y].objects:
                w = D.cmp[d_obj(x), d_obj(y), d_obj(z), d_mor(y, z, g), d_mor(x, y, f)]
                if z < na:
                    element = C.compose(x, y, z, g, f)
                else:
                    element = w.element
                cmp[x, y, z, g, f] = FiberElement(element, w.path)
    G = ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp,
                         name=f"graph({C.name} -> {D.name})")
    return check_arrowlike(G, (A,) * na + (B,) * nb)


@dataclass(frozen=True)
class ExtractedFunctor:
    """Indices are relative to the ``A`` list and the ``B`` list of the arrowlike category."""
    functor: CatFunctor
    chosen: Tuple[Tuple[int, int], ...]     # per A object, (target B object, morphism)


def extract_functor(AC: ArrowlikeCategory) -> ExtractedFunctor:
    """Send ``a`` to the target of its first cocartesian morphism ``f_a``.

    ``u: a -> a2`` goes to the unique ``g`` with ``cmp(g, f_a) ~ cmp(f_a2, u)``,
    found by inverting the precomposition bijection.
    """
    C = AC.underlying
    ok, found = is_cocartesian_fibration(AC)
    if not ok:
        missing = [a for a, ws in found.items() if not ws]
        raise ExtractionError(f"objects {missing} have no cocartesian morphism")
    As, Bs = AC.a_objects, AC.b_objects
    a_pos = {a: i for i, a in enumerate(As)}
    b_pos = {b: i for i, b in enumerate(Bs)}
    chosen = {a: found[a][0] for a in As}
    obj_map = tuple(b_pos[chosen[a].b] for a in As)
    mor = {}
    for a, a2 in product(As, repeat=2):
        wa, wa2 = chosen[a], chosen[a2]
        b, b2 = wa.b, wa2.b
        K = C.hom[a, b2]
        table = []
        for u in C.hom_objects(a, a2):
            target = C.compose(a, a2, b2, wa2.f, u)
            inv = wa.evidence[b2].inverse
            table.append(inv.obj_map[target])
            if not K.connected(C.compose(a, b, b2, table[-1], wa.f), target):
                raise ExtractionError("precomposition inverse does not round trip")
        mor[a_pos[a], a_pos[a2]] = tuple(table)
    # functoriality, up to connectedness in the homs
    for a in As:
        i = a_pos[a]
        b = chosen[a].b
        if not C.hom[b, b].connected(mor[i, i][C.identity(a)], C.identity(b)):
            raise ExtractionError(f"identity of {a} is not preserved")
    for x, y, z in product(As, repeat=3):
        bx, by, bz = chosen[x].b, chosen[y].b, chosen[z].b
        for g in C.hom_objects(y, z):
            for f in C.hom_objects(x, y):
                lhs = mor[a_pos[x], a_pos[z]][C.compose(x, y, z, g, f)]
                rhs = C.compose(bx, by, bz, mor[a_pos[y], a_pos[z]][g], mor[a_pos[x], a_pos[y]][f])
                if not C.hom[bx, bz].connected(lhs, rhs):
                    raise ExtractionError("extracted action is not functorial")
    return ExtractedFunctor(CatFunctor(obj_map, tuple(sorted(mor.items()))),
                            tuple((b_pos[chosen[a].b], chosen[a].f) for a in As))


# uniqueness ---------------------------------------------------------------------------------------


@dataclass
class UniquenessReport:
    refused: bool
    passed: bool
    explanation: str = ""
    mediators: List[dict] = field(default_factory=list)


def cocart_uniqueness_check(AC: ArrowlikeCategory) -> UniquenessReport:
    """At most one cocartesian morphism per ``A`` object, up to isomorphism with equal target.

    For each pair ``f: a -> b`` and ``f2: a -> b2`` the mediators ``i: b -> b2``
    and ``j: b2 -> b`` (with ``cmp(i, f) ~ f2`` and ``cmp(j, f2) ~ f``) are
    reported together with whether ``cmp(j, i) ~ id``.
    """
    C = AC.underlying
    u = check_univalent(C)
    if not u.univalent:
        return UniquenessReport(True, False, "underlying category is not univalent: "
                                f"{u.violations[0]['kind']}")
    report = UniquenessReport(False, True)
    for a in AC.a_objects:
        ws = cocartesian_morphisms(AC, a)
        for w1, w2 in product(ws, repeat=2):
            if (w1.b, w1.f) >= (w2.b, w2.f):
                continue
            i = w1.evidence[w2.b].inverse.obj_map[w2.f]
            j = w2.evidence[w1.b].inverse.obj_map[w1.f]
            ji = C.compose(w1.b, w2.b, w1.b, j, i)
            same = w1.b == w2.b and C.hom[a, w1.b].connected(w1.f, w2.f)
            report.mediators.append({"object": a, "first": [w1.b, w1.f], "second": [w2.b, w2.f],
                                     "i": i, "j": j,
                                     "ji_is_identity": C.hom[w1.b, w1.b].connected(ji, C.identity(w1.b)),
                                     "identified": same})
            if not same:
                report.passed = False
    return report
