"""Concrete categories over finite groupoids.

A :class:`ConcreteCategory` packages objects, object realisations
(``obj_plus``), hom groupoids, hom realisations into functor groupoids,
and the identity/composition witnesses, which are points of homotopy
fibers of the hom realisation.  :func:`conformity_report` computes the
least ``k`` for which the data is ``k``-concrete and runs the law suites
that level requires.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from .config import get_cap
from .errors import EnumerationOverflow, LevelTooLowError, RejectedInput, StructuralValidationError
from .fingpd import (CONTRACTIBLE, GROUPOID, PROPOSITION, FinGroupoid, GFunctor, NatIso,
                     compose_functors, functor_groupoid, hcompose, identity_functor,
                     identity_natiso, is_equivalence, iter_functors, natural_isos,
                     trunc_level_groupoid, vcompose)

MAX_LEVEL = 3


@dataclass(frozen=True)
class FiberElement:
    """Point ``(element, path)`` of a hom realisation fiber; ``path: realise(element) => target``."""
    element: int
    path: NatIso


class Realisation:
    """Hom realisation ``hom(x, y) -> (obj_plus x -> obj_plus y)``.

    Objects of the hom groupoid go to functors and its morphisms to natural
    isomorphisms.  The functor groupoid itself is never materialised unless
    asked for; fibers are computed directly against the listed functors.
    """

    def __init__(self, hom: FinGroupoid, dom: FinGroupoid, cod: FinGroupoid, objects, morphisms):
        self.hom = hom
        self.dom = dom
        self.cod = cod
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self._level = None

    def validate(self, where="homPlus"):
        H = self.hom
        if len(self.objects) != H.n_objects or len(self.morphisms) != H.n_morphisms:
            raise StructuralValidationError(where, "table does not cover the hom groupoid")
        for c, F in enumerate(self.objects):
            if F.dom != self.dom or F.cod != self.cod:
                raise StructuralValidationError(f"{where}[{c}]", "functor has the wrong type")
            try:
                F.validate()
            except StructuralValidationError as e:
                raise StructuralValidationError(f"{where}[{c}]", str(e)) from None
        for m, a in enumerate(self.morphisms):
            if a.source != self.objects[H.src[m]] or a.target != self.objects[H.tgt[m]]:
                raise StructuralValidationError(f"{where} morphism {m}", "natural iso has wrong ends")
            try:
                a.validate()
            except StructuralValidationError as e:
                raise StructuralValidationError(f"{where} morphism {m}", str(e)) from None
        for x in H.objects:
            if self.morphisms[H.identities[x]] != identity_natiso(self.objects[x]):
                raise StructuralValidationError(f"{where} morphism {H.identities[x]}",
                                                "identity not sent to an identity")
        for (g, f), h in H.comp.items():
            if self.morphisms[h].components != vcompose(self.morphisms[g], self.morphisms[f]).components:
                raise StructuralValidationError(f"{where}", f"composite ({g}, {f}) not preserved")
        return self

    def fiber(self, h: GFunctor) -> FinGroupoid:
        """Homotopy fiber at ``h``: pairs ``(c, phi: realise(c) => h)``."""
        H, Y = self.hom, self.cod
        objs = [(c, a.components) for c in H.objects for a in natural_isos(self.objects[c], h)]
        by_c = {}
        for i, (c, _) in enumerate(objs):
            by_c.setdefault(c, []).append(i)
        mors = []
        for i, (c, phi) in enumerate(objs):
            for psi in H.hom_from(c):
                rho = self.morphisms[psi].components
                moved = None
                for j in by_c.get(H.tgt[psi], ()):
                    phi2 = objs[j][1]
                    if all(Y.compose(p2, r) == p for p2, r, p in zip(phi2, rho, phi)):
                        moved = j
                        break
                if moved is not None:
                    mors.append((i, moved, (i, moved, psi)))
        return FinGroupoid.build(
            objs, mors, lambda i: (i, i, H.identities[objs[i][0]]),
            lambda b, a: (a[0], b[1], H.compose(b[2], a[2])))

    def conjugacy_class(self, F: GFunctor):
        """Keys of every functor naturally isomorphic to ``F``."""
        Y = self.cod
        outs = [Y.hom_from(y) for y in F.obj_map]
        size = 1
        for o in outs:
            size *= len(o)
        if size > get_cap():
            raise EnumerationOverflow("conjugates of a functor", size, get_cap())
        X = self.dom
        keys = set()
        for alpha in product(*outs):
            obj = tuple(Y.tgt[a] for a in alpha)
            mor = tuple(Y.compose(alpha[X.tgt[m]], Y.compose(F.mor_map[m], Y.inverse(alpha[X.src[m]])))
                        for m in X.morphisms)
            keys.add((obj, mor))
        return keys

    def missed_functor(self) -> Optional[GFunctor]:
        """First functor (canonical order) outside the essential image, if any."""
        image = set()
        for F in {F.key: F for F in self.objects}.values():
            image |= self.conjugacy_class(F)
        cap = get_cap()
        for n, G in enumerate(iter_functors(self.dom, self.cod, check=False)):
            if G.key not in image:
                return G
            if n > cap:
                raise EnumerationOverflow("essential image scan", n, cap)
        return None

    def level_and_witness(self):
        """Truncation level of the realisation plus the fiber that attains it."""
        if self._level is None:
            level, witness = CONTRACTIBLE, None
            seen = set()
            for c, F in enumerate(self.objects):
                if F.key in seen:
                    continue
                seen.add(F.key)
                fib = self.fiber(F)
                lvl = trunc_level_groupoid(fib)
                if witness is None or lvl > level:
                    level, witness = lvl, FiberWitness.from_fiber(F, fib, lvl)
                if level == GROUPOID:
                    break
            if level < PROPOSITION:
                miss = self.missed_functor()
                if miss is not None:
                    level, witness = PROPOSITION, FiberWitness(miss, PROPOSITION, 0, (), 0)
            self._level = (level, witness)
        return self._level

    def trunc_level(self):
        return self.level_and_witness()[0]

    def as_functor(self) -> GFunctor:
        """Materialise as a functor into the canonical functor groupoid (subject to the cap)."""
        FG = functor_groupoid(self.dom, self.cod)
        obj = tuple(FG.label_index(F) for F in self.objects)
        index = {(FG.src[k], FG.tgt[k], FG.morphism_labels[k].components): k for k in FG.morphisms}
        mor = tuple(index[obj[self.hom.src[m]], obj[self.hom.tgt[m]], a.components]
                    for m, a in enumerate(self.morphisms))
        return GFunctor(self.hom, FG, obj, mor)


@dataclass(frozen=True)
class FiberWitness:
    """A fiber of a hom realisation: the point, its level, and one element per component."""
    point: GFunctor
    level: int
    n_components: int
    representatives: Tuple[Tuple[int, Tuple[int, ...]], ...]
    automorphisms: int

    @classmethod
    def from_fiber(cls, point, fib, level):
        comps = fib.components()
        reps = tuple(fib.object_labels[c[0]] for c in comps)
        autos = max((len(fib.loops(c[0])) for c in comps), default=0)
        return cls(point, level, len(comps), reps, autos)


class ConcreteCategory:
    """Objects ``0..n-1`` with realisations, hom groupoids and coherence witnesses.

    ``cmp`` is keyed by ``(x, y, z, g, f)`` for ``g`` in ``hom(y, z)`` and
    ``f`` in ``hom(x, y)``.  The optional ``assoc``, ``cmp_mor``,
    ``left_unitor`` and ``right_unitor`` tables supply higher data by hand;
    whatever is missing is derived from the fibers.
    """

    def __init__(self, n_objects, obj_plus, hom, hom_plus, ident, cmp, name="", notes=(),
                 assoc=None, cmp_mor=None, left_unitor=None, right_unitor=None):
        self.n_objects = n_objects
        self.obj_plus = tuple(obj_plus)
        self.hom = dict(hom)
        self.hom_plus = dict(hom_plus)
        self.ident = tuple(ident)
        self.cmp = dict(cmp)
        self.name = name
        self.notes = tuple(notes)
        self.assoc = dict(assoc or {})
        self.cmp_mor = dict(cmp_mor or {})
        self.left_unitor = dict(left_unitor or {})
        self.right_unitor = dict(right_unitor or {})
        self._coherence = None

    def __repr__(self):
        return f"ConcreteCategory({self.name or 'unnamed'}, objects={self.n_objects})"

    @property
    def objects(self):
        return range(self.n_objects)

    def pairs(self):
        return [(x, y) for x in self.objects for y in self.objects]

    def hom_objects(self, x, y):
        return self.hom[x, y].objects

    def hom_size(self, x, y):
        return self.hom[x, y].n_objects

    def realise(self, x, y, c) -> GFunctor:
        return self.hom_plus[x, y].objects[c]

    def identity(self, x):
        return self.ident[x].element

    def compose(self, x, y, z, g, f):
        """First component of the composition witness for ``g: y -> z`` after ``f: x -> y``."""
        return self.cmp[x, y, z, g, f].element

    @property
    def has_discrete_homs(self):
        return all(H.is_discrete for H in self.hom.values())

    def validate(self):
        """Check every component's type; errors name the failing component."""
        n = self.n_objects
        if len(self.obj_plus) != n:
            raise StructuralValidationError("objPlus", "need one realisation per object")
        for x, y in self.pairs():
            if (x, y) not in self.hom or (x, y) not in self.hom_plus:
                raise StructuralValidationError(f"hom({x},{y})", "missing")
            R = self.hom_plus[x, y]
            if R.hom != self.hom[x, y] or R.dom != self.obj_plus[x] or R.cod != self.obj_plus[y]:
                raise StructuralValidationError(f"homPlus({x},{y})", "realisation has the wrong type")
            R.validate(f"homPlus({x},{y})")
        if len(self.ident) != n:
            raise StructuralValidationError("ident", "need one identity witness per object")
        for x, w in enumerate(self.ident):
            where = f"ident({x})"
            if w.element not in self.hom[x, x].objects:
                raise StructuralValidationError(where, "element outside hom")
            _check_path(where, w.path, self.realise(x, x, w.element),
                        identity_functor(self.obj_plus[x]))
        for x, y, z in product(self.objects, repeat=3):
            for g in self.hom[y, z].objects:
                for f in self.hom[x, y].objects:
                    where = f"cmp({x},{y},{z};{g},{f})"
                    w = self.cmp.get((x, y, z, g, f))
                    if w is None:
                        raise StructuralValidationError(where, "missing")
                    if w.element not in self.hom[x, z].objects:
                        raise StructuralValidationError(where, "element outside hom")
                    target = compose_functors(self.realise(y, z, g), self.realise(x, y, f))
                    _check_path(where, w.path, self.realise(x, z, w.element), target)
        return self

    @property
    def coherence(self):
        if self._coherence is None:
            self._coherence = Coherence(self)
        return self._coherence


def _check_path(where, path, source, target):
    if path.source != source or path.target != target:
        raise StructuralValidationError(where, "path has the wrong endpoints")
    try:
        path.validate()
    except StructuralValidationError as e:
        raise StructuralValidationError(where, str(e)) from None


# derived higher structure ------------------------------------------------------------


class Coherence:
    """Associators, unitors and the action of composition on hom morphisms.

    Supplied tables win; otherwise each is the first hom morphism lying over
    the canonical path in the realisation, which is unique whenever the
    realisation is faithful (level <= 2).
    """

    def __init__(self, C: ConcreteCategory):
        self.C = C
        self._assoc = {}
        self._cmp_mor = {}

    def _lift(self, x, y, src, tgt, comps):
        """First morphism ``src -> tgt`` of ``hom(x, y)`` realised with the given components."""
        H = self.C.hom[x, y]
        R = self.C.hom_plus[x, y]
        for m in H.hom(src, tgt):
            if R.morphisms[m].components == comps:
                return m
        return None

    def triple_paths(self, x, y, z, w, h, g, f):
        """Paths from both bracketings of ``h.g.f`` down to the strict composite."""
        C = self.C
        hg = C.compose(y, z, w, h, g)
        gf = C.compose(x, y, z, g, f)
        left = vcompose(hcompose(C.cmp[y, z, w, h, g].path, identity_natiso(C.realise(x, y, f))),
                        C.cmp[x, y, w, hg, f].path)
        right = vcompose(hcompose(identity_natiso(C.realise(z, w, h)), C.cmp[x, y, z, g, f].path),
                         C.cmp[x, z, w, h, gf].path)
        return C.compose(x, y, w, hg, f), left, C.compose(x, z, w, h, gf), right

    def assoc(self, x, y, z, w, h, g, f):
        key = (x, y, z, w, h, g, f)
        if key in self.C.assoc:
            return self.C.assoc[key]
        if key not in self._assoc:
            L, pL, R, pR = self.triple_paths(*key)
            H = self.C.hom[x, w]
            Y = self.C.obj_plus[w]
            found = None
            for m in H.hom(L, R):
                rho = self.C.hom_plus[x, w].morphisms[m].components
                if tuple(Y.compose(b, a) for b, a in zip(pR.components, rho)) == pL.components:
                    found = m
                    break
            self._assoc[key] = found
        return self._assoc[key]

    def cmp_mor(self, x, y, z, alpha, beta):
        """Composite of hom morphisms ``alpha`` in hom(y, z) and ``beta`` in hom(x, y)."""
        key = (x, y, z, alpha, beta)
        if key in self.C.cmp_mor:
            return self.C.cmp_mor[key]
        if key not in self._cmp_mor:
            C = self.C
            Hyz, Hxy = C.hom[y, z], C.hom[x, y]
            g, g2 = Hyz.src[alpha], Hyz.tgt[alpha]
            f, f2 = Hxy.src[beta], Hxy.tgt[beta]
            if Hyz.identities[g] == alpha and Hxy.identities[f] == beta:
                self._cmp_mor[key] = C.hom[x, z].identities[C.compose(x, y, z, g, f)]
                return self._cmp_mor[key]
            w1, w2 = C.cmp[x, y, z, g, f], C.cmp[x, y, z, g2, f2]
            top = vcompose(hcompose(C.hom_plus[y, z].morphisms[alpha], C.hom_plus[x, y].morphisms[beta]),
                           w1.path)
            Z = C.obj_plus[z]
            found = None
            for m in C.hom[x, z].hom(w1.element, w2.element):
                rho = C.hom_plus[x, z].morphisms[m].components
                if tuple(Z.compose(b, a) for b, a in zip(w2.path.components, rho)) == top.components:
                    found = m
                    break
            self._cmp_mor[key] = found
        return self._cmp_mor[key]

    def left_unitor(self, x, y, f):
        """``cmp(ident(y), f) -> f``."""
        if (x, y, f) in self.C.left_unitor:
            return self.C.left_unitor[x, y, f]
        C = self.C
        i = C.identity(y)
        p = vcompose(hcompose(C.ident[y].path, identity_natiso(C.realise(x, y, f))),
                     C.cmp[x, y, y, i, f].path)
        return self._lift(x, y, C.compose(x, y, y, i, f), f, p.components)

    def right_unitor(self, x, y, f):
        """``cmp(f, ident(x)) -> f``."""
        if (x, y, f) in self.C.right_unitor:
            return self.C.right_unitor[x, y, f]
        C = self.C
        i = C.identity(x)
        p = vcompose(hcompose(identity_natiso(C.realise(x, y, f)), C.ident[x].path),
                     C.cmp[x, x, y, f, i].path)
        return self._lift(x, y, C.compose(x, x, y, f, i), f, p.components)


# law suites -----------------------------------------------------------------------------


@dataclass
class LawReport:
    name: str
    passed: bool
    checked: int
    violations: List[dict] = field(default_factory=list)
    note: str = ""


def check_unit_assoc(C: ConcreteCategory) -> LawReport:
    """Unit and associativity laws on first components, up to isomorphism in each hom."""
    violations = []
    checked = 0
    ob = C.objects
    for x, y in C.pairs():
        H = C.hom[x, y]
        iy, ix = C.identity(y), C.identity(x)
        for f in H.objects:
            checked += 2
            left = C.compose(x, y, y, iy, f)
            if not H.connected(left, f):
                violations.append({"law": "left unit", "objects": [x, y], "f": f, "got": left})
            right = C.compose(x, x, y, f, ix)
            if not H.connected(right, f):
                violations.append({"law": "right unit", "objects": [x, y], "f": f, "got": right})
    for x, y, z, w in product(ob, repeat=4):
        Hxw = C.hom[x, w]
        fs, gs, hs = C.hom[x, y].objects, C.hom[y, z].objects, C.hom[z, w].objects
        if not (fs and gs and hs):
            continue
        for g in gs:
            for h in hs:
                hg = C.compose(y, z, w, h, g)
                for f in fs:
                    checked += 1
                    lhs = C.compose(x, y, w, hg, f)
                    rhs = C.compose(x, z, w, h, C.compose(x, y, z, g, f))
                    if not Hxw.connected(lhs, rhs):
                        violations.append({"law": "assoc", "objects": [x, y, z, w],
                                           "h": h, "g": g, "f": f, "lhs": lhs, "rhs": rhs})
    return LawReport("unit/assoc", not violations, checked, violations)


def check_pentagon_triangle(C: ConcreteCategory) -> LawReport:
    """Pentagon and triangle identities as equations between hom morphisms."""
    if C.has_discrete_homs and not (C.assoc or C.cmp_mor or C.left_unitor or C.right_unitor):
        ua = check_unit_assoc(C)
        return LawReport("pentagon/triangle", ua.passed, 0, ua.violations,
                         note="discrete homs: both chains are identities")
    K = C.coherence
    violations = []
    checked = 0
    ob = C.objects

    def hcomp(x, z, b, a):
        return C.hom[x, z].compose(b, a)

    for x, y, z in product(ob, repeat=3):
        for g in C.hom[y, z].objects:
            for f in C.hom[x, y].objects:
                checked += 1
                a = K.assoc(x, y, y, z, g, C.identity(y), f)
                lam = K.left_unitor(x, y, f)
                rho = K.right_unitor(y, z, g)
                if None in (a, lam, rho):
                    violations.append({"law": "triangle", "objects": [x, y, z], "g": g, "f": f,
                                       "missing": "associator or unitor"})
                    continue
                g_lam = K.cmp_mor(x, y, z, C.hom[y, z].identities[g], lam)
                rho_f = K.cmp_mor(x, y, z, rho, C.hom[x, y].identities[f])
                if g_lam is None or rho_f is None or hcomp(x, z, g_lam, a) != rho_f:
                    violations.append({"law": "triangle", "objects": [x, y, z], "g": g, "f": f})
    for x, y, z, w, v in product(ob, repeat=5):
        fs, gs = C.hom[x, y].objects, C.hom[y, z].objects
        hs, ks = C.hom[z, w].objects, C.hom[w, v].objects
        if not (fs and gs and hs and ks):
            continue
        for f, g, h, k in product(fs, gs, hs, ks):
            checked += 1
            kh = C.compose(z, w, v, k, h)
            hg = C.compose(y, z, w, h, g)
            gf = C.compose(x, y, z, g, f)
            a1 = K.assoc(x, y, z, v, kh, g, f)
            a2 = K.assoc(x, z, w, v, k, h, gf)
            b1 = K.assoc(y, z, w, v, k, h, g)
            b2 = K.assoc(x, y, w, v, k, hg, f)
            b3 = K.assoc(x, y, z, w, h, g, f)
            if None in (a1, a2, b1, b2, b3):
                violations.append({"law": "pentagon", "objects": [x, y, z, w, v],
                                   "k": k, "h": h, "g": g, "f": f, "missing": "associator"})
                continue
            w1 = K.cmp_mor(x, y, v, b1, C.hom[x, y].identities[f])
            w3 = K.cmp_mor(x, w, v, C.hom[w, v].identities[k], b3)
            if w1 is None or w3 is None:
                violations.append({"law": "pentagon", "objects": [x, y, z, w, v],
                                   "k": k, "h": h, "g": g, "f": f, "missing": "whiskering"})
                continue
            chain1 = hcomp(x, v, a2, a1)
            chain2 = hcomp(x, v, w3, hcomp(x, v, b2, w1))
            if chain1 != chain2:
                violations.append({"law": "pentagon", "objects": [x, y, z, w, v],
                                   "k": k, "h": h, "g": g, "f": f,
                                   "chain1": chain1, "chain2": chain2})
    return LawReport("pentagon/triangle", not violations, checked, violations)


def required_suites(level):
    if level <= 1:
        return []
    if level == 2:
        return ["unit/assoc"]
    return ["unit/assoc", "pentagon/triangle"]


_SUITES = {"unit/assoc": check_unit_assoc, "pentagon/triangle": check_pentagon_triangle}


# conformity -------------------------------------------------------------------------------


@dataclass
class ConcretenessReport:
    per_pair: Dict[Tuple[int, int], int]
    conformity_level: int
    minimal_level: Optional[int]
    certified: Dict[int, bool]
    law_status: Dict[str, LawReport]
    fiber_witnesses: Dict[Tuple[int, int], FiberWitness]
    notes: Tuple[str, ...] = ()

    @property
    def worst_pair(self):
        if not self.per_pair:
            return None
        return max(self.per_pair, key=lambda p: (self.per_pair[p], [-v for v in p]))


def per_pair_levels(C: ConcreteCategory):
    levels, witnesses = {}, {}
    for x, y in C.pairs():
        lvl, wit = C.hom_plus[x, y].level_and_witness()
        levels[x, y] = lvl
        if wit is not None:
            witnesses[x, y] = wit
    return levels, witnesses


def conformity_report(C: ConcreteCategory, require=None, validate=True) -> ConcretenessReport:
    """Truncation level of every hom realisation and the laws needed at the least level.

    ``require`` adds another level whose law suites are run and whose
    certification is reported.
    """
    if validate:
        C.validate()
    levels, witnesses = per_pair_levels(C)
    conf = 2 + max(levels.values(), default=CONTRACTIBLE)
    wanted = sorted({conf} | ({require} if require is not None else set()))
    laws = {}
    certified = {}
    for k in wanted:
        if k < 0 or k > MAX_LEVEL:
            raise RejectedInput(f"level {k} outside 0..{MAX_LEVEL}")
        ok = k >= conf
        for suite in required_suites(k):
            if suite not in laws:
                laws[suite] = _SUITES[suite](C)
            ok = ok and laws[suite].passed
        certified[k] = ok
    minimal = conf if certified.get(conf) else None
    return ConcretenessReport(levels, conf, minimal, certified, laws, witnesses, C.notes)


@dataclass
class CertifiedView:
    category: ConcreteCategory
    level: int
    report: ConcretenessReport

    @property
    def passed(self):
        return self.report.certified[self.level]


def raise_level(C: ConcreteCategory, level) -> CertifiedView:
    """Re-certify ``C`` at ``level``; conformity at a lower level carries over."""
    report = conformity_report(C, require=level)
    if report.conformity_level > level:
        raise LevelTooLowError(
            f"{C.name or 'category'} needs level {report.conformity_level}, asked for {level}")
    return CertifiedView(C, level, report)


# equivalences and univalence -----------------------------------------------------------------


@dataclass(frozen=True)
class EquivWitness:
    level: int
    realised: object                  # EquivalenceWitness of the realisation
    left_inverse: Optional[int] = None
    right_inverse: Optional[int] = None
    paths: Tuple[Tuple[str, int], ...] = ()


def is_equiv(C: ConcreteCategory, x, y, f, level=1):
    """Whether ``f`` in ``hom(x, y)`` is an equivalence at ``level`` (0, 1 or 2).

    Level 0 asks that the realisation be an equivalence of groupoids; level 1
    also asks for ``g, g'`` in ``hom(y, x)`` with ``cmp(g, f) ~ id(x)`` and
    ``cmp(f, g') ~ id(y)``; level 2 asks for a single ``g`` with explicit hom
    morphisms ``cmp(g, f) -> id(x)`` and ``cmp(f, g) -> id(y)``.
    """
    if level not in (0, 1, 2):
        raise RejectedInput(f"equivalence level {level} outside 0..2")
    if f not in C.hom[x, y].objects:
        raise RejectedInput(f"{f} is not an object of hom({x},{y})")
    ok, realised = is_equivalence(C.realise(x, y, f))
    if not ok:
        return False, None
    if level == 0:
        return True, EquivWitness(0, realised)
    Hxx, Hyy = C.hom[x, x], C.hom[y, y]
    ix, iy = C.identity(x), C.identity(y)
    back = C.hom[y, x].objects
    left = next((g for g in back if Hxx.connected(C.compose(x, y, x, g, f), ix)), None)
    right = next((g for g in back if Hyy.connected(C.compose(y, x, y, f, g), iy)), None)
    if left is None or right is None:
        return False, None
    if level == 1:
        return True, EquivWitness(1, realised, left, right)
    for g in back:
        gf, fg = C.compose(x, y, x, g, f), C.compose(y, x, y, f, g)
        if Hxx.connected(gf, ix) and Hyy.connected(fg, iy):
            paths = (("cmp(g,f)->id", Hxx.hom(gf, ix)[0]), ("cmp(f,g)->id", Hyy.hom(fg, iy)[0]))
            return True, EquivWitness(2, realised, g, g, paths)
    return False, None


@dataclass
class UnivalenceResult:
    univalent: bool
    level: int
    violations: List[dict]


def check_univalent(C: ConcreteCategory, level=None) -> UnivalenceResult:
    """Discrete objects: no equivalences between distinct objects, one self-equivalence class each."""
    if level is None:
        levels, _ = per_pair_levels(C)
        level = min(max(2 + max(levels.values(), default=CONTRACTIBLE), 0), 2)
    violations = []
    for x, y in C.pairs():
        H = C.hom[x, y]
        equivs = [f for f in H.objects if is_equiv(C, x, y, f, level)[0]]
        if x != y and equivs:
            violations.append({"kind": "equivalence between distinct objects",
                               "objects": [x, y], "equivalences": equivs})
        if x == y:
            classes = [comp for comp in H.components() if any(f in comp for f in equivs)]
            if len(classes) != 1:
                violations.append({"kind": "self-equivalences", "object": x,
                                   "classes": len(classes), "equivalences": equivs})
    return UnivalenceResult(not violations, level, violations)


# full subcategories --------------------------------------------------------------------------


def full_subcategory(obj_plus, name="full subcategory") -> ConcreteCategory:
    """Every functor between the given groupoids; the realisation is the identity."""
    obj_plus = list(obj_plus)
    n = len(obj_plus)
    hom, hom_plus = {}, {}
    for x in range(n):
        for y in range(n):
            FG = functor_groupoid(obj_plus[x], obj_plus[y])
            hom[x, y] = FG
            hom_plus[x, y] = Realisation(FG, obj_plus[x], obj_plus[y], FG.object_labels,
                                         FG.morphism_labels)
    ident = []
    for x in range(n):
        I = identity_functor(obj_plus[x])
        ident.append(FiberElement(hom[x, x].label_index(I), identity_natiso(I)))
    cmp = {}
    for x, y, z in product(range(n), repeat=3):
        for g, G in enumerate(hom[y, z].object_labels):
            for f, F in enumerate(hom[x, y].object_labels):
                GF = compose_functors(G, F)
                cmp[x, y, z, g, f] = FiberElement(hom[x, z].label_index(GF), identity_natiso(GF))
    return ConcreteCategory(n, obj_plus, hom, hom_plus, ident, cmp, name=name)


def strict_category(n_objects, obj_plus, hom_sizes, realise, identity, compose, name="", notes=()):
    """Concrete category with discrete homs whose realisation is strictly functorial.

    ``realise(x, y, c)`` gives the realising functor of hom element ``c``;
    ``identity(x)`` and ``compose(x, y, z, g, f)`` give hom elements.  Paths
    are identities; validation catches any realisation that is not strict.
    """
    from .fingpd import discrete
    hom, hom_plus = {}, {}
    for x in range(n_objects):
        for y in range(n_objects):
            H = discrete(hom_sizes[x, y])
            fs = [realise(x, y, c) for c in range(H.n_objects)]
            hom[x, y] = H
            hom_plus[x, y] = Realisation(H, obj_plus[x], obj_plus[y], fs,
                                         [identity_natiso(F) for F in fs])
    ident = []
    for x in range(n_objects):
        i = identity(x)
        ident.append(FiberElement(i, identity_natiso(hom_plus[x, x].objects[i])))
    cmp = {}
    for x, y, z in product(range(n_objects), repeat=3):
        for g in range(hom[y, z].n_objects):
            for f in range(hom[x, y].n_objects):
                c = compose(x, y, z, g, f)
                cmp[x, y, z, g, f] = FiberElement(c, identity_natiso(hom_plus[x, z].objects[c]))
    return ConcreteCategory(n_objects, obj_plus, hom, hom_plus, ident, cmp, name=name, notes=notes)
